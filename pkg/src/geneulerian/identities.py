"""Exact verification of the identities satisfied by ``A_{a,b,r}(p, i)``.

Each ``check_*`` function returns an :class:`IdentityReport`.  A report passes
iff it has no counterexamples; every counterexample carries both exact sides
as decimal strings.  Grid points too large to enumerate are listed under
``skipped`` instead of failing.
"""

from __future__ import annotations

import json
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from typing import Any

from .errors import BudgetExceededError
from .eulerian import (
    eulerian_explicit,
    eulerian_recurrence,
    gen_eulerian_row,
    nonterminal_count_closed,
    normalize_b,
)
from .exact_arith import binomial, total_words
from .segmentation import Variant, is_extraneous, scm_to_word, word_to_scm
from .words import (
    DEFAULT_BUDGET,
    Params,
    augment,
    check_budget,
    descent_distribution,
    enumerate_words,
    format_word,
    nonterminal_distribution,
    nonterminal_weak_descents,
    weak_descents,
)

__all__ = [
    "DEFAULT_N_MAX",
    "Counterexample",
    "IdentityReport",
    "check_augmentation",
    "check_b_normalization",
    "check_classical",
    "check_column_count",
    "check_column_counts",
    "check_nonterminal_theorem",
    "check_oracle_equivalence",
    "check_row_sum",
    "check_scm_bijection",
    "check_sum_identity",
    "check_worpitzky",
    "merge_reports",
    "parameter_grid",
]

DEFAULT_N_MAX = 15


@dataclass(frozen=True)
class Counterexample:
    params: dict[str, int]
    lhs: str
    rhs: str

    def to_dict(self) -> dict[str, Any]:
        return {"params": dict(self.params), "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class IdentityReport:
    identity: str
    grid: list[dict[str, int]] = field(default_factory=list)
    counterexamples: list[Counterexample] = field(default_factory=list)
    skipped: list[dict[str, Any]] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "fail" if self.counterexamples else "pass"

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def record(self, point: dict[str, int], lhs: Any, rhs: Any) -> bool:
        """Add ``point`` to the grid; store a counterexample if ``lhs != rhs``."""
        self.grid.append(point)
        if lhs != rhs:
            self.counterexamples.append(Counterexample(point, _text(lhs), _text(rhs)))
            return False
        return True

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "identity": self.identity,
            "status": self.status,
            "grid_size": len(self.grid),
            "counterexamples": [c.to_dict() for c in self.counterexamples],
        }
        if self.skipped:
            out["skipped"] = list(self.skipped)
        return out

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _text(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(str(v) for v in value) + "]"
    return str(value)


def merge_reports(identity: str, reports: Iterable[IdentityReport]) -> IdentityReport:
    """Concatenate reports in the order given."""
    merged = IdentityReport(identity)
    for rep in reports:
        merged.grid.extend(rep.grid)
        merged.counterexamples.extend(rep.counterexamples)
        merged.skipped.extend(rep.skipped)
    return merged


def parameter_grid(
    a_max: int, r_max: int, p_max: int, b: int | None = None
) -> list[Params]:
    """All Params with 1 <= a <= a_max, 0 <= b < a (or the single given b), r, p in range."""
    grid = []
    for a in range(1, a_max + 1):
        bs = range(a) if b is None else ([b] if b < a else [])
        for b_ in bs:
            for r in range(1, r_max + 1):
                for p in range(1, p_max + 1):
                    grid.append(Params(a, b_, r, p))
    return grid


def _point(params: Params, **extra: int) -> dict[str, int]:
    d = params.as_dict()
    d.update(extra)
    return d


def check_worpitzky(params: Params, n_max: int = DEFAULT_N_MAX) -> IdentityReport:
    """C(an+b, r)^p == sum_i A(p, i) C(n + rp - i, rp) for n = 0..n_max."""
    report = IdentityReport("worpitzky")
    a, b, r, p, rp = params.a, params.b, params.r, params.p, params.n
    row = gen_eulerian_row(params).values
    for n in range(n_max + 1):
        lhs = binomial(a * n + b, r) ** p
        rhs = sum(row[i] * binomial(n + rp - i, rp) for i in range(rp + 1))
        report.record(_point(params, n=n), lhs, rhs)
    return report


def check_sum_identity(params: Params, n_max: int = DEFAULT_N_MAX) -> IdentityReport:
    """sum_{k<=n} C(ak+b, r)^p == sum_i A(p, i) C(n + 1 + rp - i, rp + 1)."""
    report = IdentityReport("sum")
    a, b, r, p, rp = params.a, params.b, params.r, params.p, params.n
    row = gen_eulerian_row(params).values
    lhs = 0
    for n in range(n_max + 1):
        lhs += binomial(a * n + b, r) ** p
        rhs = sum(row[i] * binomial(n + 1 + rp - i, rp + 1) for i in range(rp + 1))
        report.record(_point(params, n=n), lhs, rhs)
    return report


def check_row_sum(params: Params) -> IdentityReport:
    report = IdentityReport("rowsum")
    row = gen_eulerian_row(params).values
    report.record(_point(params), sum(row), total_words(params.p, params.r, params.a))
    return report


def _budgeted(
    identity: str,
    grid: Sequence[Params],
    budget: int,
    body: Callable[[Params, IdentityReport], None],
) -> IdentityReport:
    report = IdentityReport(identity)
    for params in grid:
        try:
            check_budget(params, budget)
        except BudgetExceededError as exc:
            report.skipped.append({"params": params.as_dict(), "reason": str(exc)})
            continue
        body(params, report)
    return report


def check_oracle_equivalence(
    grid: Sequence[Params], budget: int = DEFAULT_BUDGET
) -> IdentityReport:
    """Closed-form rows against brute-force weak-descent counts."""

    def body(params: Params, report: IdentityReport) -> None:
        report.record(
            _point(params),
            list(gen_eulerian_row(params).values),
            descent_distribution(params, budget),
        )

    return _budgeted("oracle", grid, budget, body)


def check_nonterminal_theorem(
    grid: Sequence[Params], budget: int = DEFAULT_BUDGET
) -> IdentityReport:
    """Closed-form non-terminal counts against enumeration, plus the index shift to ``A``.

    ``b`` plays no role in non-terminal descents; grid points are used with b = 0.
    """

    def body(params: Params, report: IdentityReport) -> None:
        a, r, p = params.a, params.r, params.p
        base = Params(a, 0, r, p)
        closed = [nonterminal_count_closed(a, r, p, i) for i in range(base.n)]
        report.record(_point(base), closed, nonterminal_distribution(base, budget))
        shifted = list(gen_eulerian_row(base).values[1:])
        report.record(_point(base, shift=1), closed, shifted)

    return _budgeted("nonterminal", grid, budget, body)


def check_column_count(n: int, rp: int, i: int) -> IdentityReport:
    """The two column-assignment counts behind the summed and plain identities.

    Summed form: sum_l C(n+1, l) C(rp-i, l-i-1) == C(n+1+rp-i, rp+1); the
    middle display with C(rp-i, rp-l+1) is checked too.  Plain form (final
    column forced): sum_l C(n, l-1) C(rp-i, l-i-1) == C(n+rp-i, rp).
    """
    report = IdentityReport("columns")
    ls = range(0, n + 2)
    summed = sum(binomial(n + 1, l) * binomial(rp - i, l - i - 1) for l in ls)
    summed_mid = sum(binomial(n + 1, l) * binomial(rp - i, rp - l + 1) for l in ls)
    target = binomial(n + 1 + rp - i, rp + 1)
    report.record({"n": n, "rp": rp, "i": i, "form": 0}, summed, target)
    report.record({"n": n, "rp": rp, "i": i, "form": 1}, summed_mid, target)
    plain = sum(binomial(n, l - 1) * binomial(rp - i, l - i - 1) for l in ls)
    plain_mid = sum(binomial(n, l - 1) * binomial(rp - i, rp - l + 1) for l in ls)
    target = binomial(n + rp - i, rp)
    report.record({"n": n, "rp": rp, "i": i, "form": 2}, plain, target)
    report.record({"n": n, "rp": rp, "i": i, "form": 3}, plain_mid, target)
    return report


def check_column_counts(n_max: int = 10, rp_max: int = 8) -> IdentityReport:
    return merge_reports(
        "columns",
        (
            check_column_count(n, rp, i)
            for n in range(n_max + 1)
            for rp in range(rp_max + 1)
            for i in range(rp + 1)
        ),
    )


def _variants(params: Params) -> Iterator[tuple[Variant, int]]:
    if params.b == 0:
        yield Variant.NONTERMINAL, 0
    yield Variant.THRESHOLDED, params.b


def check_scm_bijection(
    grid: Sequence[Params], budget: int = DEFAULT_BUDGET
) -> IdentityReport:
    """Round trips, extraneous-freeness and class sizes for word_to_scm.

    For each word and each applicable variant: ``scm_to_word`` undoes
    ``word_to_scm``, no wall of the image is extraneous, and the image has
    one more segment than the word has (non-terminal or thresholded) weak
    descents.  Class sizes by segment count are compared with the descent
    distribution.
    """

    def body(params: Params, report: IdentityReport) -> None:
        variants = list(_variants(params))
        sizes = {v: [0] * (params.n + 2) for v, _ in variants}
        bad = {"roundtrip": 0, "extraneous": 0, "segments": 0}
        first_bad: dict[str, tuple[str, str]] = {}
        for w in enumerate_words(params, budget):
            for variant, b in variants:
                s = word_to_scm(w, variant, b)
                back = scm_to_word(s)
                if back.entries != w.entries:
                    bad["roundtrip"] += 1
                    first_bad.setdefault("roundtrip", (format_word(w), format_word(back)))
                for k in range(1, s.wall_count + 1):
                    if is_extraneous(s, k):
                        bad["extraneous"] += 1
                        first_bad.setdefault("extraneous", (str(s), f"wall {k}"))
                        break
                if variant is Variant.NONTERMINAL:
                    expected = nonterminal_weak_descents(w) + 1
                else:
                    expected = weak_descents(w, b) + 1
                if len(s.segments) != expected:
                    bad["segments"] += 1
                    first_bad.setdefault("segments", (str(s), str(expected)))
                sizes[variant][len(s.segments)] += 1
        for check, count in bad.items():
            point = _point(params, **{check: 1})
            report.grid.append(point)
            if count:
                lhs, rhs = first_bad[check]
                report.counterexamples.append(Counterexample(point, lhs, rhs))
        for variant, _ in variants:
            if variant is Variant.NONTERMINAL:
                descents = nonterminal_distribution(params, budget)
                expected_sizes = [0] + descents + [0]
            else:
                expected_sizes = [0] + descent_distribution(params, budget)
            report.record(
                _point(params, nonterminal=int(variant is Variant.NONTERMINAL)),
                sizes[variant],
                expected_sizes,
            )

    return _budgeted("scm", grid, budget, body)


def check_augmentation(
    grid: Sequence[Params], budget: int = DEFAULT_BUDGET
) -> IdentityReport:
    """Appending ``1^{c_{b+1}}`` adds exactly one weak descent to every word."""

    def body(params: Params, report: IdentityReport) -> None:
        b = params.b
        failures = [
            w
            for w in enumerate_words(params, budget)
            if weak_descents(augment(w, b), b) != weak_descents(w, b) + 1
        ]
        if failures:
            w = failures[0]
            report.record(
                _point(params), weak_descents(augment(w, b), b), weak_descents(w, b) + 1
            )
        else:
            report.record(_point(params), 0, 0)

    return _budgeted("augment", grid, budget, body)


def check_b_normalization(
    a: int, b_max: int, r: int, p: int, n_max: int = DEFAULT_N_MAX
) -> IdentityReport:
    """C(an+b, r)^p == C(a(n+shift) + b_reduced, r)^p for b = 0..b_max, n = 0..n_max."""
    report = IdentityReport("normalize")
    for b in range(b_max + 1):
        shift, b_reduced = normalize_b(a, b, r)
        for n in range(n_max + 1):
            lhs = binomial(a * n + b, r) ** p
            rhs = binomial(a * (n + shift) + b_reduced, r) ** p
            report.record({"a": a, "b": b, "r": r, "p": p, "n": n}, lhs, rhs)
    return report


def check_classical(p_max: int = 8, n_max: int = 20, explicit_p_max: int = 10) -> IdentityReport:
    """Reduction to the ordinary Eulerian numbers.

    Checks the explicit formula against the recurrence, ``A_{1,0,1}(p, i)``
    against the recurrence row shifted by one, and ``n^p = sum <p,i> C(n+i, p)``.
    """
    report = IdentityReport("classical")
    for p in range(1, explicit_p_max + 1):
        rec = list(eulerian_recurrence(p).values)
        report.record({"p": p, "form": 0}, [eulerian_explicit(p, i) for i in range(p)], rec)
    for p in range(1, p_max + 1):
        rec = list(eulerian_recurrence(p).values)
        report.record(
            {"p": p, "form": 1}, list(gen_eulerian_row(Params(1, 0, 1, p)).values), [0] + rec
        )
        for n in range(n_max + 1):
            rhs = sum(rec[i] * binomial(n + i, p) for i in range(p))
            report.record({"p": p, "n": n, "form": 2}, n**p, rhs)
    return report
