"""Command-line interface.

Subcommands::

    geneulerian table     --a A --b B --r R --p P [--format csv|json]
    geneulerian verify    IDENTITY [grid flags] [--n-max N] [--format json|csv]
    geneulerian enumerate --a A --b B --r R --p P [--by-descents] [--format text|csv|json]
    geneulerian stats     WORD --a A --b B --r R --p P [--format text|json]

Exit status: 0 success or pass, 1 verification failure, 2 usage, validation
or budget error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Sequence

from . import identities as ids
from .errors import BudgetExceededError, GenEulerianError
from .eulerian import gen_eulerian_row, normalize_b
from .segmentation import Variant, word_to_scm
from .words import (
    DEFAULT_BUDGET,
    Params,
    check_budget,
    descent_distribution,
    enumerate_words,
    format_word,
    nonterminal_weak_descents,
    parse_word,
    weak_descents,
)

IDENTITIES = (
    "worpitzky",
    "sum",
    "rowsum",
    "oracle",
    "nonterminal",
    "scm",
    "columns",
    "normalize",
    "augment",
    "classical",
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Bad invocation detected after argument parsing; exits with status 2."""


def _positive(text: str) -> int:
    value = _integer(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonnegative(text: str) -> int:
    value = _integer(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def refusal_message(a: int, b: int, r: int) -> str:
    shift, b_reduced = normalize_b(a, b, r)
    return (
        f"refusing b={b} >= a={a}: weak descents (and so A_{{a,b,r}}(p,i) as a count) "
        f"are only defined for 0 <= b < a. Use the normalization "
        f"C({a}n+{b}, {r})^p = C({a}(n+{shift})+{b_reduced}, {r})^p, i.e. b_reduced={b_reduced} "
        f"with n shifted by {shift}; 'verify normalize' checks this identity."
    )


def _params(args: argparse.Namespace) -> Params:
    params = Params(args.a, args.b, args.r, args.p)
    if not params.combinatorial:
        raise UsageError(refusal_message(params.a, params.b, params.r))
    return params


def _add_point_flags(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--a", type=_positive, required=required, help="number of colors")
    parser.add_argument(
        "--b", type=_nonnegative, default=None if not required else 0,
        help="terminal-descent threshold (default 0)",
    )
    parser.add_argument("--r", type=_positive, required=required, help="multiplicity")
    parser.add_argument("--p", type=_positive, required=required, help="number of symbols")


def _add_budget(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--budget", type=_positive, default=DEFAULT_BUDGET,
        help=f"maximum number of words to enumerate (default {DEFAULT_BUDGET})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geneulerian",
        description="Generalized Eulerian numbers A_{a,b,r}(p,i) and colored multipermutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="print A_{a,b,r}(p,i) for i = 0..rp")
    _add_point_flags(table)
    table.add_argument("--format", choices=("csv", "json"), default="csv")

    verify = sub.add_parser("verify", help="check an identity exactly over a grid")
    verify.add_argument("identity", choices=IDENTITIES)
    _add_point_flags(verify, required=False)
    verify.add_argument("--a-max", type=_positive)
    verify.add_argument("--r-max", type=_positive)
    verify.add_argument("--p-max", type=_positive)
    verify.add_argument("--b-max", type=_nonnegative, help="normalize: largest b (default 2a)")
    verify.add_argument("--rp-max", type=_nonnegative, default=8, help="columns: largest rp")
    verify.add_argument("--n-max", type=_nonnegative, default=ids.DEFAULT_N_MAX)
    verify.add_argument("--format", choices=("json", "csv"), default="json")
    _add_budget(verify)

    enum = sub.add_parser("enumerate", help="list every word with its weak-descent count")
    _add_point_flags(enum)
    enum.add_argument("--by-descents", action="store_true", help="print the distribution only")
    enum.add_argument("--format", choices=("text", "csv", "json"), default="text")
    _add_budget(enum)

    stats = sub.add_parser("stats", help="descent statistics and SCM of one word")
    stats.add_argument("word", help='word such as "2.1 4.1 1.3 3.3"')
    _add_point_flags(stats)
    stats.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def _csv(rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def cmd_table(args: argparse.Namespace, out) -> int:
    params = _params(args)
    values = gen_eulerian_row(params).values
    if args.format == "json":
        doc = {
            "params": params.as_dict(),
            "rows": [{"i": i, "A": str(v)} for i, v in enumerate(values)],
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(_csv([("i", "A")] + [(i, v) for i, v in enumerate(values)]))
    return EXIT_OK


def _axis(fixed: int | None, top: int | None, name: str) -> list[int]:
    if fixed is not None:
        return [fixed]
    if top is not None:
        return list(range(1, top + 1))
    raise UsageError(f"give --{name} or --{name}-max")


def _grid(args: argparse.Namespace) -> list[Params]:
    grid = []
    for a in _axis(args.a, args.a_max, "a"):
        if args.b is not None:
            if args.b >= a:
                raise UsageError(refusal_message(a, args.b, args.r or 1))
            bs = [args.b]
        else:
            bs = list(range(a))
        for b in bs:
            for r in _axis(args.r, args.r_max, "r"):
                for p in _axis(args.p, args.p_max, "p"):
                    grid.append(Params(a, b, r, p))
    return grid


def run_verify(args: argparse.Namespace) -> ids.IdentityReport:
    name = args.identity
    if name == "columns":
        return ids.check_column_counts(args.n_max, args.rp_max)
    if name == "classical":
        return ids.check_classical(args.p_max or 8, args.n_max)
    if name == "normalize":
        reports = []
        for a in _axis(args.a, args.a_max, "a"):
            b_max = args.b_max if args.b_max is not None else 2 * a
            for r in _axis(args.r, args.r_max, "r"):
                for p in _axis(args.p, args.p_max, "p"):
                    reports.append(ids.check_b_normalization(a, b_max, r, p, args.n_max))
        return ids.merge_reports("normalize", reports)
    grid = _grid(args)
    if name == "worpitzky":
        return ids.merge_reports(name, (ids.check_worpitzky(q, args.n_max) for q in grid))
    if name == "sum":
        return ids.merge_reports(name, (ids.check_sum_identity(q, args.n_max) for q in grid))
    if name == "rowsum":
        return ids.merge_reports(name, (ids.check_row_sum(q) for q in grid))
    if name == "oracle":
        return ids.check_oracle_equivalence(grid, args.budget)
    if name == "nonterminal":
        return ids.check_nonterminal_theorem([q for q in grid if q.b == 0], args.budget)
    if name == "scm":
        return ids.check_scm_bijection(grid, args.budget)
    if name == "augment":
        return ids.check_augmentation(grid, args.budget)
    raise UsageError(f"unknown identity {name!r}")  # pragma: no cover


def _report_csv(report: ids.IdentityReport) -> str:
    rows: list[Sequence[object]] = [("identity", "status", "grid_size", "params", "lhs", "rhs")]
    head = (report.identity, report.status, len(report.grid))
    if not report.counterexamples:
        rows.append(head + ("", "", ""))
    for c in report.counterexamples:
        point = ";".join(f"{k}={v}" for k, v in c.params.items())
        rows.append(head + (point, c.lhs, c.rhs))
    return _csv(rows)


def cmd_verify(args: argparse.Namespace, out) -> int:
    report = run_verify(args)
    if args.format == "csv":
        out.write(_report_csv(report))
    else:
        out.write(report.to_json() + "\n")
    if report.counterexamples:
        return EXIT_FAIL
    if report.skipped:
        sys.stderr.write(f"{len(report.skipped)} grid point(s) skipped: over budget\n")
        return EXIT_USAGE
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace, out) -> int:
    params = _params(args)
    check_budget(params, args.budget)
    if args.by_descents:
        dist = descent_distribution(params, args.budget)
        if args.format == "json":
            doc = {"params": params.as_dict(), "distribution": [str(v) for v in dist]}
            out.write(json.dumps(doc, indent=2) + "\n")
        elif args.format == "csv":
            out.write(_csv([("i", "count")] + [(i, v) for i, v in enumerate(dist)]))
        else:
            out.write("[" + ", ".join(str(v) for v in dist) + "]\n")
        return EXIT_OK
    words = ((format_word(w), weak_descents(w, params.b)) for w in enumerate_words(params, args.budget))
    if args.format == "json":
        doc = {
            "params": params.as_dict(),
            "words": [{"word": text, "weak_descents": d} for text, d in words],
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    elif args.format == "csv":
        out.write(_csv([("word", "weak_descents")] + list(words)))
    else:
        for text, d in words:
            out.write(f"{text}  {d}\n")
    return EXIT_OK


def cmd_stats(args: argparse.Namespace, out) -> int:
    params = _params(args)
    w = parse_word(args.word, params)
    variant = Variant.NONTERMINAL if params.b == 0 else Variant.THRESHOLDED
    scm = word_to_scm(w, variant, params.b)
    doc = {
        "word": format_word(w),
        "params": params.as_dict(),
        "nonterminal_weak_descents": nonterminal_weak_descents(w),
        "weak_descents": weak_descents(w, params.b),
        "scm_variant": variant.value,
        "scm": str(scm),
    }
    if args.format == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        for key in ("word", "nonterminal_weak_descents", "weak_descents", "scm_variant", "scm"):
            out.write(f"{key}: {doc[key]}\n")
    return EXIT_OK


COMMANDS = {
    "table": cmd_table,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "stats": cmd_stats,
}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage and 0 for --help
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except BudgetExceededError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (UsageError, GenEulerianError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
