import itertools

import pytest
from hypothesis import given, strategies as st

from geneulerian.errors import (
    BudgetExceededError,
    CombinatorialRangeError,
    WordSyntaxError,
    WordValidationError,
)
from geneulerian.eulerian import eulerian_recurrence
from geneulerian.words import (
    ColoredEntry,
    ColoredWord,
    Params,
    augment,
    compare,
    descent_distribution,
    enumerate_words,
    format_word,
    nonterminal_distribution,
    nonterminal_weak_descents,
    parse_word,
    weak_descents,
)

from conftest import (
    EXAMPLE_PARAMS,
    EXAMPLE_WORD,
    SMALL_GRID,
    as_word,
    brute_distribution,
    brute_words,
)

E = ColoredEntry


def w(text, a, b, r, p):
    return parse_word(text, Params(a, b, r, p))


class TestParams:
    @pytest.mark.parametrize("kw", [dict(a=0, b=0, r=1, p=1), dict(a=1, b=-1, r=1, p=1),
                                    dict(a=1, b=0, r=0, p=1), dict(a=1, b=0, r=1, p=0)])
    def test_invalid(self, kw):
        with pytest.raises(ValueError):
            Params(**kw)

    def test_b_at_least_a_is_constructible_but_not_combinatorial(self):
        params = Params(1, 4, 3, 2)
        assert not params.combinatorial
        with pytest.raises(CombinatorialRangeError):
            params.require_combinatorial()


class TestCompare:
    def test_color_dominates(self):
        assert compare(E(4, 1), E(1, 3)) == -1
        assert compare(E(1, 2), E(3, 1)) == 1
        assert compare(E(2, 2), E(2, 2)) == 0

    def test_chain(self):
        # 1^1 < 2^1 < ... < p^1 < 1^2 < ... < p^a
        p, a = 4, 3
        chain = [E(v, c) for c in range(1, a + 1) for v in range(1, p + 1)]
        assert sorted(chain[::-1]) == chain
        assert all(compare(x, y) == -1 for x, y in zip(chain, chain[1:]))

    def test_total_order_on_all_pairs(self):
        entries = [E(v, c) for v in range(1, 4) for c in range(1, 4)]
        for x, y in itertools.product(entries, repeat=2):
            assert compare(x, y) == -compare(y, x)
            assert (compare(x, y) == 0) == (x == y)
        for x, y, z in itertools.product(entries, repeat=3):
            if compare(x, y) <= 0 and compare(y, z) <= 0:
                assert compare(x, z) <= 0

    def test_operators_agree(self):
        assert E(4, 1) < E(1, 3)
        assert E(1, 2) > E(3, 1)
        assert E(2, 2) >= E(2, 2)


class TestDescents:
    def test_worked_example(self):
        word = parse_word(EXAMPLE_WORD, EXAMPLE_PARAMS)
        assert nonterminal_weak_descents(word) == 3
        assert weak_descents(word, 0) == 4

    def test_increasing_word_has_none(self):
        assert nonterminal_weak_descents(w("1.1 2.1 3.1 1.2 2.2 3.2", 2, 0, 2, 3)) == 0

    def test_equal_neighbours_are_weak_descents(self):
        word = w("1.1 1.1", 1, 0, 2, 1)
        assert nonterminal_weak_descents(word) == 1
        assert weak_descents(word, 0) == 2

    def test_terminal_rule(self):
        assert weak_descents(w("1.1", 2, 1, 1, 1), 1) == 0
        assert weak_descents(w("1.2", 2, 1, 1, 1), 1) == 1

    @pytest.mark.parametrize("params", SMALL_GRID[:20], ids=str)
    def test_range_and_monotone_in_b(self, params):
        for seq in brute_words(params.p, params.r, params.a):
            word = as_word(seq, params)
            counts = [weak_descents(word, b) for b in range(params.a)]
            assert all(0 <= c <= params.n for c in counts)
            assert counts == sorted(counts, reverse=True)


class TestEnumerate:
    def test_two_colors_one_symbol(self):
        assert [format_word(x) for x in enumerate_words(Params(2, 0, 1, 1))] == ["1.1", "1.2"]

    def test_two_symbols_one_color(self):
        assert [format_word(x) for x in enumerate_words(Params(1, 0, 1, 2))] == ["1.1 2.1", "2.1 1.1"]

    def test_doubled_symbol_two_colors(self):
        words = [format_word(x) for x in enumerate_words(Params(2, 0, 2, 1))]
        assert words == ["1.1 1.1", "1.1 1.2", "1.2 1.1", "1.2 1.2"]

    @pytest.mark.parametrize("params", SMALL_GRID, ids=str)
    def test_same_set_as_brute_force_and_lexicographic(self, params):
        stream = [tuple((e.color, e.value) for e in x) for x in enumerate_words(params)]
        assert stream == sorted(stream)
        assert len(set(stream)) == len(stream)
        brute = sorted(tuple((c, v) for v, c in seq) for seq in brute_words(params.p, params.r, params.a))
        assert stream == brute

    def test_budget(self):
        with pytest.raises(BudgetExceededError) as info:
            list(enumerate_words(Params(3, 0, 3, 5)))
        assert info.value.required == 3**15 * 1307674368000 // 6**5
        assert str(info.value.required) in str(info.value)

    def test_budget_is_configurable(self):
        with pytest.raises(BudgetExceededError):
            next(enumerate_words(Params(2, 0, 1, 2), budget=7))
        assert len(list(enumerate_words(Params(2, 0, 1, 2), budget=8))) == 8

    def test_prefix_partition_merges_to_whole(self):
        params = Params(2, 1, 2, 2)
        whole = list(enumerate_words(params))
        parts = []
        for first in [E(v, c) for c in (1, 2) for v in (1, 2)]:
            parts.extend(enumerate_words(params, prefix=(first,)))
        assert parts == whole

    def test_refuses_b_at_least_a(self):
        with pytest.raises(CombinatorialRangeError):
            list(enumerate_words(Params(2, 2, 1, 1)))


class TestDistribution:
    @pytest.mark.parametrize(
        "params, expected",
        [
            (Params(2, 0, 1, 1), [0, 2]),
            (Params(2, 1, 1, 1), [1, 1]),
            (Params(1, 0, 1, 2), [0, 1, 1]),
        ],
    )
    def test_examples(self, params, expected):
        assert brute_distribution(params) == expected
        assert descent_distribution(params) == expected

    @pytest.mark.parametrize("params", SMALL_GRID, ids=str)
    def test_matches_brute_force(self, params):
        assert descent_distribution(params) == brute_distribution(params)

    @pytest.mark.parametrize("p", range(1, 7))
    def test_classical_eulerian_numbers(self, p):
        # one color, no repeats: the terminal descent always fires
        dist = descent_distribution(Params(1, 0, 1, p))
        assert dist == [0] + list(eulerian_recurrence(p).values)

    def test_nonterminal_distribution(self):
        assert nonterminal_distribution(Params(1, 0, 1, 2)) == [1, 1]
        assert nonterminal_distribution(Params(2, 0, 1, 1)) == [2]
        assert nonterminal_distribution(Params(1, 0, 2, 1)) == [0, 1]


class TestAugment:
    def test_examples(self):
        assert augment(w("1.1", 2, 0, 1, 1), 0) == (E(1, 1), E(1, 1))
        word = w("2.2 1.1", 2, 1, 1, 2)
        assert augment(word, 1) == (E(2, 2), E(1, 1), E(1, 2))

    @pytest.mark.parametrize("params", SMALL_GRID, ids=str)
    def test_adds_one_weak_descent(self, params):
        for word in enumerate_words(params):
            aug = augment(word, params.b)
            assert len(aug) == params.n + 1
            assert weak_descents(aug, params.b) == weak_descents(word, params.b) + 1


class TestText:
    def test_paper_style_word_with_unused_colors(self):
        word = w("3.1 1.5 1.2 2.7 3.2 2.2", 9, 0, 2, 3)
        assert word[1] == E(1, 5)
        assert format_word(word) == "3.1 1.5 1.2 2.7 3.2 2.2"

    def test_simple(self):
        assert len(w("1.1 1.1", 1, 0, 2, 1)) == 2

    def test_missing_copy(self):
        with pytest.raises(WordValidationError, match="value 1"):
            w("1.1", 1, 0, 2, 1)

    def test_color_out_of_range(self):
        with pytest.raises(WordValidationError, match="color 3"):
            w("1.3", 2, 0, 1, 1)

    def test_value_out_of_range(self):
        with pytest.raises(WordValidationError, match="value 4"):
            w("4.1 1.1", 1, 0, 1, 2)

    def test_syntax_error_reports_position(self):
        with pytest.raises(WordSyntaxError) as info:
            w("1.1 2-1", 1, 0, 1, 2)
        assert info.value.position == 4

    @given(st.data())
    def test_round_trip(self, data):
        a = data.draw(st.integers(1, 4))
        r = data.draw(st.integers(1, 3))
        p = data.draw(st.integers(1, 4))
        params = Params(a, data.draw(st.integers(0, a - 1)), r, p)
        values = data.draw(st.permutations([v for v in range(1, p + 1) for _ in range(r)]))
        colors = data.draw(st.lists(st.integers(1, a), min_size=r * p, max_size=r * p))
        word = ColoredWord(tuple(E(v, c) for v, c in zip(values, colors)), params)
        assert parse_word(format_word(word), params) == word
