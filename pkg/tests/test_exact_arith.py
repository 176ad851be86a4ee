import math

import pytest
from hypothesis import given, strategies as st

from geneulerian.exact_arith import binomial, total_words
from geneulerian.words import Params, enumerate_words

from conftest import brute_words


@pytest.mark.parametrize(
    "n, k, expected",
    [(4, 2, 6), (3, 5, 0), (0, 0, 1), (5, -1, 0), (-3, 2, 0), (-1, -1, 0), (10, 10, 1)],
)
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


@given(st.integers(-20, 300), st.integers(-20, 300))
def test_binomial_matches_math_comb(n, k):
    expected = math.comb(n, k) if n >= 0 and k >= 0 else 0
    assert binomial(n, k) == expected


@given(st.integers(1, 200), st.data())
def test_pascal_and_symmetry(n, data):
    k = data.draw(st.integers(0, n))
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)
    assert binomial(n, k) == binomial(n, n - k)


def test_binomial_is_exact_for_huge_arguments():
    assert binomial(1000, 500) == math.comb(1000, 500)


@pytest.mark.parametrize(
    "p, r, a, expected", [(1, 2, 1, 1), (2, 1, 2, 8), (3, 2, 1, 90)]
)
def test_total_words_examples(p, r, a, expected):
    assert total_words(p, r, a) == expected
    assert len(brute_words(p, r, a)) == expected


@pytest.mark.parametrize("a", [1, 2, 3])
@pytest.mark.parametrize("r", [1, 2])
@pytest.mark.parametrize("p", [1, 2, 3])
def test_total_words_equals_stream_length(a, r, p):
    assert total_words(p, r, a) == sum(1 for _ in enumerate_words(Params(a, 0, r, p)))


def test_total_words_rejects_nonpositive():
    with pytest.raises(ValueError):
        total_words(0, 1, 1)
