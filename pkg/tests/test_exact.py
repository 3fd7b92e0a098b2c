import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hhv import ParameterError, bernoulli_table, gen_binomial
from hhv.exact import MAX_BERNOULLI_INDEX

from oracles import bernoulli_akiyama_tanigawa


def test_first_bernoulli_numbers():
    assert list(bernoulli_table(4).values) == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30)]


def test_base_case():
    assert bernoulli_table(0).values == (Fraction(1),)


def test_b8_matches_independent_algorithm(oracle_values):
    assert bernoulli_table(8)[8] == Fraction(oracle_values["bernoulli_8"])


@pytest.mark.parametrize("n", [2, 10, 24, 60, 120])
def test_even_entries_match_akiyama_tanigawa(n):
    assert bernoulli_table(n)[n] == bernoulli_akiyama_tanigawa(n)


def test_odd_entries_vanish():
    t = bernoulli_table(41)
    assert all(t[2 * k + 1] == 0 for k in range(1, 21))


def test_entries_are_reduced():
    for b in bernoulli_table(60).values:
        assert b.denominator > 0 and math.gcd(b.numerator, b.denominator) == 1


def test_cap():
    assert len(bernoulli_table(MAX_BERNOULLI_INDEX)) == MAX_BERNOULLI_INDEX + 1
    with pytest.raises(ParameterError):
        bernoulli_table(MAX_BERNOULLI_INDEX + 1)
    with pytest.raises(ParameterError):
        bernoulli_table(-1)


@pytest.mark.parametrize("alpha,k,expected", [
    (3.7, 0, 1.0),
    (-2.0, 1, -2.0),
    (-0.5, 3, -0.3125),
    (-2.0, 3, -4.0),
])
def test_gen_binomial_values(alpha, k, expected):
    assert gen_binomial(alpha, k) == expected


def test_gen_binomial_rejects_non_finite():
    with pytest.raises(ParameterError):
        gen_binomial(math.inf, 2)


@given(st.integers(0, 60), st.integers(0, 60))
def test_integer_alpha_is_exact(m, k):
    # exact integer, rounded once to the nearest double
    if k <= m:
        assert gen_binomial(float(m), k) == float(math.comb(m, k))
        if math.comb(m, k) < 2 ** 53:
            assert gen_binomial(float(m), k) == math.comb(m, k)


def _ulp_close(x, y, scale, ulps=8):
    return abs(x - y) <= ulps * math.ulp(scale)


# dyadic alphas keep alpha - 1 exact
@given(st.integers(-30 * 1024, 30 * 1024).map(lambda i: i / 1024), st.integers(1, 20))
def test_pascal_rule(alpha, k):
    lhs = gen_binomial(alpha, k)
    r1, r2 = gen_binomial(alpha - 1, k), gen_binomial(alpha - 1, k - 1)
    scale = max(abs(lhs), abs(r1), abs(r2))
    assert _ulp_close(lhs, r1 + r2, scale)
