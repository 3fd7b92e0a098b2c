import math

import pytest
from hypothesis import given, settings, strategies as st

from hhv import (HolderParams, ParameterError, bound_24, bound_25, check_negativity_chain,
                 check_weight_bounds, partial_power_sum, tail_power_sum, weight_omega,
                 weight_omega_dual)
from hhv.grid import build_grid, lambda_values

from oracles import DirectWeights

Z2 = math.pi ** 2 / 6


def test_params_derived_fields():
    P = HolderParams(3.0, 1.5)
    assert P.q == 1.5
    assert P.k_lambda == pytest.approx(1.5 * 3 * 1.5 / (2.5 * 1.0))
    assert P.tail_exponent > 1
    assert HolderParams(2, 2).k_lambda == 2.0
    assert HolderParams(2, 1).k_lambda == 4.0


@pytest.mark.parametrize("p,lam", [(1.0, 1.0), (0.5, 1.0), (2.0, 2.1), (2.0, 0.0),
                                   (3.0, 0.5), (2.0, 1e-7)])
def test_inadmissible(p, lam):
    with pytest.raises(ParameterError):
        HolderParams(p, lam)


def test_non_conjugate_pair_rejected():
    with pytest.raises(ParameterError):
        HolderParams(2.0, 1.0, q=3.0)


def test_weight_at_one():
    P = HolderParams(2, 2)
    w = weight_omega(1, P)
    assert w.contains(Z2)
    assert 1.6449 < w.lo and w.hi < 1.6450
    assert weight_omega_dual(1, P).contains(Z2)


@pytest.mark.parametrize("m", [1, 2, 7, 40, 300])
def test_closed_decomposition_at_lambda_two(m):
    tail = tail_power_sum(2.0, m)
    w = weight_omega(m, HolderParams(2, 2))
    assert w.intersects(tail + (1 / m - 1 / m ** 2))


def test_dual_is_swap():
    P = HolderParams(3.0, 1.7)
    Q = HolderParams(1.5, 1.7)
    for n in (1, 5, 33):
        assert weight_omega_dual(n, P) == weight_omega(n, Q)
    S = HolderParams(2.0, 1.3)
    assert weight_omega_dual(9, S) == weight_omega(9, S)


def test_grid_rows_match_single_evaluations():
    P = HolderParams(1.5, 1.2)
    rows = check_weight_bounds(P, 30)
    for e in rows[::7]:
        assert e.value == weight_omega(e.m, P)


@pytest.mark.parametrize("p,lam", [(2.0, 1.0), (1.5, 0.8), (3.0, 1.9), (1.2, 1.5)])
def test_decomposition_matches_direct_sum(p, lam):
    P = HolderParams(p, lam)
    oracle = DirectWeights(p, lam, 10 ** 5)
    for m in (1, 2, 3, 10, 25, 50):
        lo, hi = oracle.interval(m)
        w = weight_omega(m, P)
        assert w.lo <= hi and lo <= w.hi


def test_literal_exponent_would_fail():
    # 1/m**((p+1)lam - 2) without the /p disagrees with the direct sum
    p, lam = 3.0, 1.4
    P = HolderParams(p, lam)
    m = 7
    rho = P.rho
    lit = m ** -((p + 1) * lam - 2) * partial_power_sum(rho, m) - m ** -lam \
        + m ** rho * tail_power_sum(P.tail_exponent, m).mid
    lo, hi = DirectWeights(p, lam, 10 ** 5).interval(m)
    assert not lo <= lit <= hi
    assert weight_omega(m, P).intersects(type(weight_omega(m, P))(lo, hi))


def test_bounds_hand_values():
    assert bound_24(1, HolderParams(2, 2)) == pytest.approx(5 / 3, rel=1e-15)
    assert bound_24(1, HolderParams(2, 1)) == pytest.approx(10 / 3, rel=1e-15)
    assert bound_25(1, HolderParams(2, 2)) == bound_24(1, HolderParams(2, 2))
    assert bound_25(1, HolderParams(2, 1)) == pytest.approx(10 / 3, rel=1e-15)


def test_bound_24_asymptote():
    P = HolderParams(3.0, 1.5)
    m = 10 ** 12
    assert bound_24(m, P) / (m ** (1 - P.lam) * P.k_lambda) == pytest.approx(1, abs=1e-3)


@pytest.mark.parametrize("p,lam", [(3.0, 1.5), (1.2, 0.9), (4.0, 2.0)])
def test_symmetric_bound_25_is_swapped_bound_24(p, lam):
    P = HolderParams(p, lam)
    for n in (1, 4, 50):
        assert bound_25(n, P) == pytest.approx(bound_24(n, P.swapped()), rel=1e-14)


def test_margin_hand_anchor():
    (e,) = check_weight_bounds(HolderParams(2, 2), 1)
    assert 1.6449 < e.value.lo and e.value.hi < 1.6450
    assert e.bound == pytest.approx(1.666667, abs=1e-6)
    assert e.margin == pytest.approx(5 / 3 - Z2, abs=1e-12)
    assert e.confirmed


def test_lambda_one_sweep():
    rows = check_weight_bounds(HolderParams(2, 1), 100)
    assert len(rows) == 100 and all(e.confirmed for e in rows)
    assert all(e.value.lo > 0 for e in rows)


def test_literal_bound_25_outcomes():
    # identical when p = q; fails once q > p since q/(3(p+lam-2)) grows
    P = HolderParams(2.0, 1.4)
    assert all(e.confirmed for e in check_weight_bounds(P, 50, dual=True, literal=True))
    P = HolderParams(1.2, 0.9)
    lit = check_weight_bounds(P, 50, dual=True, literal=True)
    assert not any(e.confirmed for e in lit)
    assert all(e.confirmed for e in check_weight_bounds(P, 50, dual=True))
    # with p > q the literal form is a weaker bound and still holds
    P = HolderParams(3.0, 1.5)
    assert all(e.confirmed for e in check_weight_bounds(P, 50, dual=True, literal=True))


def test_negativity_chain_boundary_and_interior():
    g = check_negativity_chain(HolderParams(2, 2), 1)[0]
    assert abs(g.gap) <= g.resolution and g.ok
    assert check_negativity_chain(HolderParams(2, 1.5), 1)[0].gap > 0
    assert check_negativity_chain(HolderParams(3, 1.9), 10)[9].gap > 0


lam_frac = st.floats(0.01, 1.0)


@settings(max_examples=40, deadline=None)
@given(st.floats(1.05, 6.0), lam_frac, st.integers(1, 200))
def test_weight_properties(p, frac, m):
    q = p / (p - 1)
    lower = 2 - min(p, q)
    lam = lower + frac * (2 - lower)
    P = HolderParams(p, lam)
    w = weight_omega(m, P)
    assert w.lo > 0
    assert w.hi < bound_24(m, P)
    assert m ** (lam - 1) * w.hi < P.k_lambda
    assert weight_omega_dual(m, P).hi < bound_25(m, P)


def test_lambda_values_include_boundary():
    assert lambda_values(2.0)[0] == pytest.approx(0.1)
    assert lambda_values(2.0)[-1] == 2.0
    assert lambda_values(4.0)[-1] == 2.0
    grid, skipped = build_grid([2.0], [0.0, 1.0, 2.5])
    assert [P.lam for P in grid] == [1.0]
    assert len(skipped) == 2
