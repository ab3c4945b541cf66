"""Tests for the tableau summation engine behind epsilon."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from triharm import partitions as pt
from triharm.errors import NonTriangular, NTooSmall
from triharm.macdonald import nabla, whittaker
from triharm.negut import (
    StandardTableau,
    _chain_coefficients,
    _key_power,
    _mu_coefficient,
    enumerate_syt,
    epsilon,
    omega_weight,
)
from triharm.qtring import QTPoly, QTRational, p_mul, p_shift
from triharm.symfunc import SymExpr, e_to_schur


def hook_count(mu):
    """Number of standard tableaux by the hook length formula."""
    prod = 1
    for (i, j) in pt.cells(mu):
        prod *= pt.arm(mu, (i, j)) + pt.leg(mu, (i, j)) + 1
    return math.factorial(pt.size(mu)) // prod


@pytest.mark.parametrize("mu,count", [
    ((2, 1), 2),
    ((1, 1, 1), 1),
    ((3, 2), 5),
    ((3, 3, 1), 21),
])
def test_syt_counts(mu, count):
    tabs = enumerate_syt(mu)
    assert len(tabs) == count
    assert hook_count(mu) == count


def test_syt_complete_valid_and_distinct():
    for n in range(1, 6):
        total = 0
        for mu in pt.partitions_of(n):
            tabs = enumerate_syt(mu)
            assert len(set(t.rows for t in tabs)) == len(tabs)
            assert len(tabs) == hook_count(mu)
            for t in tabs:
                seen = sorted(t.entry(c) for c in t.cells())
                assert seen == list(range(1, n + 1))
                for (i, j) in t.cells():
                    if (i + 1, j) in set(t.cells()):
                        assert t.entry((i + 1, j)) > t.entry((i, j))
                    if (i, j + 1) in set(t.cells()):
                        assert t.entry((i, j + 1)) > t.entry((i, j))
            total += len(tabs) ** 2
        assert total == math.factorial(n)


def test_omega_single_cell_is_one():
    theta, = enumerate_syt((1,))
    assert omega_weight(theta) == QTRational(QTPoly.const(1), QTPoly.const(1))


def test_omega_two_cell_values():
    # hand expansion of the three product groups collapses the column
    # tableau to t/(t-q) and the row tableau to q/(q-t)
    col, = enumerate_syt((1, 1))
    t_ = QTPoly.monomial(0, 1)
    q_ = QTPoly.monomial(1, 0)
    assert omega_weight(col) == QTRational(t_, t_ - q_)
    row, = enumerate_syt((2,))
    assert omega_weight(row) == QTRational(q_, q_ - t_)


def _chain_as_rational(num, den, mu):
    shifted = p_shift(num, -pt.eta(pt.conjugate(mu)), -pt.eta(mu))
    d = {(0, 0): 1}
    for k, e in den.items():
        d = p_mul(d, _key_power(k, e))
    return QTRational(QTPoly(shifted), QTPoly(d))


@pytest.mark.parametrize("n", range(2, 6))
@pytest.mark.parametrize("tau", [(), (2, 1), (3, 1)])
def test_chain_matches_tableau_sum(n, tau):
    # the chain recursion shares partial products between tableaux; the
    # direct per-tableau sum is the oracle it must agree with
    if n < len(tau) + 1:
        pytest.skip("weight vector does not fit")
    v = [0] * n
    for i in range(len(tau)):
        v[i + 1] = tau[i] - (tau[i + 1] if i + 1 < len(tau) else 0)
    chain = _chain_coefficients(n, v)
    for mu in pt.partitions_of(n):
        num, den = chain[mu]
        assert _chain_as_rational(num, den, mu) == _mu_coefficient(mu, v)


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=3), min_size=3, max_size=3))
def test_chain_matches_tableau_sum_random_weights(tail):
    v = [0] + tail
    chain = _chain_coefficients(4, v)
    for mu in pt.partitions_of(4):
        num, den = chain[mu]
        assert _chain_as_rational(num, den, mu) == _mu_coefficient(mu, v)


@pytest.mark.parametrize("n", range(2, 6))
def test_staircase_gives_nabla_of_elementary(n):
    en = SymExpr("s", e_to_schur((n,)))
    assert epsilon(pt.staircase(n), n) == nabla(en)


@pytest.mark.parametrize("n", range(2, 6))
def test_empty_tau_gives_sign_column(n):
    assert epsilon((), n) == SymExpr.s((1,) * n)


def test_single_row_tau_known_value():
    q_ = QTPoly.monomial(1, 0)
    t_ = QTPoly.monomial(0, 1)
    expect = {
        (2, 1): q_ + t_,
        (1, 1, 1): q_ * q_ + q_ * t_ + t_ * t_,
    }
    assert epsilon((2,), 3).terms == expect


def test_tau_321_specializations():
    f = epsilon((3, 2, 1), 6)
    at_origin = {lam: c.specialize(q=0, t=0) for lam, c in f.terms.items()}
    assert {lam for lam, c in at_origin.items() if c} == {(4, 1, 1)}
    assert at_origin[(4, 1, 1)] == QTPoly.const(1)

    # frozen q-expansion of the t=0 slice
    def qp(*exps):
        return QTPoly({(e, 0): 1 for e in exps})

    expect = {
        (4, 1, 1): qp(0),
        (3, 2, 1): qp(1, 2),
        (2, 2, 2): qp(3),
        (3, 1, 1, 1): qp(1, 2, 3),
        (2, 2, 1, 1): qp(2, 3, 4),
        (2, 1, 1, 1, 1): qp(3, 4, 5),
        (1, 1, 1, 1, 1, 1): qp(6),
    }
    at_t0 = {lam: c.specialize(t=0) for lam, c in f.terms.items()}
    assert {lam: c for lam, c in at_t0.items() if c} == expect


@pytest.mark.parametrize("tau,n", [
    ((2,), 3),
    ((1, 1), 4),
    ((2, 1), 4),
    ((3, 1), 5),
    ((3, 2, 1), 6),
])
def test_t_zero_slice_is_whittaker(tau, n):
    # the q-power is |tau| minus the sum of column indices of mu, which
    # the degree-six table pins down (there the power is q^0)
    mu = pt.whittaker_index(tau, n)
    shift = QTPoly.monomial(pt.size(tau) - pt.eta(pt.conjugate(mu)), 0)
    lhs = {lam: c.specialize(t=0) for lam, c in epsilon(tau, n).terms.items()}
    lhs = {lam: c for lam, c in lhs.items() if c}
    rhs = {lam: shift * c for lam, c in whittaker(mu).terms.items()}
    assert lhs == rhs


@pytest.mark.parametrize("tau", [(), (1,)])
@pytest.mark.parametrize("n", [3, 4])
def test_nabla_shifts_tau_by_staircase(tau, n):
    lifted = pt.partwise_add(tau, pt.staircase(n))
    assert nabla(epsilon(tau, n)) == epsilon(lifted, n)


def _two_var_row(k):
    return QTPoly({(k - i, i): 1 for i in range(k + 1)})


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("n", [3, 4, 5])
def test_single_row_closed_form(d, n):
    expect = {(2,) + (1,) * (n - 2): _two_var_row(d - 1),
              (1,) * n: _two_var_row(d)}
    assert epsilon((d,), n).terms == expect


@pytest.mark.parametrize("d,n", [(2, 4), (2, 5), (3, 6)])
def test_single_column_closed_form(d, n):
    # valid from n = 2d on; below that threshold the sum acquires
    # degenerate terms and positivity genuinely fails
    expect = {}
    for k in range(d + 1):
        lam = (2,) * k + (1,) * (n - 2 * k)
        expect[pt.check_partition(lam)] = _two_var_row(d - k)
    assert epsilon((1,) * d, n).terms == expect


@pytest.mark.parametrize("tau", pt.enumerate_triangular(4))
def test_output_shape_invariants(tau):
    # positivity holds from n = length + max multiplicity onward; below
    # that the coefficients stay polynomial and q,t symmetric but can
    # pick up signs, as epsilon((1,1,1), 4) shows on s_22
    positive_from = pt.length(tau) + pt.max_multiplicity(tau)
    for n in range(pt.length(tau) + 1, 6):
        f = epsilon(tau, n)
        assert f.basis == "s"
        degs = set()
        for lam, c in f.terms.items():
            assert pt.size(lam) == n
            assert c.is_polynomial()
            if n >= positive_from:
                assert all(v > 0 for v in c.d.values())
            assert c.swap_qt() == c
            degs.add(c.total_degree())
        assert max(degs) == pt.size(tau)


def test_rejects_non_triangular():
    for tau in [(2, 2), (3, 1, 1), (4, 1, 1)]:
        with pytest.raises(NonTriangular):
            epsilon(tau, 6)


def test_rejects_too_few_variables():
    with pytest.raises(NTooSmall):
        epsilon((1, 1, 1), 3)
    with pytest.raises(NTooSmall):
        epsilon((), 0)
