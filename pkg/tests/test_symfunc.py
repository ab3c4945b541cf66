"""Symmetric-function layer, checked against brute-force tableau oracles.

The oracles below enumerate tableaux directly and are the reference for
products, skew Schur functions, Kostka numbers and principal dimensions.
"""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from triharm import partitions as pt
from triharm import symfunc as sf
from triharm.qtring import ONE, Q, QTPoly, QTRational, T
from triharm.symfunc import SymExpr

# ------------------------------------------------------------------ oracles


def lr_coefficient(nu, lam, mu):
    """Littlewood-Richardson number by enumerating lattice fillings."""
    inner = [(lam[i] if i < len(lam) else 0) for i in range(len(nu))]
    cells = [(i, j) for i in range(len(nu))
             for j in range(inner[i], nu[i])]
    K = len(mu)
    fill = {}
    out = 0

    def lattice_ok():
        cnt = [0] * (K + 1)
        for i in range(len(nu)):
            for j in reversed(range(inner[i], nu[i])):
                v = fill[(i, j)]
                cnt[v] += 1
                if v > 1 and cnt[v] > cnt[v - 1]:
                    return False
        return True

    def rec(idx, rem):
        nonlocal out
        if idx == len(cells):
            if lattice_ok():
                out += 1
            return
        i, j = cells[idx]
        left = fill.get((i, j - 1), 1)
        up = fill.get((i - 1, j), 0)
        for v in range(max(left, up + 1), K + 1):
            if rem[v - 1]:
                rem[v - 1] -= 1
                fill[(i, j)] = v
                rec(idx + 1, rem)
                del fill[(i, j)]
                rem[v - 1] += 1

    rec(0, list(mu))
    return out


def ssyt_count(lam, k, content=None):
    """Enumerate semistandard tableaux of shape lam, entries <= k."""
    cells = [(i, j) for i in range(len(lam)) for j in range(lam[i])]
    fill = {}
    out = 0

    def rec(idx, rem):
        nonlocal out
        if idx == len(cells):
            out += 1
            return
        i, j = cells[idx]
        left = fill.get((i, j - 1), 1)
        up = fill.get((i - 1, j), 0)
        for v in range(max(left, up + 1), k + 1):
            if rem is not None:
                if v > len(rem) or not rem[v - 1]:
                    continue
                rem[v - 1] -= 1
            fill[(i, j)] = v
            rec(idx + 1, rem)
            del fill[(i, j)]
            if rem is not None:
                rem[v - 1] += 1

    rec(0, list(content) if content is not None else None)
    return out


def oracle_product(lam, mu):
    n = pt.size(lam) + pt.size(mu)
    out = {}
    for nu in pt.partitions_of(n):
        if pt.contains(nu, lam):
            c = lr_coefficient(nu, lam, mu)
            if c:
                out[nu] = c
    return out


# ------------------------------------------------------------ frozen anchors


def test_product_examples():
    e1, e2, e11 = SymExpr.e((1,)), SymExpr.e((2,)), SymExpr.e((1, 1))
    assert e1 * e2 == SymExpr.s((2, 1)) + SymExpr.s((1, 1, 1))
    assert e1 * e11 == (SymExpr.s((3,)) + 2 * SymExpr.s((2, 1))
                        + SymExpr.s((1, 1, 1)))
    assert SymExpr.e((3, 2)) == (SymExpr.s((2, 2, 1))
                                 + SymExpr.s((2, 1, 1, 1))
                                 + SymExpr.s((1,) * 5))


def test_products_match_lr_oracle():
    shapes = [lam for n in range(7) for lam in pt.partitions_of(n)]
    for lam, mu in itertools.combinations_with_replacement(shapes, 2):
        if pt.size(lam) + pt.size(mu) > 6 or pt.size(lam) == 0:
            continue
        assert sf.schur_product(lam, mu) == oracle_product(lam, mu), (lam, mu)


def test_skew_examples():
    assert sf.skew_schur((2, 1), ()) == SymExpr.s((2, 1))
    assert sf.skew_schur((2, 1, 1), (1,)) == (SymExpr.s((2, 1))
                                              + SymExpr.s((1, 1, 1)))
    assert sf.skew_schur((2, 2), (1, 1)) == SymExpr.s((1, 1))
    with pytest.raises(ValueError):
        sf.skew_schur((2, 1), (3,))


def test_skew_matches_lr_oracle():
    for n in range(1, 7):
        for nu in pt.partitions_of(n):
            for lam in pt.subpartitions(nu):
                got = sf.skew_schur(nu, lam)
                for mu in pt.partitions_of(n - pt.size(lam)):
                    assert got.coeff(mu) == lr_coefficient(nu, lam, mu)


def test_perp_examples():
    assert sf.perp(SymExpr.e((2,)), SymExpr.s((5, 3))) == SymExpr.s((4, 2))
    assert sf.perp(SymExpr.e((2,)), SymExpr.s((5,))) == SymExpr.zero()
    assert sf.perp(SymExpr.e((1,)), SymExpr.s((2, 1))) == (
        SymExpr.s((2,)) + SymExpr.s((1, 1)))
    assert sf.e_perp(2, SymExpr.s((5, 3))) == SymExpr.s((4, 2))


def test_hall_examples():
    s = SymExpr.s
    assert sf.hall(s((2, 1)), s((2, 1))) == 1
    assert sf.hall(s((3,)) + s((1, 1)), s((1, 1))) == 1
    assert sf.hall(SymExpr.e((2,)), s((1, 1))) == 1
    assert sf.hall(s((3,)), s((2, 1))) == 0


def test_length():
    assert sf.length(SymExpr.s((3,)) + SymExpr.s((1, 1))) == 2
    assert sf.length(SymExpr.const(1)) == 0
    assert sf.length(SymExpr.zero()) == 0
    assert sf.length(SymExpr.e((3,))) == 3


def test_principal_dim():
    assert sf.principal_dim((2,), 2) == 3
    assert sf.principal_dim((1, 1, 1), 2) == 0
    assert sf.principal_dim((2, 1), 3) == 8
    assert sf.principal_dim((), 0) == 1


@given(st.lists(st.integers(1, 4), min_size=0, max_size=3)
       .map(lambda xs: tuple(sorted(xs, reverse=True))),
       st.integers(0, 4))
@settings(max_examples=30, deadline=None)
def test_principal_dim_matches_ssyt_oracle(lam, k):
    assert sf.principal_dim(lam, k) == ssyt_count(lam, k)


def test_kostka_matches_ssyt_oracle():
    for n in range(1, 6):
        for lam in pt.partitions_of(n):
            for mu in pt.partitions_of(n):
                assert sf.kostka(lam, mu) == ssyt_count(lam, n, mu), (lam, mu)


def test_e_coefficient():
    f = SymExpr.e((2,)) + 3 * SymExpr.e((1, 1))
    assert sf.e_coefficient(f, (1, 1)) == 3
    assert sf.e_coefficient(SymExpr.s((1, 1, 1)), (3,)) == 1
    assert sf.e_coefficient(SymExpr.s((2, 1)), (2, 1)) == 1
    assert sf.e_coefficient(SymExpr.s((2, 1)), (3,)) == -1


# --------------------------------------------------------------- invariants


small_partitions = st.lists(st.integers(1, 4), min_size=0, max_size=3).map(
    lambda xs: tuple(sorted(xs, reverse=True)))


def sym_exprs(max_terms=2):
    term = st.tuples(small_partitions, st.integers(-3, 3))
    return st.lists(term, min_size=1, max_size=max_terms).map(
        lambda ts: SymExpr("s", dict(ts)))


@given(sym_exprs(), sym_exprs())
@settings(max_examples=25, deadline=None)
def test_product_commutes(f, g):
    assert f * g == g * f


@given(sym_exprs(), sym_exprs(), sym_exprs())
@settings(max_examples=15, deadline=None)
def test_product_associates(f, g, h):
    assert (f * g) * h == f * (g * h)


@given(sym_exprs(), sym_exprs(), sym_exprs())
@settings(max_examples=25, deadline=None)
def test_perp_is_hall_adjoint(g, f, h):
    assert sf.hall(g * f, h) == sf.hall(f, sf.perp(g, h))


@given(small_partitions)
def test_skew_by_empty_is_identity(lam):
    assert sf.skew_schur(lam, ()) == SymExpr.s(lam)


@given(sym_exprs(max_terms=3), st.sampled_from("ehm"))
@settings(max_examples=40, deadline=None)
def test_basis_roundtrip(f, basis):
    assert f.in_basis(basis).in_basis("s") == f


def test_basis_roundtrip_degree_ten():
    f = SymExpr.s((4, 3, 2, 1)) + 2 * SymExpr.s((5, 5)) - SymExpr.s((10,))
    for basis in "ehm":
        g = f.in_basis(basis)
        assert g.basis == basis
        assert g.in_basis("s") == f


def test_skew_coefficients_nonnegative():
    for nu in pt.partitions_of(6):
        for lam in pt.subpartitions(nu):
            for _, c in sf.skew_schur(nu, lam).items():
                assert isinstance(c, int) and c > 0


# ---------------------------------------------------- coefficient ring mix


def test_qt_coefficients():
    f = SymExpr.s((2, 1), Q + T)
    g = f * SymExpr.s((1,))
    assert g.coeff((2, 2)) == Q + T
    assert g.coeff((3, 1)) == Q + T
    assert sf.hall(g, g) == 3 * (Q + T) * (Q + T)
    r = f.map_coefficients(lambda c: QTRational(c, Q - T))
    assert sf.hall(r, SymExpr.s((2, 1))) == QTRational(Q + T, Q - T)


def test_homogeneous_tools():
    f = SymExpr.s((2,)) + SymExpr.s((1,))
    assert not f.is_homogeneous()
    assert f.homogeneous_part(2) == SymExpr.s((2,))
    assert f.degree() == 2
    assert SymExpr.zero().degree() is None
    assert f.filter_support(lambda l: len(l) <= 1 and pt.size(l) == 1) == \
        SymExpr.s((1,))


# ------------------------------------------------------------ presentation


def test_str_rendering():
    f = SymExpr.s((2, 1)) - 2 * SymExpr.s((1, 1, 1))
    assert str(f) == "s[2,1] - 2*s[1,1,1]"
    assert str(SymExpr.zero()) == "0"
    assert str(SymExpr.s((2,), Q + T)) == "(q + t)*s[2]"
    assert str(SymExpr.e((2, 1))) == "e[2,1]"
    assert str(SymExpr.const(1) + SymExpr.s((1,))) == "s[] + s[1]"


def test_to_json():
    f = SymExpr.s((2, 1), 2) + SymExpr.s((1, 1, 1), Q)
    js = f.to_json()
    assert js["basis"] == "s"
    assert [[2, 1], "2"] in js["terms"]
    assert [[1, 1, 1], "q"] in js["terms"]
