import pytest
from hypothesis import given, settings, strategies as st

from triharm import qtring as qr
from triharm.errors import NonPolynomial
from triharm.qtring import ONE, Q, QTPoly, QTRational, T, star


def poly_strategy(min_exp=0, max_exp=4, max_terms=5):
    keys = st.tuples(st.integers(min_exp, max_exp),
                     st.integers(min_exp, max_exp))
    return st.dictionaries(keys, st.integers(-5, 5).filter(bool),
                           max_size=max_terms).map(QTPoly)


polys = poly_strategy()
laurent_polys = poly_strategy(min_exp=-3, max_exp=3)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(laurent_polys)
def test_identities(a):
    assert a + QTPoly() == a
    assert a * ONE == a
    assert a - a == QTPoly()
    assert a * 0 == QTPoly()
    assert 1 * a == a


@given(laurent_polys, laurent_polys)
def test_divexact_roundtrip(a, b):
    if not b:
        return
    assert QTPoly(qr.p_mul(a.d, b.d)).divexact(b) == a


def test_divexact_failure_modes():
    assert qr.p_divexact((Q + T).d, (Q - T).d) is None
    assert qr.p_divexact((Q * Q - T * T).d, (Q - T).d) == (Q + T).d
    assert qr.p_divexact((2 * Q).d, (4 * Q).d) is None
    with pytest.raises(NonPolynomial):
        (Q + T).divexact(Q - T)
    with pytest.raises(ZeroDivisionError):
        (Q + T).divexact(0)


def test_divexact_laurent():
    qinv = QTPoly.monomial(-1, 0)
    a = qinv * T + ONE
    assert a.divexact(qinv) == T + Q


def test_gcd_basics():
    g = qr.p_gcd((Q * Q - T * T).d, ((Q - T) * (Q - T)).d)
    assert QTPoly(g) == Q - T
    assert qr.p_gcd((6 * Q).d, (4 * Q * T).d) == (2 * Q).d
    assert QTPoly(qr.p_gcd((Q + T).d, (Q * T + 1).d)) == ONE


@settings(max_examples=40, deadline=None)
@given(poly_strategy(max_exp=3, max_terms=3),
       poly_strategy(max_exp=3, max_terms=3),
       poly_strategy(max_exp=2, max_terms=3))
def test_gcd_against_sympy(a, b, g):
    import sympy

    aa, bb = qr.p_mul(a.d, g.d), qr.p_mul(b.d, g.d)
    if not aa and not bb:
        return
    mine = qr.p_gcd(aa, bb)
    q, t = sympy.symbols("q t")

    def to_sympy(d):
        return sympy.Add(*(c * q ** eq * t ** et
                           for (eq, et), c in d.items()))

    theirs = sympy.Poly(sympy.gcd(to_sympy(aa), to_sympy(bb)), q, t)
    theirs_d = {(int(eq), int(et)): int(c)
                for (eq, et), c in theirs.terms()}
    assert mine == theirs_d or mine == qr.p_neg(theirs_d)


@given(laurent_polys)
def test_json_roundtrip(a):
    assert QTPoly.from_json(a.to_json()) == a


@given(laurent_polys)
def test_swap_is_involution(a):
    assert a.swap_qt().swap_qt() == a


@given(polys)
def test_swap_is_substitution_symmetry(a):
    assert a.swap_qt().specialize(q=2, t=5) == a.specialize(q=5, t=2)


def test_degree_and_support():
    f = Q * Q * T - 3
    assert f.total_degree() == 3
    assert QTPoly().total_degree() is None
    assert f.min_exponents() == (0, 0)
    assert f.is_polynomial()
    assert not QTPoly.monomial(-1, 2).is_polynomial()


def test_specialize():
    assert (Q * Q * T - 3).specialize(q=2, t=3) == 9
    assert (Q + T).specialize(q=1) == T + 1
    with pytest.raises(NonPolynomial):
        QTPoly.monomial(-1, 0).specialize(q=0)
    assert QTPoly.monomial(-2, 0).specialize(q=-1) == ONE


def test_str_rendering():
    assert str(Q * Q * T - 3) == "q^2*t - 3"
    assert str(QTPoly()) == "0"
    assert str(-Q) == "-q"
    assert str(2 * Q * T - T) == "2*q*t - t"
    assert str(QTPoly.monomial(-1, 0) + ONE) == "1 + q^-1"


def test_rational_equality_is_lazy():
    r = QTRational(Q * Q - T * T, Q - T)
    assert r.num == Q * Q - T * T
    assert r == QTRational(Q + T)
    assert r == Q + T
    assert QTRational(ONE, Q - T) + QTRational(ONE, T - Q) == 0


def test_rational_arithmetic():
    r = QTRational(ONE, Q - T)
    assert r * (Q - T) == 1
    assert (r + r) * (Q - T) == 2
    assert 1 / r == Q - T
    assert (Q - (T * QTRational(Q, T))) == QTPoly()
    with pytest.raises(ZeroDivisionError):
        r / QTRational(QTPoly(), ONE)
    with pytest.raises(ZeroDivisionError):
        QTRational(ONE, QTPoly())


def test_rational_reduce_canonical():
    r = QTRational(Q * Q - T * T, Q - T).reduce()
    assert r.num == Q + T and r.den == ONE
    r = QTRational(QTPoly.monomial(-1, 0), ONE).reduce()
    assert r.num == ONE and r.den == Q
    r = QTRational(-Q, T - Q).reduce()
    assert r.den.d[qr._lead_key(r.den.d)] > 0


def test_rational_to_polynomial():
    assert QTRational(Q * Q - T * T, Q - T).to_polynomial() == Q + T
    with pytest.raises(NonPolynomial):
        QTRational(ONE, Q - T).to_polynomial()


def test_rational_hash_respects_equality():
    assert hash(QTRational(Q * Q - T * T, Q - T)) == hash(QTRational(Q + T))


def test_rational_str():
    assert str(QTRational(Q * Q - T * T, Q - T)) == "q + t"
    assert str(QTRational(ONE, Q).reduce()) == "(1)/(q)"


def test_specialize_module_fn_cancels_first():
    r = QTRational(Q * Q - T * T, Q - T)
    assert qr.specialize(r, q=1, t=1) == 2
    with pytest.raises(ZeroDivisionError):
        qr.specialize(QTRational(ONE, Q - T), q=1, t=1)


def test_star():
    assert star(0) == 1
    assert star(7) == 7
    assert star(QTPoly()) == ONE
    assert star(Q) == Q
    assert star(QTRational(Q, T)) == QTRational(Q, T)
    with pytest.raises(TypeError):
        star("x")
