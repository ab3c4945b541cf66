"""Tensor encoding of two-parameter Schur expansions.

A symmetric function whose Schur-x coefficients are q,t symmetric
polynomials can be rewritten with those coefficients decomposed into
Schur polynomials in the two variables q, t.  The result is stored as
a TensorExpr: an integer matrix indexed by pairs (left partition, right
partition).  This module provides the decomposition, restriction by
left length, the first-column quotient with its stable limit, alternant
extraction, and the hook-indexed encoding of alternants.
"""

from . import partitions as pt
from .errors import NonTriangular, NoStabilization, NotSymmetric, NTooSmall
from .macdonald import as_polynomial
from .negut import epsilon
from .qtring import QTPoly
from .symfunc import SymExpr


def _two_var_schur(a, b):
    """s_{(a,b)}(q,t) as an exponent dict; requires a >= b >= 0."""
    return {(a - j, b + j): 1 for j in range(a - b + 1)}


def _left_poly(lam):
    if len(lam) > 2:
        return {}
    a = lam[0] if lam else 0
    b = lam[1] if len(lam) > 1 else 0
    return _two_var_schur(a, b)


def _peel(d):
    """Decompose a symmetric exponent dict against two-variable Schurs.

    Greedy on the lex-maximal monomial, which for a symmetric
    polynomial always has exponent pair a >= b and is the unique top
    monomial of s_{(a,b)}(q,t); subtracting strictly lowers it.
    """
    rem = dict(d)
    out = {}
    while rem:
        a, b = max(rem)
        if b < 0:
            raise ValueError("negative exponents cannot be decomposed")
        v = rem[(a, b)]
        for j in range(a - b + 1):
            k = (a - j, b + j)
            w = rem.get(k, 0) - v
            if w:
                rem[k] = w
            else:
                rem.pop(k, None)
        if b:
            lam = (a, b)
        elif a:
            lam = (a,)
        else:
            lam = ()
        out[lam] = v
    return out


class TensorExpr:
    """Integer combination of (left partition, right partition) pairs."""

    __slots__ = ("right_basis", "terms")

    def __init__(self, right_basis="s", terms=None):
        if right_basis not in ("s", "e"):
            raise ValueError("unknown right basis %r" % (right_basis,))
        clean = {}
        if terms:
            for (lam, mu), c in terms.items():
                if c:
                    key = (pt.check_partition(lam), pt.check_partition(mu))
                    clean[key] = c
        self.right_basis = right_basis
        self.terms = clean

    def coeff(self, lam, mu):
        return self.terms.get(
            (pt.check_partition(lam), pt.check_partition(mu)), 0)

    @property
    def schur_positive(self):
        return all(c > 0 for c in self.terms.values())

    def restrict(self, j):
        return TensorExpr(self.right_basis,
                          {k: c for k, c in self.terms.items()
                           if len(k[0]) <= j})

    def __add__(self, other):
        if not isinstance(other, TensorExpr):
            return NotImplemented
        if self.right_basis != other.right_basis:
            raise ValueError("mixed right bases")
        out = dict(self.terms)
        for k, c in other.terms.items():
            w = out.get(k, 0) + c
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return TensorExpr(self.right_basis, out)

    def __sub__(self, other):
        if not isinstance(other, TensorExpr):
            return NotImplemented
        return self + TensorExpr(other.right_basis,
                                 {k: -c for k, c in other.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorExpr):
            return NotImplemented
        return (self.right_basis == other.right_basis
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.right_basis, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def to_json(self):
        rows = [[list(lam), list(mu), c]
                for (lam, mu), c in sorted(self.terms.items())]
        return {"right_basis": self.right_basis, "terms": rows}

    @classmethod
    def from_json(cls, obj):
        terms = {(tuple(lam), tuple(mu)): c
                 for lam, mu, c in obj["terms"]}
        return cls(obj["right_basis"], terms)

    def __str__(self):
        if not self.terms:
            return "0"

        def side(tag, lam):
            return "%s[%s]" % (tag, ",".join(str(p) for p in lam)) if lam \
                else "1"

        bits = []
        for (lam, mu), c in sorted(self.terms.items(),
                                   key=lambda kv: (kv[0][1], kv[0][0])):
            body = "%s(x)%s" % (side("s", lam), side(self.right_basis, mu))
            if c == 1:
                bits.append(body)
            elif c == -1:
                bits.append("-" + body)
            else:
                bits.append("%d*%s" % (c, body))
        return " + ".join(bits).replace("+ -", "- ")

    def __repr__(self):
        return "TensorExpr(%r, %s)" % (self.right_basis, self.terms)


def decompose_qt(f):
    """Rewrite Schur-basis f with q,t coefficients as a TensorExpr.

    Every coefficient must be symmetric under swapping q and t; the
    left indices come out with at most two parts since there are only
    two variables.
    """
    if f.basis != "s":
        f = f.in_basis("s")
    f = as_polynomial(f)
    out = {}
    for mu, c in f.terms.items():
        d = c.d if isinstance(c, QTPoly) else {(0, 0): int(c)} if c else {}
        if {(et, eq): v for (eq, et), v in d.items()} != d:
            raise NotSymmetric(
                "coefficient of s_%s is not symmetric in q and t"
                % (list(mu),))
        for lam, v in _peel(d).items():
            out[(lam, mu)] = v
    return TensorExpr("s", out)


def recompose_qt(T):
    """Evaluate the left indices back at (q,t); inverse of decompose_qt."""
    acc = {}
    for (lam, mu), c in T.terms.items():
        poly = _left_poly(lam)
        if not poly:
            continue
        slot = acc.setdefault(mu, {})
        for k, v in poly.items():
            w = slot.get(k, 0) + c * v
            if w:
                slot[k] = w
            else:
                del slot[k]
    return SymExpr("s", {mu: QTPoly(d) for mu, d in acc.items() if d})


def restrict(T, j):
    """Drop all pairs whose left index has more than j parts."""
    return T.restrict(j)


def bar_stable(T):
    """Remove the first column of every right index."""
    out = {}
    for (lam, mu), c in T.terms.items():
        bar = tuple(p - 1 for p in mu if p > 1)
        k = (lam, bar)
        w = out.get(k, 0) + c
        if w:
            out[k] = w
        else:
            del out[k]
    return TensorExpr(T.right_basis, out)


def unbar(T, n):
    """Add back a first column so every right index has size n."""
    out = {}
    for (lam, bar), c in T.terms.items():
        height = n - pt.size(bar)
        if height < pt.length(bar):
            raise NTooSmall(
                "cannot add a column of height %d around %s"
                % (height, list(bar)))
        mu = tuple(bar[i] + 1 if i < len(bar) else 1
                   for i in range(height))
        out[(lam, mu)] = c
    return TensorExpr(T.right_basis, out)


def _ebar(tau, n):
    return bar_stable(decompose_qt(epsilon(tau, n)))


def stabilize(tau):
    """Scan n upward until the column-quotient form stops changing.

    Returns the stable TensorExpr and the first n at which it equals
    the value at n+1.  The scan starts at length + max multiplicity and
    gives up past size + 4; increments along the way are checked to be
    entrywise nonnegative.
    """
    tau = pt.check_partition(tau)
    if not pt.is_triangular(tau):
        raise NonTriangular("tau=%s is not cut out by a line" % (list(tau),))
    start = max(pt.length(tau) + pt.max_multiplicity(tau),
                pt.length(tau) + 1)
    cap = pt.size(tau) + 4
    if start > cap:
        raise NoStabilization(tau, start, cap)
    prev = _ebar(tau, start)
    n = start
    while n <= cap:
        nxt = _ebar(tau, n + 1)
        inc = nxt - prev
        assert inc.schur_positive, \
            "negative increment at n=%d for tau=%s" % (n + 1, list(tau))
        if not inc:
            return prev, n
        prev = nxt
        n += 1
    raise NoStabilization(tau, start, cap)


def alternant(T, n):
    """Left coefficient of the sign representation s_{1^n}."""
    key = (1,) * n
    out = {}
    for (lam, mu), c in T.terms.items():
        if mu == key:
            out[lam] = c
    return SymExpr("s", out)


def two_row_alternant(a, b):
    """Closed form for the alternant of a two-row shape (a, b)."""
    if b < 0 or a < b or 2 * b > a + 1:
        raise NonTriangular("(%d, %d) is not a triangular two-row shape"
                            % (a, b))
    out = {}
    for d in range(b + 1):
        if 3 * d > a + b:
            break
        top = a + b - 2 * d
        lam = (top, d) if d else ((top,) if top else ())
        out[lam] = 1
    return SymExpr("s", out)


class HookPoly:
    """Integer polynomial in u, v recording hook shapes by (arm, leg)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    def to_schur(self):
        return SymExpr("s", {pt.hook_partition(a, l): c
                             for (a, l), c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, HookPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def to_json(self):
        return [[a, l, c] for (a, l), c in sorted(self.terms.items())]

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for (a, l), c in sorted(self.terms.items(),
                                key=lambda kv: (-kv[0][0], kv[0][1])):
            pows = [p for p in ("u^%d" % a if a > 1 else "u" * a,
                                "v^%d" % l if l > 1 else "v" * l) if p]
            body = "*".join(pows) or "1"
            bits.append(body if c == 1 else "%d*%s" % (c, body))
        return " + ".join(bits)

    def __repr__(self):
        return "HookPoly(%s)" % (self.terms,)


def hook_project(f):
    """Keep only hook-indexed Schur terms, re-indexed by (arm, leg)."""
    if f.basis != "s":
        f = f.in_basis("s")
    out = {}
    for mu, c in f.terms.items():
        if mu and all(p == 1 for p in mu[1:]):
            out[(mu[0] - 1, len(mu) - 1)] = c
    return HookPoly(out)


def hook_product(tau):
    """Predicted hook polynomial u^{|tau|-m(m+1)/2} (u^2+v)...(u^m+v).

    m is the smaller of the lengths of tau and its conjugate; the
    staircase of size m fits inside any such triangular shape, so the
    prefactor exponent is never negative.
    """
    tau = pt.check_partition(tau)
    if not pt.is_triangular(tau):
        raise NonTriangular("tau=%s is not cut out by a line" % (list(tau),))
    m = min(pt.length(tau), tau[0] if tau else 0)
    e0 = pt.size(tau) - m * (m + 1) // 2
    if e0 < 0:
        raise ValueError("negative prefactor exponent for tau=%s"
                         % (list(tau),))
    terms = {(e0, 0): 1}
    for k in range(2, m + 1):
        nxt = {}
        for (a, l), c in terms.items():
            for key in ((a + k, l), (a, l + 1)):
                w = nxt.get(key, 0) + c
                if w:
                    nxt[key] = w
                else:
                    del nxt[key]
        terms = nxt
    return HookPoly(terms)
