"""Symmetric functions in the x-variables over a pluggable coefficient ring.

Expressions carry a basis tag ("s", "e", "h", "m") and a sparse map from
partitions to coefficients.  The Schur basis is canonical: products, perp
operators and the Hall pairing convert to it first, since there they are
Pieri-simple or diagonal.  Coefficients may be plain ints, QTPoly, or
QTRational; the ring operations are duck-typed.

All strip enumerations and single-Schur conversion rows are memoized at
module level, which keeps repeated products cheap across a session.
"""

from fractions import Fraction
from functools import lru_cache

from . import partitions as pt

BASES = ("s", "e", "h", "m")

# ---------------------------------------------------------- strip machinery


@lru_cache(maxsize=None)
def vertical_strip_add(lam, k):
    """All mu obtained from lam by adding a vertical k-strip."""
    res = []

    def rec(i, rem, prev, acc):
        if rem == 0:
            tail = lam[i:]
            if not tail or tail[0] <= prev:
                res.append(tuple(acc) + tail)
            return
        base = lam[i] if i < len(lam) else 0
        if base + 1 <= prev:
            acc.append(base + 1)
            rec(i + 1, rem - 1, base + 1, acc)
            acc.pop()
        if base > 0:
            acc.append(base)
            rec(i + 1, rem, base, acc)
            acc.pop()

    rec(0, k, k + (lam[0] if lam else 0) + 1, [])
    return tuple(res)


@lru_cache(maxsize=None)
def horizontal_strip_add(lam, k):
    """All mu obtained from lam by adding a horizontal k-strip."""
    res = []
    L = len(lam)

    def rec(i, rem, acc):
        if i == L + 1:
            if rem == 0:
                res.append(tuple(x for x in acc if x))
            return
        lo = lam[i] if i < L else 0
        hi = min(lam[i - 1] if i else lo + rem, lo + rem)
        for v in range(lo, hi + 1):
            acc.append(v)
            rec(i + 1, rem - (v - lo), acc)
            acc.pop()

    rec(0, k, [])
    return tuple(res)


@lru_cache(maxsize=None)
def vertical_strip_remove(lam, k):
    """All nu obtained from lam by removing a vertical k-strip."""
    res = []
    L = len(lam)

    def rec(i, rem, prev, acc):
        if L - i < rem:
            return
        if i == L:
            res.append(tuple(x for x in acc if x))
            return
        for d in (0, 1) if rem else (0,):
            v = lam[i] - d
            if 0 <= v <= prev:
                acc.append(v)
                rec(i + 1, rem - d, v, acc)
                acc.pop()

    rec(0, k, lam[0] + 1 if lam else 1, [])
    return tuple(res)


@lru_cache(maxsize=None)
def horizontal_strip_remove(lam, k):
    """All nu obtained from lam by removing a horizontal k-strip."""
    res = []
    L = len(lam)

    def rec(i, rem, acc):
        if i == L:
            if rem == 0:
                res.append(tuple(x for x in acc if x))
            return
        lo = max(lam[i + 1] if i + 1 < L else 0, lam[i] - rem)
        for v in range(lo, lam[i] + 1):
            acc.append(v)
            rec(i + 1, rem - (lam[i] - v), acc)
            acc.pop()

    rec(0, k, [])
    return tuple(res)


@lru_cache(maxsize=None)
def kostka(lam, mu):
    """Number of semistandard tableaux of shape lam and content mu."""
    if pt.size(lam) != sum(mu):
        return 0
    if not mu:
        return 1
    k = mu[-1]
    return sum(kostka(nu, mu[:-1]) for nu in horizontal_strip_remove(lam, k))


# ----------------------------------------------- cached single-shape rows


def _chain(start_dict, parts, strips):
    out = start_dict
    for k in parts:
        nxt = {}
        for lam, c in out.items():
            for mu in strips(lam, k):
                nxt[mu] = nxt.get(mu, 0) + c
        out = nxt
    return out


@lru_cache(maxsize=None)
def e_to_schur(nu):
    """Schur expansion of e_nu as a dict, integer coefficients."""
    return _chain({(): 1}, nu, vertical_strip_add)


@lru_cache(maxsize=None)
def h_to_schur(nu):
    return _chain({(): 1}, nu, horizontal_strip_add)


@lru_cache(maxsize=None)
def schur_to_e(lam):
    """e-expansion of a single Schur function, by unitriangular peeling.

    e_nu = s_{nu'} + (terms whose conjugate strictly dominates nu), so
    repeatedly stripping the term with lex-least conjugate terminates.
    """
    work = {lam: 1}
    out = {}
    while work:
        mu = min(work, key=pt.conjugate)
        c = work.pop(mu)
        nu = pt.conjugate(mu)
        out[nu] = out.get(nu, 0) + c
        for rho, w in e_to_schur(nu).items():
            if rho == mu:
                continue
            v = work.get(rho, 0) - c * w
            if v:
                work[rho] = v
            else:
                work.pop(rho, None)
    return out


@lru_cache(maxsize=None)
def schur_to_h(lam):
    work = {lam: 1}
    out = {}
    while work:
        mu = min(work)
        c = work.pop(mu)
        out[mu] = out.get(mu, 0) + c
        for rho, w in h_to_schur(mu).items():
            if rho == mu:
                continue
            v = work.get(rho, 0) - c * w
            if v:
                work[rho] = v
            else:
                work.pop(rho, None)
    return out


@lru_cache(maxsize=None)
def schur_to_m(lam):
    """Monomial expansion of s_lam: Kostka numbers along dominance."""
    n = pt.size(lam)
    out = {}
    for mu in pt.partitions_of(n):
        if pt.dominates(lam, mu):
            k = kostka(lam, mu)
            if k:
                out[mu] = k
    return out


@lru_cache(maxsize=None)
def schur_product(lam, mu):
    """Schur expansion of s_lam * s_mu (Littlewood-Richardson row)."""
    if (pt.size(lam), lam) < (pt.size(mu), mu):
        lam, mu = mu, lam
    out = {}
    for nu, a in schur_to_e(mu).items():
        for rho, b in _chain({lam: 1}, nu, vertical_strip_add).items():
            v = out.get(rho, 0) + a * b
            if v:
                out[rho] = v
            else:
                del out[rho]
    return out


@lru_cache(maxsize=None)
def _e_perp_one(lam, k):
    return vertical_strip_remove(lam, k)


# ------------------------------------------------------------- expressions


class SymExpr:
    """A symmetric function: basis tag plus sparse partition -> coeff map."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis="s", terms=None):
        if basis not in BASES:
            raise ValueError("unknown basis %r" % (basis,))
        clean = {}
        if terms:
            for lam, c in terms.items():
                if c:
                    clean[pt.check_partition(lam)] = c
        self.basis = basis
        self.terms = clean

    # -- constructors

    @classmethod
    def s(cls, lam, c=1):
        return cls("s", {pt.check_partition(lam): c})

    @classmethod
    def e(cls, nu, c=1):
        return cls("e", {pt.check_partition(nu): c})

    @classmethod
    def h(cls, nu, c=1):
        return cls("h", {pt.check_partition(nu): c})

    @classmethod
    def m(cls, nu, c=1):
        return cls("m", {pt.check_partition(nu): c})

    @classmethod
    def const(cls, c, basis="s"):
        return cls(basis, {(): c})

    @classmethod
    def zero(cls, basis="s"):
        return cls(basis, {})

    # -- structure

    def coeff(self, lam):
        return self.terms.get(pt.check_partition(lam), 0)

    def support(self):
        return sorted(self.terms, key=lambda l: (pt.size(l), l))

    def items(self):
        for lam in self.support():
            yield lam, self.terms[lam]

    def degree(self):
        """Max |lam| over the support, or None for the zero expression."""
        if not self.terms:
            return None
        return max(pt.size(l) for l in self.terms)

    def is_homogeneous(self):
        degs = {pt.size(l) for l in self.terms}
        return len(degs) <= 1

    def homogeneous_part(self, d):
        return SymExpr(self.basis,
                       {l: c for l, c in self.terms.items()
                        if pt.size(l) == d})

    def map_coefficients(self, fn):
        return SymExpr(self.basis, {l: fn(c) for l, c in self.terms.items()})

    def filter_support(self, pred):
        return SymExpr(self.basis,
                       {l: c for l, c in self.terms.items() if pred(l)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, SymExpr):
            a, b = self, other
            if a.basis != b.basis:
                a, b = a.in_basis("s"), b.in_basis("s")
            if a.terms.keys() != b.terms.keys():
                return False
            return all(a.terms[l] == b.terms[l] for l in a.terms)
        s = self.in_basis("s")
        if set(s.terms) <= {()}:
            return s.terms.get((), 0) == other
        return NotImplemented

    def __hash__(self):
        s = self.in_basis("s")
        return hash(frozenset((l, _hashable(c)) for l, c in s.terms.items()))

    # -- basis conversion

    def in_basis(self, basis):
        if basis == self.basis:
            return self
        if basis == "s":
            return SymExpr("s", self._as_schur())
        return SymExpr("s", self._as_schur())._schur_to(basis)

    def _as_schur(self):
        if self.basis == "s":
            return dict(self.terms)
        rows = {"e": e_to_schur, "h": h_to_schur}.get(self.basis)
        out = {}
        if rows is not None:
            for nu, c in self.terms.items():
                for lam, w in rows(nu).items():
                    _acc(out, lam, c * w)
            return out
        # monomial basis: unitriangular peel against schur_to_m
        work = dict(self.terms)
        while work:
            mu = max(work)
            c = work.pop(mu)
            _acc(out, mu, c)
            for rho, w in schur_to_m(mu).items():
                if rho != mu:
                    _acc(work, rho, -(c * w))
        return out

    def _schur_to(self, basis):
        rows = {"e": schur_to_e, "h": schur_to_h, "m": schur_to_m}[basis]
        out = {}
        for lam, c in self.terms.items():
            for nu, w in rows(lam).items():
                _acc(out, nu, c * w)
        return SymExpr(basis, out)

    # -- ring operations

    def __add__(self, other):
        if not isinstance(other, SymExpr):
            if other == 0:
                return self
            other = SymExpr.const(other, self.basis)
        a, b = self, other
        if a.basis != b.basis:
            a, b = a.in_basis("s"), b.in_basis("s")
        out = dict(a.terms)
        for lam, c in b.terms.items():
            _acc(out, lam, c)
        return SymExpr(a.basis, out)

    __radd__ = __add__

    def __neg__(self):
        return SymExpr(self.basis, {l: -c for l, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, SymExpr)
                       else SymExpr.const(-other, self.basis))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SymExpr):
            return SymExpr(self.basis,
                           {l: c * other for l, c in self.terms.items()})
        a, b = self._as_schur(), other._as_schur()
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for lam, c in a.items():
            for mu, d in b.items():
                cd = c * d
                for nu, w in schur_product(lam, mu).items():
                    _acc(out, nu, cd * w)
        return SymExpr("s", out)

    def __rmul__(self, other):
        return SymExpr(self.basis,
                       {l: other * c for l, c in self.terms.items()})

    # -- rendering

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for lam in sorted(self.terms,
                          key=lambda l: (pt.size(l),
                                         tuple(-p for p in l))):
            sign, body = _term_str(self.basis, lam, self.terms[lam])
            if not chunks:
                chunks.append(body if sign > 0 else "-" + body)
            else:
                chunks.append(("+ " if sign > 0 else "- ") + body)
        return " ".join(chunks)

    def __repr__(self):
        return "SymExpr(%s)" % self

    def to_json(self):
        return {"basis": self.basis,
                "terms": [[list(lam), str(c)] for lam, c in self.items()]}


def _acc(d, k, v):
    w = d.get(k, 0) + v
    if w:
        d[k] = w
    else:
        d.pop(k, None)


def _hashable(c):
    return c if not isinstance(c, dict) else frozenset(c.items())


def _term_str(basis, lam, c):
    mono = "%s[%s]" % (basis, ",".join(map(str, lam)))
    if isinstance(c, int):
        return (1 if c > 0 else -1), \
            (mono if abs(c) == 1 else "%d*%s" % (abs(c), mono))
    body = str(c)
    if body == "1":
        return 1, mono
    if " " in body or body.startswith("-") or "/" in body:
        return 1, "(%s)*%s" % (body, mono)
    return 1, "%s*%s" % (body, mono)


# ---------------------------------------------------------- module-level API


def mul(f, g):
    return (f * g).in_basis("s")


def hall(f, g):
    """Hall scalar product; Schur functions are orthonormal."""
    a = f._as_schur() if isinstance(f, SymExpr) else SymExpr.const(f)._as_schur()
    b = g._as_schur() if isinstance(g, SymExpr) else SymExpr.const(g)._as_schur()
    if len(a) > len(b):
        a, b = b, a
    total = 0
    for lam, c in a.items():
        if lam in b:
            total = total + c * b[lam]
    return total


def perp(g, f):
    """Adjoint of multiplication by g, applied to f."""
    out = {}
    fs = f._as_schur()
    for mu, c in g._as_schur().items():
        for nu, a in schur_to_e(mu).items():
            cur = fs
            for k in nu:
                nxt = {}
                for lam, w in cur.items():
                    for rho in _e_perp_one(lam, k):
                        _acc(nxt, rho, w)
                cur = nxt
            ca = c * a
            for lam, w in cur.items():
                _acc(out, lam, ca * w)
    return SymExpr("s", out)


def e_perp(k, f):
    """Vertical-strip removal operator e_k-perp on a Schur expansion."""
    out = {}
    for lam, c in f._as_schur().items():
        for nu in _e_perp_one(lam, k):
            _acc(out, nu, c)
    return SymExpr("s", out)


def skew_schur(lam, mu):
    """Schur expansion of s_{lam/mu}."""
    lam, mu = pt.check_partition(lam), pt.check_partition(mu)
    if not pt.contains(lam, mu):
        raise ValueError("%r is not contained in %r" % (mu, lam))
    return perp(SymExpr.s(mu), SymExpr.s(lam))


def length(f):
    """Max number of parts over the Schur support; 0 for constants."""
    s = f.in_basis("s")
    if not s.terms:
        return 0
    return max(len(lam) for lam in s.terms)


def principal_dim(lam, k):
    """Number of semistandard tableaux of shape lam with entries <= k."""
    lam = pt.check_partition(lam)
    if k < 0:
        raise ValueError("need k >= 0")
    num = den = 1
    for (i, j) in pt.cells(lam):
        num *= k + i - j
        den *= pt.arm(lam, (i, j)) + pt.leg(lam, (i, j)) + 1
    val = Fraction(num, den)
    assert val.denominator == 1
    return int(val)


def e_coefficient(f, nu):
    """Coefficient of e_nu in the e-expansion of f."""
    return f.in_basis("e").coeff(nu)
