"""Modified Macdonald polynomials and their eigenoperators.

H-tilde is produced from the filling statistics: fillings of the diagram
weighted q^inv t^maj.  Conventions: French diagram read top row to bottom,
left to right; a descent is a cell strictly larger than the cell directly
below it and contributes t^(leg+1) q^(-arm); attacking pairs are same-row
(left, right) and adjacent-row (upper strictly to the right of lower);
inv counts attacking pairs whose earlier cell in reading order is strictly
larger.

The enumeration places values largest-first.  Every statistic is decided
the moment the smaller cell of its pair is placed, so a DP over the set
of already-filled cells (a bitmask) with one layer per value computes all
monomial coefficients of one content exactly.

Expansion in the H-tilde basis uses the pairing that is diagonal on power
sums with weight prod_i (q^(nu_i) - 1)(1 - t^(nu_i)) per p_nu; H-tilde is
an orthogonal family for it, so each coefficient is a ratio of two pairing
values.  Everything stays polynomial until the final division: characters
are integers and the z_nu denominators are cleared by a per-degree common
multiple.  The round-trip and fixture tests pin the convention.
"""

import math
from functools import lru_cache
from itertools import combinations

from . import partitions as pt
from .errors import DegreeTooLarge, NonPolynomial
from .qtring import ONE, QTPoly, QTRational, p_add, p_shift
from .symfunc import SymExpr

DEFAULT_BOUND = 8
HARD_CEILING = 11


# ------------------------------------------------------------- fillings DP


@lru_cache(maxsize=None)
def _cell_tables(mu):
    """Reading-order cells with attacker masks and descent data.

    For cell x: att[x] is the bitmask of earlier-reading attackers of x,
    and above[x] = (bit, leg+1, arm) for the cell directly above x, or
    None when x sits in the top row of its column.
    """
    cells = [(i, j) for j in reversed(range(len(mu))) for i in range(mu[j])]
    index = {c: k for k, c in enumerate(cells)}
    att = []
    above = []
    for (i, j) in cells:
        m = 0
        for i2 in range(i):
            m |= 1 << index[(i2, j)]
        if j + 1 < len(mu):
            for i2 in range(i + 1, mu[j + 1]):
                m |= 1 << index[(i2, j + 1)]
        att.append(m)
        if j + 1 < len(mu) and i < mu[j + 1]:
            a = (i, j + 1)
            above.append((1 << index[a],
                          pt.leg(mu, a) + 1, pt.arm(mu, a)))
        else:
            above.append(None)
    return tuple(att), tuple(above)


def _content_coeff(mu, alpha, att, above):
    """Sum of q^inv t^maj over fillings of mu with content alpha."""
    n = pt.size(mu)
    full = (1 << n) - 1
    cur = {0: {(0, 0): 1}}
    for b in reversed(alpha):
        nxt = {}
        for mask, poly in cur.items():
            free = [x for x in range(n) if not (mask >> x) & 1]
            for S in combinations(free, b):
                da = db = 0
                add = 0
                for x in S:
                    da += bin(att[x] & mask).count("1")
                    ab = above[x]
                    if ab is not None and mask & ab[0]:
                        db += ab[1]
                        da -= ab[2]
                    add |= 1 << x
                key = mask | add
                shifted = p_shift(poly, da, db) if da or db else poly
                prev = nxt.get(key)
                nxt[key] = p_add(prev, shifted) if prev else dict(shifted)
        cur = nxt
    return cur.get(full, {})


@lru_cache(maxsize=None)
def _htilde_schur(mu):
    n = pt.size(mu)
    conj = pt.conjugate(mu)
    # big shapes ride the q<->t symmetry; small ones are computed twice so
    # the symmetry stays an honest check at desk scale
    if n >= 7 and mu < conj:
        other = _htilde_schur(conj)
        return SymExpr("s", {lam: c.swap_qt()
                             for lam, c in other.terms.items()})
    att, above = _cell_tables(mu)
    mterms = {}
    for alpha in pt.partitions_of(n):
        d = _content_coeff(mu, alpha, att, above)
        if d:
            mterms[alpha] = QTPoly(d)
    return SymExpr("m", mterms).in_basis("s")


def htilde(mu, bound=DEFAULT_BOUND):
    """Modified Macdonald polynomial, Schur basis over QTPoly."""
    mu = pt.check_partition(mu)
    limit = min(bound, HARD_CEILING)
    if pt.size(mu) > limit:
        raise DegreeTooLarge("|mu| = %d exceeds bound %d"
                             % (pt.size(mu), limit))
    return _htilde_schur(mu)


# ------------------------------------------------ expansion in the basis


class MacdonaldExpansion:
    """f = sum of c_mu H-tilde_mu over partitions of one degree n."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs):
        self.n = n
        self.coeffs = {pt.check_partition(m): c
                       for m, c in coeffs.items() if c}

    def coeff(self, mu):
        return self.coeffs.get(pt.check_partition(mu), 0)

    def items(self):
        for mu in sorted(self.coeffs):
            yield mu, self.coeffs[mu]

    def __eq__(self, other):
        if not isinstance(other, MacdonaldExpansion):
            return NotImplemented
        if self.n != other.n or self.coeffs.keys() != other.coeffs.keys():
            return False
        return all(self.coeffs[m] == other.coeffs[m] for m in self.coeffs)

    def __repr__(self):
        body = ", ".join("%r: %s" % (m, c) for m, c in self.items())
        return "MacdonaldExpansion(%d, {%s})" % (self.n, body)

    def to_symexpr(self, bound=DEFAULT_BOUND):
        return _combine([(c, htilde(mu, bound))
                         for mu, c in self.coeffs.items()])


@lru_cache(maxsize=None)
def _border_strip_removals(lam, k):
    """(mu, height) for every rim hook of size k removable from lam."""
    out = []
    n = pt.size(lam)
    if 0 < k <= n:
        for mu in pt.partitions_of(n - k):
            if not pt.contains(lam, mu):
                continue
            cells = set(pt.cells(lam)) - set(pt.cells(mu))
            if any((i + 1, j) in cells and (i, j + 1) in cells
                   and (i + 1, j + 1) in cells for (i, j) in cells):
                continue
            seen = set()
            stack = [next(iter(cells))]
            while stack:
                (i, j) = stack.pop()
                if (i, j) in seen:
                    continue
                seen.add((i, j))
                for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                    if nb in cells:
                        stack.append(nb)
            if len(seen) != len(cells):
                continue
            out.append((mu, len({j for (_, j) in cells}) - 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _character(lam, nu):
    """Symmetric group character chi^lam at cycle type nu."""
    if not nu:
        return 1 if not lam else 0
    total = 0
    for mu, h in _border_strip_removals(lam, nu[0]):
        total += (-1) ** h * _character(mu, nu[1:])
    return total


def _zee(nu):
    z = 1
    run = 0
    for i, p in enumerate(nu):
        z *= p
        run = run + 1 if i and nu[i - 1] == p else 1
        z *= run
    return z


@lru_cache(maxsize=None)
def _pairing_data(n):
    """Per-degree tables for the diagonal pairing.

    Returns (mus, weights, norms): weights[mu][nu] is the pairing weight
    against the H-tilde character vector with z_nu cleared by a common
    integer multiple, so B(f, H-tilde_mu) scaled by that multiple equals
    sum_nu charvec_f(nu) * weights[mu][nu], a pure polynomial; norms[mu]
    is the same scaled value of B(H-tilde_mu, H-tilde_mu).
    """
    mus = pt.partitions_of(n)
    nus = pt.partitions_of(n)
    zmult = 1
    for nu in nus:
        z = _zee(nu)
        zmult = zmult * z // math.gcd(zmult, z)
    alphas = {}
    for nu in nus:
        a = QTPoly.const(zmult // _zee(nu))
        for k in nu:
            a = a * (QTPoly.monomial(k, 0) - ONE) * (ONE - QTPoly.monomial(0, k))
        alphas[nu] = a
    charvecs = {}
    for mu in mus:
        h = _htilde_schur(mu)
        charvecs[mu] = {nu: _char_vector(h, nu) for nu in nus}
    weights = {}
    norms = {}
    for mu in mus:
        weights[mu] = {nu: charvecs[mu][nu] * alphas[nu]
                       for nu in nus if charvecs[mu][nu]}
        acc = QTPoly()
        for nu, w in weights[mu].items():
            acc = acc + w * charvecs[mu][nu]
        norms[mu] = acc
    return mus, weights, norms


def _char_vector(f, nu):
    """Character pairing of a Schur-basis expression with p_nu."""
    acc = QTPoly()
    for lam, c in f.terms.items():
        ch = _character(lam, nu)
        if ch:
            if isinstance(c, int):
                acc = acc + QTPoly.const(c * ch)
            else:
                acc = acc + c * ch
    return acc


def expand_in_htilde(f, bound=DEFAULT_BOUND):
    """Write a homogeneous symmetric function in the H-tilde basis."""
    fs = f.in_basis("s")
    if not fs.terms:
        raise ValueError("cannot expand the zero function")
    if not fs.is_homogeneous():
        raise ValueError("expansion needs a homogeneous input")
    n = fs.degree()
    limit = min(bound, HARD_CEILING)
    if n > limit:
        raise DegreeTooLarge("degree %d exceeds bound %d" % (n, limit))
    poly = fs
    if any(isinstance(c, QTRational) for c in fs.terms.values()):
        poly = as_polynomial(fs)
    mus, weights, norms = _pairing_data(n)
    fchar = {nu: _char_vector(poly, nu) for nu in pt.partitions_of(n)}
    out = {}
    for mu in mus:
        num = QTPoly()
        for nu, w in weights[mu].items():
            if fchar[nu]:
                num = num + fchar[nu] * w
        if num:
            out[mu] = QTRational(num, norms[mu]).reduce()
    return MacdonaldExpansion(n, out)


# ------------------------------------------------------------ eigenoperators


def _t_mu(mu):
    eq, et = pt.stats(mu).t_mu
    return QTPoly.monomial(eq, et)


def _cell_monomials(mu, skip_origin):
    out = []
    for (i, j) in pt.cells(mu):
        if skip_origin and (i, j) == (0, 0):
            continue
        out.append(QTPoly.monomial(i, j))
    return out


def _elementary_value(monos, k):
    if k < 0:
        raise ValueError("need k >= 0")
    elem = [ONE] + [QTPoly()] * k
    for m in monos:
        for i in range(min(k, len(monos)), 0, -1):
            elem[i] = elem[i] + elem[i - 1] * m
    return elem[k]


def _poly_lcm(a, b):
    from .qtring import p_gcd
    g = QTPoly(p_gcd(a.d, b.d))
    return a * b.divexact(g)


def _combine(weighted):
    """Sum of weight * expr over one common denominator.

    weighted: (QTRational, SymExpr over QTPoly) pairs.  Keeping a single
    denominator makes the final reduce one gcd per Schur coefficient, and
    secretly polynomial results come out with denominator one.
    """
    pairs = [(w.reduce(), g) for w, g in weighted]
    pairs = [(w, g) for w, g in pairs if w]
    if not pairs:
        return SymExpr.zero()
    den = ONE
    for w, _ in pairs:
        den = _poly_lcm(den, w.den)
    acc = {}
    for w, g in pairs:
        lift = w.num * den.divexact(w.den)
        for lam, p in g.terms.items():
            cur = acc.get(lam)
            acc[lam] = lift * p if cur is None else cur + lift * p
    return SymExpr("s", {lam: QTRational(num, den).reduce()
                         for lam, num in acc.items()})


def _apply_eigen(f, bound, eigenvalue):
    exp = expand_in_htilde(f, bound)
    return _combine([(c * eigenvalue(mu), htilde(mu, bound))
                     for mu, c in exp.coeffs.items()])


def nabla(f, bound=DEFAULT_BOUND):
    """Macdonald eigenoperator with eigenvalue T_mu on H-tilde_mu."""
    return _apply_eigen(f, bound, _t_mu)


def delta_prime(k, f, bound=DEFAULT_BOUND):
    """Eigenvalue e_k over the cell monomials without the origin cell."""
    return _apply_eigen(
        f, bound, lambda mu: _elementary_value(_cell_monomials(mu, True), k))


def delta(k, f, bound=DEFAULT_BOUND):
    """Eigenvalue e_k over all cell monomials q^i t^j of mu."""
    return _apply_eigen(
        f, bound, lambda mu: _elementary_value(_cell_monomials(mu, False), k))


def as_polynomial(f):
    """Force QTRational Schur coefficients down to polynomials."""
    def conv(c):
        if isinstance(c, QTRational):
            return c.to_polynomial()
        return c
    return f.map_coefficients(conv)


# -------------------------------------------------------- derived objects


def whittaker(mu, bound=DEFAULT_BOUND):
    """Top t-degree component of H-tilde, a polynomial in q alone."""
    h = htilde(mu, bound)
    top = 0
    for c in h.terms.values():
        for (_, et) in c.d:
            if et > top:
                top = et
    out = {}
    for lam, c in h.terms.items():
        kept = {(eq, 0): v for (eq, et), v in c.d.items() if et == top}
        if kept:
            out[lam] = QTPoly(kept)
    return SymExpr("s", out)


def shat(a, ell):
    """Normalized hook Schur function (-1/qt)^a s_(a|ell)."""
    if a < 0 or ell < 0:
        raise ValueError("hook coordinates must be nonnegative")
    scale = QTPoly.monomial(-a, -a, (-1) ** a)
    return SymExpr.s(pt.hook_partition(a, ell), scale)
