"""Summation formula for the triangular-partition symmetric functions.

epsilon(tau, n) sums, over standard tableaux of every shape mu of n, a
rational tableau weight against the modified Macdonald basis and returns
the result as a Schur expansion with polynomial coefficients.

Cells are (column, row) pairs and a cell carries the monomial
q^column t^row throughout; the weight vector v_tau is indexed by tableau
entry starting from v_tau(1) = 0.  Both choices are pinned by the
requirement that the staircase shape reproduce nabla(e_n), which the
test suite checks directly.
"""

import heapq
from collections import Counter
from functools import lru_cache

from . import partitions as pt
from .errors import NonPolynomial, NonTriangular, NTooSmall
from .macdonald import htilde
from .qtring import QTPoly, QTRational, p_add, p_divexact, p_mul, p_shift
from .symfunc import SymExpr


class StandardTableau:
    """Bijective filling of a shape, increasing along rows and up columns.

    rows[j][i] is the entry of the cell in column i of row j.
    """

    __slots__ = ("shape", "rows")

    def __init__(self, shape, rows):
        self.shape = shape
        self.rows = rows

    def entry(self, cell):
        return self.rows[cell[1]][cell[0]]

    def cells(self):
        return pt.cells(self.shape)

    def __eq__(self, other):
        if not isinstance(other, StandardTableau):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "StandardTableau(%r, %r)" % (self.shape, self.rows)


@lru_cache(maxsize=None)
def _syt_rows(mu):
    if not mu:
        return ((),)
    n = pt.size(mu)
    out = []
    for j in range(len(mu)):
        if j < len(mu) - 1 and mu[j] == mu[j + 1]:
            continue
        if mu[j] == 1:
            smaller = mu[:j]
        else:
            smaller = mu[:j] + (mu[j] - 1,) + mu[j + 1:]
        for rows in _syt_rows(smaller):
            grown = list(rows)
            if j < len(grown):
                grown[j] = grown[j] + (n,)
            else:
                grown.append((n,))
            out.append(tuple(grown))
    return tuple(out)


def enumerate_syt(mu):
    """All standard tableaux of shape mu."""
    mu = pt.check_partition(mu)
    return [StandardTableau(mu, rows) for rows in _syt_rows(mu)]


# Binomial factors q^a t^b - q^c t^d are interned as 4-tuples with the
# monomial content split off and the lex-larger exponent pair first, so
# tableau weights can be merged by exponent bookkeeping alone.


def _binomial_key(a, b, c, d):
    if (a, b) == (c, d):
        return None
    mq, mt = min(a, c), min(b, d)
    a, b, c, d = a - mq, b - mt, c - mq, d - mt
    if (a, b) < (c, d):
        return -1, (mq, mt), (c, d, a, b)
    return 1, (mq, mt), (a, b, c, d)


@lru_cache(maxsize=None)
def _key_power(key, e):
    a, b, c, d = key
    base = {(a, b): 1, (c, d): -1}
    out = {(0, 0): 1}
    for _ in range(e):
        out = p_mul(out, base)
    return out


@lru_cache(maxsize=None)
def _omega_factored(theta):
    """(sign, monomial, factor exponents) for the tableau weight.

    Factors hit by the star convention contribute 1 and are dropped;
    consecutive-entry denominators never vanish because the entries of
    a cell and its diagonal neighbour differ by at least two.
    """
    sign = 1
    meq = met = 0
    exps = Counter()

    def push(a, b, c, d, e):
        nonlocal sign, meq, met
        k = _binomial_key(a, b, c, d)
        if k is None:
            return
        s, (mq, mt), key = k
        if s < 0 and e % 2:
            sign = -sign
        meq += mq * e
        met += mt * e
        exps[key] += e

    cells = theta.cells()
    for x in cells:
        ex = theta.entry(x)
        for y in cells:
            ey = theta.entry(y)
            (a, b), (i, j) = x, y
            if ex > ey:
                push(a, b, i, j, 1)
                push(a, b, i + 1, j + 1, 1)
                push(a, b, i + 1, j, -1)
                push(a, b, i, j + 1, -1)
            if ex == ey + 1:
                meq += a
                met += b
                push(a, b, i + 1, j + 1, -1)
    for (i, j) in cells:
        if theta.entry((i, j)) != 1:
            push(i, j, 0, 0, -1)
    return sign, (meq, met), dict(exps)


def omega_weight(theta):
    """The tableau weight as an exact rational function."""
    sign, (meq, met), exps = _omega_factored(theta)
    num = {(0, 0): sign}
    den = {(0, 0): 1}
    for key, e in exps.items():
        if e > 0:
            num = p_mul(num, _key_power(key, e))
        else:
            den = p_mul(den, _key_power(key, -e))
    num = p_shift(num, meq, met)
    return QTRational(QTPoly(num), QTPoly(den))


def _weight_vector(tau, n):
    v = [0] * n
    for i in range(len(tau)):
        nxt = tau[i + 1] if i + 1 < len(tau) else 0
        v[i + 1] = tau[i] - nxt
    return v


def _key_poly(key):
    a, b, c, d = key
    return {(a, b): 1, (c, d): -1}


def _div_binomial(num, key):
    """Exact quotient of a Laurent dict by q^a t^b - q^c t^d, or None.

    The divisor is monic, so the division is a single descending-order
    sweep; a step cap catches the non-terminating inexact case.
    """
    a, b, c, d = key
    dq, dt = c - a, d - b
    r = dict(num)
    heap = [(-kq, -kt) for (kq, kt) in r]
    heapq.heapify(heap)
    out = {}
    qs = [kq for kq, _ in num]
    ts = [kt for _, kt in num]
    budget = len(num) * (max(qs) - min(qs) + max(ts) - min(ts) + 2) + 8
    while heap:
        kq, kt = heapq.heappop(heap)
        k = (-kq, -kt)
        c0 = r.pop(k, 0)
        if not c0:
            continue
        budget -= 1
        if budget < 0:
            return None
        out[(k[0] - a, k[1] - b)] = c0
        k2 = (k[0] + dq, k[1] + dt)
        w = r.get(k2)
        if w is None:
            r[k2] = c0
            heapq.heappush(heap, (-k2[0], -k2[1]))
        elif w + c0:
            r[k2] = w + c0
        else:
            del r[k2]
    return out


# Rational values are carried as (numerator dict, Counter of denominator
# binomial keys).  Sums are merged pairwise, and after each merge the
# known factorization lets cancellation run as exact divisions by
# two-term polynomials; a gcd would rediscover the same factors slowly.
# An integer evaluation screens the factors first, since most do not
# divide any given numerator and a failed division is the slow path.

_EVQ, _EVT = 5, 7


@lru_cache(maxsize=None)
def _key_value(key):
    a, b, c, d = key
    return _EVQ ** a * _EVT ** b - _EVQ ** c * _EVT ** d


def _num_value(num):
    mq = min(eq for eq, _ in num)
    mt = min(et for _, et in num)
    return sum(c * _EVQ ** (eq - mq) * _EVT ** (et - mt)
               for (eq, et), c in num.items())


def _strip(num, den):
    nval = _num_value(num)
    left = Counter()
    for k, e in den.items():
        kv = _key_value(k)
        while e:
            if nval % kv:
                break
            quot = _div_binomial(num, k)
            if quot is None:
                break
            num = quot
            nval //= kv
            e -= 1
        if e:
            left[k] = e
    return num, left


def _merge_factored(a, b):
    numa, dena = a
    numb, denb = b
    if not numa:
        return b
    if not numb:
        return a
    den = dena | denb
    na = numa
    for k, e in (den - dena).items():
        na = p_mul(na, _key_power(k, e))
    nb = numb
    for k, e in (den - denb).items():
        nb = p_mul(nb, _key_power(k, e))
    num = p_add(na, nb)
    if not num:
        return {}, Counter()
    return _strip(num, den)


def _merge_all(items):
    items = list(items)
    if not items:
        return {}, Counter()
    while len(items) > 1:
        nxt = [_merge_factored(items[i], items[i + 1])
               for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]


def _mul_binomial(num, key):
    """num times q^a t^b - q^c t^d by shift and subtract."""
    a, b, c, d = key
    out = {(eq + a, et + b): v for (eq, et), v in num.items()}
    for (eq, et), v in num.items():
        k2 = (eq + c, et + d)
        w = out.get(k2, 0) - v
        if w:
            out[k2] = w
        else:
            del out[k2]
    return out


def _merge_plain(a, b):
    """Lifted sum without cancellation; pairing keeps the lifts short."""
    numa, dena = a
    numb, denb = b
    if not numa:
        return b
    if not numb:
        return a
    den = dena | denb
    na = numa
    for k, e in (den - dena).items():
        for _ in range(e):
            na = _mul_binomial(na, k)
    nb = numb
    for k, e in (den - denb).items():
        for _ in range(e):
            nb = _mul_binomial(nb, k)
    return p_add(na, nb), den


def _mu_coefficient_factored(mu, v):
    """Tableau-weight sum for one shape as (numerator, denominator factors)."""
    tq, tt = pt.eta(pt.conjugate(mu)), pt.eta(mu)
    leaves = []
    for rows in _syt_rows(mu):
        theta = StandardTableau(mu, rows)
        sign, (meq, met), exps = _omega_factored(theta)
        for (i, j) in theta.cells():
            w = v[theta.entry((i, j)) - 1]
            meq += i * w
            met += j * w
        num = {(0, 0): sign}
        den = Counter()
        for k, e in exps.items():
            if e > 0:
                num = p_mul(num, _key_power(k, e))
            else:
                den[k] = -e
        leaves.append((p_shift(num, meq - tq, met - tt), den))
    return _merge_all(leaves)


# The tableau weight is a product of per-entry steps: the factors tied
# to entry k involve only the cell that k occupies, the cells of smaller
# entries, and the cell of entry k-1.  Summing over tableaux therefore
# collapses into a chain DP keyed by (shape so far, last cell added),
# which shares all partial sums between tableaux and keeps every state
# reduced.  The per-tableau path above stays as the small-n oracle.


def _addable_corners(shape):
    out = []
    for j in range(len(shape)):
        if j == 0 or shape[j - 1] > shape[j]:
            out.append((shape[j], j))
    out.append((0, len(shape)))
    return out


def _grow(shape, corner):
    i, j = corner
    if j == len(shape):
        return shape + (1,)
    return shape[:j] + (shape[j] + 1,) + shape[j + 1:]


def _chain_coefficients(n, v):
    """All shape coefficients at once: {mu: (num, den factors)}."""
    states = {((1,), (0, 0)): ({(0, 0): 1}, Counter())}
    for k in range(2, n + 1):
        nxt = {}
        vk = v[k - 1]
        for (shape, last), (num, den) in states.items():
            cells = pt.cells(shape)
            for u in _addable_corners(shape):
                a, b = u
                sign = 1
                meq = a * vk
                met = b * vk
                exps = Counter()

                def push(c, d, e):
                    nonlocal sign, meq, met
                    kk = _binomial_key(a, b, c, d)
                    if kk is None:
                        return
                    s, (mq, mt), key = kk
                    if s < 0 and e % 2:
                        sign = -sign
                    meq += mq * e
                    met += mt * e
                    exps[key] += e

                for (i, j) in cells:
                    push(i, j, 1)
                    push(i + 1, j + 1, 1)
                    push(i + 1, j, -1)
                    push(i, j + 1, -1)
                meq += a
                met += b
                push(last[0] + 1, last[1] + 1, -1)
                push(0, 0, -1)
                wnum = dict(num) if sign > 0 else {kk: -c for kk, c in num.items()}
                wden = den.copy()
                for key, e in exps.items():
                    if e > 0:
                        wnum = p_mul(wnum, _key_power(key, e))
                    else:
                        wden[key] += -e
                wnum = p_shift(wnum, meq, met)
                tgt = (_grow(shape, u), u)
                if tgt in nxt:
                    nxt[tgt] = _merge_factored(nxt[tgt], (wnum, wden))
                else:
                    nxt[tgt] = _strip(wnum, wden)
        states = nxt
    out = {}
    for (shape, _), val in states.items():
        cur = out.get(shape)
        out[shape] = _merge_factored(cur, val) if cur else val
    return out


def _mu_coefficient(mu, v):
    """Sum of the tableau weights for one shape, as a rational function."""
    num, den = _mu_coefficient_factored(mu, v)
    d = {(0, 0): 1}
    for k, e in den.items():
        d = p_mul(d, _key_power(k, e))
    return QTRational(QTPoly(num), QTPoly(d))


def epsilon(tau, n):
    """Schur expansion of the degree-n symmetric function attached to tau.

    Coefficients come out as polynomials; a rational survivor would mean
    a convention bug and raises NonPolynomial.  Results are cached, so
    treat the returned expression as read-only.
    """
    tau = pt.check_partition(tau)
    if not pt.is_triangular(tau):
        raise NonTriangular("tau=%s is not cut out by a line" % (list(tau),))
    if n < pt.length(tau) + 1:
        raise NTooSmall("need n >= %d for tau=%s, got %d"
                        % (pt.length(tau) + 1, list(tau), n))
    return _epsilon_body(tau, n)


@lru_cache(maxsize=None)
def _epsilon_body(tau, n):
    v = _weight_vector(tau, n)
    chain = _chain_coefficients(n, v)
    per_lam = {}
    for mu, (num, den) in chain.items():
        if not num:
            continue
        num = p_shift(num, -pt.eta(pt.conjugate(mu)), -pt.eta(mu))
        for lam, c in htilde(mu, bound=n).terms.items():
            per_lam.setdefault(lam, []).append((p_mul(num, c.d), den))
    out = {}
    for lam, items in per_lam.items():
        # pair up without cancelling, then divide once at the root: the
        # full sum is a small polynomial, so the one long division is
        # cheap while incremental cancelling would churn through dense
        # intermediate quotients
        while len(items) > 1:
            nxt = [_merge_plain(items[i], items[i + 1])
                   for i in range(0, len(items) - 1, 2)]
            if len(items) % 2:
                nxt.append(items[-1])
            items = nxt
        total, union = items[0]
        dpoly = {(0, 0): 1}
        for k, e in union.items():
            dpoly = p_mul(dpoly, _key_power(k, e))
        quot = p_divexact(total, dpoly)
        if quot is None:
            raise NonPolynomial(
                "coefficient of s_%s is not polynomial" % (list(lam),))
        if quot:
            out[lam] = QTPoly(quot)
    return SymExpr("s", out)
