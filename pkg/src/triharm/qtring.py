"""Exact arithmetic in ZZ[q^{±1}, t^{±1}] and its fraction field.

A polynomial is stored sparsely as {(q_exp, t_exp): int_coeff} with no
zero values.  Module-level helpers operate on those plain dicts; the
QTPoly and QTRational classes are thin wrappers giving operator syntax.
Rationals stay unreduced until something forces a reduction, and compare
by cross-multiplication.
"""

from fractions import Fraction
from math import gcd as int_gcd

from .errors import NonPolynomial

# ---------------------------------------------------------------- dict core


def p_zero():
    return {}


def p_const(c):
    return {(0, 0): c} if c else {}


def p_monomial(eq, et, c=1):
    return {(eq, et): c} if c else {}


def p_add(a, b):
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, 0) + v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def p_neg(a):
    return {k: -v for k, v in a.items()}


def p_sub(a, b):
    return p_add(a, p_neg(b))


def p_scale(a, c):
    if not c:
        return {}
    return {k: c * v for k, v in a.items()}


def p_mul(a, b):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for (ea, ta), va in a.items():
        for (eb, tb), vb in b.items():
            k = (ea + eb, ta + tb)
            w = out.get(k, 0) + va * vb
            if w:
                out[k] = w
            else:
                del out[k]
    return out


def p_shift(a, dq, dt):
    return {(eq + dq, et + dt): v for (eq, et), v in a.items()}


def p_swap(a):
    return {(et, eq): v for (eq, et), v in a.items()}


def p_min_exp(a):
    if not a:
        return (0, 0)
    return (min(k[0] for k in a), min(k[1] for k in a))


def p_eval(a, qv=None, tv=None):
    """Substitute integer values for q and/or t.

    Zero to a negative power raises; otherwise the result is again a
    dict polynomial in whichever variables remain.
    """
    out = {}
    for (eq, et), v in a.items():
        c = v
        keq, ket = eq, et
        if qv is not None:
            c *= _ipow(qv, eq)
            keq = 0
        if tv is not None:
            c *= _ipow(tv, et)
            ket = 0
        if c:
            k = (keq, ket)
            w = out.get(k, 0) + c
            if w:
                out[k] = w
            else:
                del out[k]
    return out


def _ipow(base, e):
    if e >= 0:
        return base ** e
    if base in (1, -1):
        return base ** (-e)
    raise NonPolynomial("negative power of %r" % (base,))


def p_total_degree(a):
    """Max of q_exp + t_exp over the support; None for the zero poly."""
    if not a:
        return None
    return max(eq + et for eq, et in a)


def _lead_key(a):
    return max(a)


def p_divexact(a, b):
    """Exact quotient a / b, or None when b does not divide a.

    Works for Laurent inputs by normalizing both to nonnegative
    exponents first and shifting the quotient back.
    """
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return {}
    amin, bmin = p_min_exp(a), p_min_exp(b)
    aa = p_shift(a, -amin[0], -amin[1]) if amin != (0, 0) else dict(a)
    bb = p_shift(b, -bmin[0], -bmin[1]) if bmin != (0, 0) else b
    lb = _lead_key(bb)
    cb = bb[lb]
    quo = {}
    while aa:
        la = _lead_key(aa)
        deq, det = la[0] - lb[0], la[1] - lb[1]
        if deq < 0 or det < 0:
            return None
        c, r = divmod(aa[la], cb)
        if r:
            return None
        quo[(deq, det)] = c
        for (eb, tb), vb in bb.items():
            k = (eb + deq, tb + det)
            w = aa.get(k, 0) - c * vb
            if w:
                aa[k] = w
            else:
                del aa[k]
    dq, dt = amin[0] - bmin[0], amin[1] - bmin[1]
    if dq or dt:
        quo = p_shift(quo, dq, dt)
    return quo


# ------------------------------------------------------- gcd (for reduce())


def _u_content(u):
    g = 0
    for v in u.values():
        g = int_gcd(g, abs(v))
        if g == 1:
            return 1
    return g


def _u_scale(u, c):
    return {k: v * c for k, v in u.items()}


def _u_divint(u, c):
    return {k: v // c for k, v in u.items()}


def _u_mul(a, b):
    out = {}
    for ea, va in a.items():
        for eb, vb in b.items():
            k = ea + eb
            w = out.get(k, 0) + va * vb
            if w:
                out[k] = w
            else:
                del out[k]
    return out


def _u_deg(u):
    return max(u) if u else -1


def _u_pseudo_rem(a, b):
    """Pseudo-remainder of univariate int-coeff polys (dicts exp->int)."""
    db, lb = _u_deg(b), b[max(b)]
    r = dict(a)
    while r and _u_deg(r) >= db:
        dr = _u_deg(r)
        lr = r[dr]
        r = _u_scale(r, lb)
        for eb, vb in b.items():
            k = eb + dr - db
            w = r.get(k, 0) - lr * vb
            if w:
                r[k] = w
            else:
                r.pop(k, None)
    return r


def _u_gcd(a, b):
    """Gcd in ZZ[x] by the primitive PRS, up to sign."""
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    ca, cb = _u_content(a), _u_content(b)
    a = _u_divint(a, ca)
    b = _u_divint(b, cb)
    while b:
        r = _u_pseudo_rem(a, b)
        cr = _u_content(r)
        if cr:
            r = _u_divint(r, cr)
        a, b = b, r
    g = _u_scale(a, int_gcd(ca, cb))
    if g[max(g)] < 0:
        g = _u_scale(g, -1)
    return g


def _b_as_q_poly(a):
    """Regroup {(eq,et): c} as {eq: {et: c}}."""
    out = {}
    for (eq, et), v in a.items():
        out.setdefault(eq, {})[et] = v
    return out


def _b_from_q_poly(g):
    return {(eq, et): v for eq, u in g.items() for et, v in u.items()}


def _bu_content(a):
    """Content of a bivariate poly seen in (ZZ[t])[q]: a gcd in ZZ[t]."""
    cont = {}
    for u in _b_as_q_poly(a).values():
        cont = _u_gcd(cont, u)
        if cont == {0: 1}:
            break
    return cont


def _bu_div(a, b_univ):
    """Divide every q-coefficient of a by the univariate t-poly b_univ."""
    out = {}
    for eq, u in _b_as_q_poly(a).items():
        bi = {(e, 0): v for e, v in u.items()}
        dv = {(e, 0): v for e, v in b_univ.items()}
        q = p_divexact(bi, dv)
        for (e, _), v in q.items():
            out[(eq, e)] = v
    return out


def _bu_pseudo_rem(a, b):
    """Pseudo-remainder in (ZZ[t])[q]."""
    bq = _b_as_q_poly(b)
    db = max(bq)
    lb = bq[db]
    r = dict(a)
    while r:
        rq = _b_as_q_poly(r)
        dr = max(rq)
        if dr < db:
            break
        lr = rq[dr]
        lb2 = {(0, e): v for e, v in lb.items()}
        r = p_mul(r, lb2)
        shift_mul = p_shift({(0, e): v for e, v in lr.items()}, dr - db, 0)
        r = p_sub(r, p_mul(shift_mul, b))
    return r


def _int_content(a):
    g = 0
    for v in a.values():
        g = int_gcd(g, abs(v))
        if g == 1:
            break
    return g


def _heu_digits(n, xi):
    """Balanced base-xi digits of an integer, as a sparse exp -> digit map."""
    digs = {}
    e = 0
    half = xi // 2
    while n:
        r = n % xi
        if r > half:
            r -= xi
        if r:
            digs[e] = r
        n = (n - r) // xi
        e += 1
    return digs


def _u_trial_div(a, b):
    """Exact quotient in ZZ[x] of dict polys, or None."""
    if not b:
        return None
    db, lb = _u_deg(b), b[max(b)]
    r = dict(a)
    out = {}
    while r:
        dr = _u_deg(r)
        if dr < db:
            return None
        c, rem = divmod(r[dr], lb)
        if rem:
            return None
        out[dr - db] = c
        for eb, vb in b.items():
            k = eb + dr - db
            w = r.get(k, 0) - c * vb
            if w:
                r[k] = w
            else:
                r.pop(k, None)
    return out


def _u_gcd_heu(a, b):
    """Heuristic gcd candidate in ZZ[x] from an integer evaluation.

    Integer content here encodes data from the outer evaluation, so the
    candidate is never primitivized at this level.  An unverified last
    candidate is still returned; the caller certifies the lifted result
    against the original inputs either way.
    """
    maxc = min(max(abs(v) for v in a.values()),
               max(abs(v) for v in b.values()))
    xi = 2 * maxc + 29
    last = None
    for _ in range(4):
        x = sum(c * xi ** e for e, c in a.items())
        y = sum(c * xi ** e for e, c in b.items())
        if x and y:
            u = _heu_digits(int_gcd(x, y), xi)
            if u:
                if _u_trial_div(a, u) is not None \
                        and _u_trial_div(b, u) is not None:
                    return u
                last = u
        xi = xi * 73794 // 27011 + 17
    return last


def _gcd_heuristic(a, b):
    """Heuristic gcd in ZZ[q, t] of shifted dicts, or None on bad luck.

    Gauss's lemma splits off the integer contents first: the gcd of the
    primitive parts is primitive, so the spurious integer factor the
    evaluation tends to pick up is stripped by one content division
    before the candidate is certified by two exact trial divisions.
    Without that division, coprime inputs would fail certification on
    every retry and always fall through to the subresultant path.
    """
    ca, cb = _int_content(a), _int_content(b)
    gamma = int_gcd(ca, cb)
    if ca > 1:
        a = {k: v // ca for k, v in a.items()}
    if cb > 1:
        b = {k: v // cb for k, v in b.items()}
    maxc = min(max(abs(v) for v in a.values()),
               max(abs(v) for v in b.values()))
    xi = 2 * maxc + 29
    for _ in range(4):
        av = {}
        for (eq, et), v in a.items():
            av[eq] = av.get(eq, 0) + v * xi ** et
        bv = {}
        for (eq, et), v in b.items():
            bv[eq] = bv.get(eq, 0) + v * xi ** et
        av = {e: v for e, v in av.items() if v}
        bv = {e: v for e, v in bv.items() if v}
        if av and bv:
            u = _u_gcd_heu(av, bv)
            if u is not None:
                g = {}
                for eq, c in u.items():
                    for et, d in _heu_digits(c, xi).items():
                        g[(eq, et)] = d
                cg = _int_content(g)
                if cg > 1:
                    g = {k: v // cg for k, v in g.items()}
                if g and p_divexact(a, g) is not None \
                        and p_divexact(b, g) is not None:
                    if gamma > 1:
                        g = {k: v * gamma for k, v in g.items()}
                    return g
        xi = xi * 73794 // 27011 + 17
    return None


def p_gcd(a, b):
    """Gcd in ZZ[q, t] up to sign, Laurent inputs normalized first."""
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    amin, bmin = p_min_exp(a), p_min_exp(b)
    a = p_shift(a, -amin[0], -amin[1]) if amin != (0, 0) else a
    b = p_shift(b, -bmin[0], -bmin[1]) if bmin != (0, 0) else b
    if len(a) == 1 or len(b) == 1:
        # one side is a monomial once shifted, so only contents survive
        g = {(0, 0): int_gcd(_int_content(a), _int_content(b))}
    else:
        g = _gcd_heuristic(a, b)
    if g is None:
        ca, cb = _bu_content(a), _bu_content(b)
        a2 = _bu_div(a, ca)
        b2 = _bu_div(b, cb)
        if max(_b_as_q_poly(a2)) < max(_b_as_q_poly(b2)):
            a2, b2 = b2, a2
        while b2:
            r = _bu_pseudo_rem(a2, b2)
            if r:
                cr = _bu_content(r)
                r = _bu_div(r, cr)
            a2, b2 = b2, r
        cont = _u_gcd(ca, cb)
        g = p_mul(a2, {(0, e): v for e, v in cont.items()})
    mq, mt = min(amin[0], bmin[0]), min(amin[1], bmin[1])
    if mq or mt:
        g = p_shift(g, mq, mt)
    lk = _lead_key(g)
    if g[lk] < 0:
        g = p_scale(g, -1)
    return g


# ------------------------------------------------------------- rendering


def _mono_str(eq, et):
    parts = []
    for sym, e in (("q", eq), ("t", et)):
        if e == 1:
            parts.append(sym)
        elif e:
            parts.append("%s^%d" % (sym, e))
    return "*".join(parts)


def p_str(a):
    if not a:
        return "0"
    keys = sorted(a, key=lambda k: (-(k[0] + k[1]), -k[0]))
    chunks = []
    for k in keys:
        c = a[k]
        m = _mono_str(*k)
        mag = abs(c)
        if m:
            body = m if mag == 1 else "%d*%s" % (mag, m)
        else:
            body = str(mag)
        if not chunks:
            chunks.append(body if c > 0 else "-" + body)
        else:
            chunks.append(("+ " if c > 0 else "- ") + body)
    return " ".join(chunks)


def p_to_json(a):
    return [[k[0], k[1], a[k]] for k in sorted(a)]


def p_from_json(rows):
    out = {}
    for eq, et, c in rows:
        if c:
            out[(int(eq), int(et))] = int(c)
    return out


# ---------------------------------------------------------------- classes


def _coerce_dict(x):
    if isinstance(x, QTPoly):
        return x.d
    if isinstance(x, int):
        return p_const(x)
    raise TypeError("cannot mix QTPoly with %r" % type(x).__name__)


class QTPoly:
    """Laurent polynomial in q and t with integer coefficients."""

    __slots__ = ("d",)

    def __init__(self, d=None):
        self.d = dict(d) if d else {}

    @classmethod
    def monomial(cls, eq, et, c=1):
        return cls(p_monomial(eq, et, c))

    @classmethod
    def const(cls, c):
        return cls(p_const(c))

    @classmethod
    def from_json(cls, rows):
        return cls(p_from_json(rows))

    def __add__(self, other):
        if isinstance(other, QTRational):
            return NotImplemented
        return QTPoly(p_add(self.d, _coerce_dict(other)))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, QTRational):
            return NotImplemented
        return QTPoly(p_sub(self.d, _coerce_dict(other)))

    def __rsub__(self, other):
        return QTPoly(p_sub(_coerce_dict(other), self.d))

    def __mul__(self, other):
        if isinstance(other, QTRational):
            return NotImplemented
        if isinstance(other, int):
            return QTPoly(p_scale(self.d, other))
        return QTPoly(p_mul(self.d, _coerce_dict(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return QTPoly(p_neg(self.d))

    def __eq__(self, other):
        if isinstance(other, QTRational):
            return other == self
        try:
            return self.d == _coerce_dict(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.d.items()))

    def __bool__(self):
        return bool(self.d)

    def swap_qt(self):
        return QTPoly(p_swap(self.d))

    def specialize(self, q=None, t=None):
        return QTPoly(p_eval(self.d, q, t))

    def total_degree(self):
        return p_total_degree(self.d)

    def min_exponents(self):
        return p_min_exp(self.d)

    def is_polynomial(self):
        lo = p_min_exp(self.d)
        return lo[0] >= 0 and lo[1] >= 0

    def divexact(self, other):
        q = p_divexact(self.d, _coerce_dict(other))
        if q is None:
            raise NonPolynomial("%s does not divide %s" % (other, self))
        return QTPoly(q)

    def to_json(self):
        return p_to_json(self.d)

    def __str__(self):
        return p_str(self.d)

    def __repr__(self):
        return "QTPoly(%s)" % p_str(self.d)


Q = QTPoly.monomial(1, 0)
T = QTPoly.monomial(0, 1)
ONE = QTPoly.const(1)


class QTRational:
    """Quotient of two QTPoly values, kept unreduced until needed."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, QTPoly):
            num = QTPoly.const(num) if isinstance(num, int) else num
        if den is None:
            den = ONE
        if not isinstance(den, QTPoly):
            den = QTPoly.const(den) if isinstance(den, int) else den
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @staticmethod
    def _split(other):
        if isinstance(other, QTRational):
            return other.num, other.den
        if isinstance(other, QTPoly):
            return other, ONE
        if isinstance(other, int):
            return QTPoly.const(other), ONE
        raise TypeError("cannot mix QTRational with %r" % type(other).__name__)

    def __add__(self, other):
        n, d = self._split(other)
        return QTRational(self.num * d + n * self.den, self.den * d)

    __radd__ = __add__

    def __sub__(self, other):
        n, d = self._split(other)
        return QTRational(self.num * d - n * self.den, self.den * d)

    def __rsub__(self, other):
        n, d = self._split(other)
        return QTRational(n * self.den - self.num * d, self.den * d)

    def __mul__(self, other):
        n, d = self._split(other)
        return QTRational(self.num * n, self.den * d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        n, d = self._split(other)
        if not n:
            raise ZeroDivisionError("division by zero")
        return QTRational(self.num * d, self.den * n)

    def __rtruediv__(self, other):
        n, d = self._split(other)
        if not self.num:
            raise ZeroDivisionError("division by zero")
        return QTRational(n * self.den, d * self.num)

    def __neg__(self):
        return QTRational(-self.num, self.den)

    def __eq__(self, other):
        try:
            n, d = self._split(other)
        except TypeError:
            return NotImplemented
        return self.num * d == n * self.den

    def __hash__(self):
        r = self.reduce()
        return hash((r.num, r.den))

    def __bool__(self):
        return bool(self.num)

    def swap_qt(self):
        return QTRational(self.num.swap_qt(), self.den.swap_qt())

    def reduce(self):
        """Cancel the gcd and normalize signs and monomial shifts."""
        if not self.num:
            return QTRational(QTPoly(), ONE)
        g = QTPoly(p_gcd(self.num.d, self.den.d))
        num = self.num.divexact(g)
        den = self.den.divexact(g)
        nmin, dmin = num.min_exponents(), den.min_exponents()
        dq, dt = min(nmin[0], dmin[0]), min(nmin[1], dmin[1])
        if dq or dt:
            num = QTPoly(p_shift(num.d, -dq, -dt))
            den = QTPoly(p_shift(den.d, -dq, -dt))
        if den.d[_lead_key(den.d)] < 0:
            num, den = -num, -den
        return QTRational(num, den)

    def to_polynomial(self):
        q = p_divexact(self.num.d, self.den.d)
        if q is None:
            raise NonPolynomial(
                "(%s) / (%s) is not a polynomial" % (self.num, self.den))
        return QTPoly(q)

    def __str__(self):
        r = self.reduce()
        if r.den == ONE:
            return str(r.num)
        return "(%s)/(%s)" % (r.num, r.den)

    def __repr__(self):
        return "QTRational(%s)" % self


def star(x):
    """Replace a zero by one; leave everything else alone."""
    if isinstance(x, int):
        return x if x else 1
    if isinstance(x, (QTPoly, QTRational)):
        return x if x else ONE
    raise TypeError("star is undefined for %r" % type(x).__name__)


def specialize(f, q=None, t=None):
    """Substitute integer values into a QTPoly or QTRational."""
    if isinstance(f, QTPoly):
        return f.specialize(q=q, t=t)
    if isinstance(f, QTRational):
        den = f.den.specialize(q=q, t=t)
        if not den:
            f = f.reduce()
            den = f.den.specialize(q=q, t=t)
            if not den:
                raise ZeroDivisionError("denominator vanishes at q=%r t=%r"
                                        % (q, t))
        return QTRational(f.num.specialize(q=q, t=t), den)
    raise TypeError("specialize expects QTPoly or QTRational")
