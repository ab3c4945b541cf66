"""The n-independent carrier of a stable tensor family.

A stable family still shows n in its right-hand indices.  Three
reversible moves strip it out: a plethystic shift by one variable on
the left alphabet, a right-basis change from Schur to elementary, and
removal of the padding part that the elementary indices all share.
What remains is a single finite tensor with integer coefficients from
which every large-n member is rebuilt by reversing the moves.  The
rebuild is faithful exactly when no left index was truncated away,
i.e. when min(len(tau), tau[0]) <= 2.

Also here: the principal evaluations of the carrier (left variables
set to 1 or 0) and the one-parameter area sum that matches the t = 1
slice.
"""

from . import partitions as pt
from .errors import NTooSmall
from .negut import epsilon
from .qtring import QTPoly
from .symfunc import (SymExpr, e_to_schur, horizontal_strip_remove,
                      principal_dim, schur_to_e, skew_schur,
                      vertical_strip_remove)
from .tensorform import TensorExpr, decompose_qt, stabilize, unbar


def _bump(d, key, c):
    w = d.get(key, 0) + c
    if w:
        d[key] = w
    else:
        d.pop(key, None)


def shift_left(T, direction):
    """Plethystic shift of the left alphabet by one variable.

    Direction +1 adjoins the variable: each left s_rho becomes the sum
    of s_mu over horizontal strips rho/mu.  Direction -1 removes it
    again: the signed sum over vertical strips.  The two compose to the
    identity in either order.
    """
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    out = {}
    for (lam, mu), c in T.terms.items():
        if direction == 1:
            for k in range((lam[0] if lam else 0) + 1):
                for rho in horizontal_strip_remove(lam, k):
                    _bump(out, (rho, mu), c)
        else:
            for k in range(len(lam) + 1):
                sign = -1 if k % 2 else 1
                for rho in vertical_strip_remove(lam, k):
                    _bump(out, (rho, mu), sign * c)
    return TensorExpr(T.right_basis, out)


def down_arrow(T):
    """Drop the leading part of every right index; collisions add up."""
    if T.right_basis != "e":
        raise ValueError("right basis must be elementary")
    out = {}
    for (lam, mu), c in T.terms.items():
        _bump(out, (lam, mu[1:]), c)
    return TensorExpr("e", out)


def up_arrow(T, n):
    """Multiply every right index by the elementary of complementary degree.

    The padding part n - |mu| lands wherever sorting puts it, so this
    inverts down_arrow only when the pad is at least the largest part
    already there.
    """
    if T.right_basis != "e":
        raise ValueError("right basis must be elementary")
    out = {}
    for (lam, mu), c in T.terms.items():
        pad = n - pt.size(mu)
        if pad < 0:
            raise NTooSmall("cannot pad %s up to degree %d"
                            % (list(mu), n))
        nu = tuple(sorted(mu + (pad,), reverse=True)) if pad else mu
        _bump(out, (lam, nu), c)
    return TensorExpr("e", out)


class EArrowExpr:
    """A universal tensor together with its reliability flag.

    exact means every coefficient is determined; otherwise left indices
    with three or more rows were invisible to the construction and the
    surviving entries may be incomplete as well.
    """

    __slots__ = ("tensor", "exact")

    def __init__(self, tensor, exact):
        if tensor.right_basis != "e":
            raise ValueError("right basis must be elementary")
        self.tensor = tensor
        self.exact = bool(exact)

    def __eq__(self, other):
        if not isinstance(other, EArrowExpr):
            return NotImplemented
        return self.tensor == other.tensor and self.exact == other.exact

    def __hash__(self):
        return hash((self.tensor, self.exact))

    def __repr__(self):
        tag = "exact" if self.exact else "partial"
        return "EArrowExpr(%r, %s)" % (self.tensor, tag)


def _right_schur_to_e(T):
    out = {}
    for (lam, mu), c in T.terms.items():
        for nu, w in schur_to_e(mu).items():
            _bump(out, (lam, nu), c * w)
    return TensorExpr("e", out)


def _right_e_to_schur(T):
    out = {}
    for (lam, nu), c in T.terms.items():
        for mu, w in e_to_schur(nu).items():
            _bump(out, (lam, mu), c * w)
    return TensorExpr("s", out)


def f_tau(tau):
    """Universal form of the stable family attached to tau.

    Stabilizes the first-column quotient, rebuilds the two smallest
    stable members, and pushes both through shift / rebase / drop; the
    results must agree and the common value is returned.  The exact
    flag is set iff min(len(tau), tau[0]) <= 2, the range in which two
    alphabets see every left index.
    """
    tau = pt.check_partition(tau)
    stable, n0 = stabilize(tau)
    forms = []
    for n in (n0, n0 + 1):
        T = shift_left(unbar(stable, n), 1)
        forms.append(down_arrow(_right_schur_to_e(T)))
    assert forms[0] == forms[1], \
        "universal form for tau=%s depends on n" % (list(tau),)
    exact = (not tau) or min(len(tau), tau[0]) <= 2
    return EArrowExpr(forms[0], exact)


def e_from_f(F, n):
    """Rebuild the level-n member of the family from its universal form.

    Refuses a partial form: with three-row left indices missing there
    is no faithful reconstruction at any n.
    """
    if isinstance(F, EArrowExpr):
        if not F.exact:
            raise ValueError("cannot rebuild from a partial universal form")
        F = F.tensor
    return _right_e_to_schur(up_arrow(shift_left(F, -1), n))


def area_sum(tau, n):
    """One-parameter skew sum over the subdiagrams of tau.

    Each subpartition alpha contributes q^(|tau| - |alpha|) times the
    skew Schur function of (alpha + 1^n) over alpha.  The total equals
    the t = 1 slice of the two-parameter expansion.
    """
    tau = pt.check_partition(tau)
    if n < pt.length(tau):
        raise NTooSmall("need n >= %d for tau=%s, got %d"
                        % (pt.length(tau), list(tau), n))
    ones = (1,) * n
    total = {}
    for alpha in pt.subpartitions(tau):
        w = QTPoly.monomial(pt.size(tau) - pt.size(alpha), 0)
        for lam, c in skew_schur(pt.partwise_add(alpha, ones),
                                 alpha).terms.items():
            prev = total.get(lam)
            cur = w * c if prev is None else prev + w * c
            total[lam] = cur
    return SymExpr("s", {lam: c for lam, c in total.items() if c})


def _specialized_e(tau, n, q, t):
    terms = {}
    for lam, c in epsilon(tau, n).terms.items():
        v = c.specialize(q=q, t=t)
        iv = v.d.get((0, 0), 0)
        if iv:
            terms[lam] = iv
    return SymExpr("s", terms).in_basis("e")


def principal_eval(tau, k, n=None):
    """Left principal evaluation of the padded universal form.

    k counts the left variables set to one, the rest being zero; the
    result is the elementary expansion of the level-n member this
    induces.  Values k = 0 and k = 1 collapse to the point evaluations
    (q,t) = (1,0) and (1,1) of the two-parameter family, available for
    every shape.  k = 2 needs the full left support and is served only
    when the universal form is exact.
    """
    tau = pt.check_partition(tau)
    if k not in (0, 1, 2):
        raise ValueError("k must be 0, 1, or 2")
    if n is None:
        n = stabilize(tau)[1]
    if k < 2:
        return _specialized_e(tau, n, 1, k)
    F = f_tau(tau)
    if not F.exact:
        raise ValueError("k = 2 needs an exact universal form; "
                         "tau=%s is only two-variable determined"
                         % (list(tau),))
    return principal_eval_f(F, 2, n)


def principal_eval_f(F, k, n):
    """Principal evaluation of an explicit universal form at level n.

    Weights each left index by the number of its semistandard fillings
    with entries at most k, pads the right indices up to degree n, and
    returns the elementary expansion.
    """
    if isinstance(F, EArrowExpr):
        F = F.tensor
    if F.right_basis != "e":
        raise ValueError("right basis must be elementary")
    if k < 0:
        raise ValueError("need k >= 0")
    out = {}
    for (lam, nu), c in up_arrow(F, n).terms.items():
        d = principal_dim(lam, k)
        if d:
            _bump(out, nu, c * d)
    return SymExpr("e", out)
