"""Integer partitions, their diagrams, and the triangular family.

Partitions are tuples of weakly decreasing positive integers; the empty
partition is (). Cells use (column, row) coordinates, both 0-based, with
row 0 at the bottom, so the cell set of (3, 1) is
{(0,0), (1,0), (2,0), (0,1)}.

A partition is triangular when its cell set equals the set of lattice
points (i, j) with i/r + j/s <= 1 for some positive rationals r, s.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NonTriangular, NotAPartition, NTooSmall


def check_partition(parts):
    """Canonicalize to a tuple, rejecting non-partitions."""
    t = tuple(int(p) for p in parts)
    for a, b in zip(t, t[1:]):
        if a < b:
            raise NotAPartition("parts must be weakly decreasing: %r" % (t,))
    if t and t[-1] <= 0:
        raise NotAPartition("parts must be positive: %r" % (t,))
    return t


def size(mu):
    return sum(mu)


def length(mu):
    return len(mu)


def conjugate(mu):
    """Transpose the diagram."""
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p > i) for i in range(mu[0]))


def cells(mu):
    """All (column, row) cells of the diagram, row by row."""
    return [(i, j) for j, p in enumerate(mu) for i in range(p)]


def contains(mu, nu):
    """True when the diagram of nu fits inside the diagram of mu."""
    if len(nu) > len(mu):
        return False
    return all(n <= m for m, n in zip(mu, nu))


def max_multiplicity(mu):
    """Largest number of repeats of any single part value; 0 for ()."""
    if not mu:
        return 0
    best = run = 1
    for a, b in zip(mu, mu[1:]):
        run = run + 1 if a == b else 1
        best = max(best, run)
    return best


def eta(mu):
    """Sum of the row coordinate over all cells."""
    return sum(j * p for j, p in enumerate(mu))


@dataclass(frozen=True)
class PartitionStats:
    size: int
    length: int
    max_multiplicity: int
    eta: int
    t_mu: tuple  # (q exponent, t exponent) of prod q^i t^j over cells


def stats(mu):
    mu = check_partition(mu)
    return PartitionStats(
        size=size(mu),
        length=len(mu),
        max_multiplicity=max_multiplicity(mu),
        eta=eta(mu),
        t_mu=(eta(conjugate(mu)), eta(mu)),
    )


def staircase(n):
    """(n-1, n-2, ..., 1); the partition cut out by x + y < n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return tuple(range(n - 1, 0, -1))


def partwise_add(mu, nu):
    """Componentwise sum after zero-padding the shorter one."""
    k = max(len(mu), len(nu))
    a = tuple(mu) + (0,) * (k - len(mu))
    b = tuple(nu) + (0,) * (k - len(nu))
    out = tuple(x + y for x, y in zip(a, b))
    return check_partition(tuple(p for p in out if p > 0))


def partwise_sub(mu, nu):
    """Componentwise difference mu - nu; raises if not a partition."""
    k = max(len(mu), len(nu))
    a = tuple(mu) + (0,) * (k - len(mu))
    b = tuple(nu) + (0,) * (k - len(nu))
    out = [x - y for x, y in zip(a, b)]
    if any(p < 0 for p in out):
        raise NotAPartition("difference has negative parts")
    return check_partition(tuple(p for p in out if p > 0))


def arm(mu, cell):
    """Cells strictly right of cell in its row."""
    i, j = cell
    return mu[j] - i - 1


def leg(mu, cell):
    """Cells strictly above cell in its column."""
    i, j = cell
    return sum(1 for jj in range(j + 1, len(mu)) if mu[jj] > i)


@dataclass(frozen=True)
class FrobeniusHook:
    """A hook shape with arm a and leg l, the partition (a+1, 1^l)."""
    arm: int
    leg: int

    def partition(self):
        return (self.arm + 1,) + (1,) * self.leg


def hook_partition(a, l):
    if a < 0 or l < 0:
        raise ValueError("arm and leg must be >= 0")
    return FrobeniusHook(a, l).partition()


def as_hook(mu):
    """Inverse of hook_partition; raises for non-hook shapes."""
    mu = check_partition(mu)
    if not mu or any(p != 1 for p in mu[1:]):
        raise NotAPartition("not a hook shape: %r" % (mu,))
    return FrobeniusHook(mu[0] - 1, len(mu) - 1)


@lru_cache(maxsize=None)
def partitions_of(n, max_part=None):
    """All partitions of n with parts at most max_part, as a tuple.

    Ordered reverse-lexicographically, so (n,) first and (1,)*n last.
    """
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def dominates(lam, mu):
    """Dominance order on partitions of equal size."""
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def subpartitions(mu):
    """All partitions whose diagram fits inside mu, largest parts first."""
    mu = check_partition(mu)
    out = []

    def rec(idx, prev, acc):
        if idx == len(mu):
            out.append(tuple(acc))
            return
        top = min(prev, mu[idx])
        for p in range(top, -1, -1):
            if p == 0:
                out.append(tuple(acc))
                return
            acc.append(p)
            rec(idx + 1, p, acc)
            acc.pop()

    rec(0, mu[0] if mu else 0, [])
    return out


def _column_heights(mu):
    heights = conjugate(mu)
    top = mu[0] if mu else 0
    return [heights[i] if i < len(heights) else 0 for i in range(top + 1)]


def triangular_certificate(tau):
    """A line (r, s) with cells(tau) = {(i,j): i/r + j/s <= 1}, or None
    for the empty partition.  Raises NonTriangular when no line exists.

    Searches normal directions (u, v) spanned by point pairs of the
    diagram boundary, plus slight perturbations so lines through several
    lattice points can be tilted off them.
    """
    tau = check_partition(tau)
    if not tau:
        return None
    inside = cells(tau)
    heights = _column_heights(tau)
    outside = [(i, h) for i, h in enumerate(heights)]
    pts = inside + outside
    big = 2 * (tau[0] + len(tau) + 2) ** 3
    cand = {(1, big), (big, 1), (1, 1)}
    for x1, y1 in pts:
        for x2, y2 in pts:
            u, v = abs(y1 - y2), abs(x1 - x2)
            if u == 0 and v == 0:
                continue
            cand.add((u * big + 1, v * big))
            cand.add((u * big, v * big + 1))
            if u > 0 and v > 0:
                cand.add((u, v))
    for u, v in cand:
        if u <= 0 or v <= 0:
            continue
        hi = max(u * i + v * j for i, j in inside)
        lo = min(u * i + v * j for i, j in outside)
        if hi < lo:
            c = Fraction(hi + lo, 2)
            return (c / u, c / v)
    raise NonTriangular("no line cuts out %r" % (tau,))


def is_triangular(tau):
    try:
        triangular_certificate(check_partition(tau))
    except NonTriangular:
        return False
    return True


def cells_under_line(r, s):
    """Lattice points (i, j) with i/r + j/s <= 1, as a partition."""
    if r <= 0 or s <= 0:
        raise ValueError("intercepts must be positive")
    rows = []
    j = 0
    while Fraction(j) / s <= 1:
        width = int(r * (1 - Fraction(j) / s)) + 1
        rows.append(width)
        j += 1
    return tuple(p for p in rows if p > 0)


@lru_cache(maxsize=None)
def enumerate_triangular(max_size):
    """All triangular partitions of size at most max_size.

    Sorted by size, then reverse-lexicographically within a size.
    """
    out = []
    for n in range(max_size + 1):
        for mu in partitions_of(n):
            if is_triangular(mu):
                out.append(mu)
    return tuple(out)


def multiplicities(mu):
    """Repeat counts of the distinct parts, largest part first."""
    out = []
    for p in mu:
        if out and out[-1][0] == p:
            out[-1][1] += 1
        else:
            out.append([p, 1])
    return tuple(m for _, m in out)


def whittaker_index(tau, n):
    """Index of the specialization target at t = 0.

    Requires n >= length(tau) + max_multiplicity(tau); the answer is the
    conjugate of (n - length(tau)) followed by the part repeat counts.
    """
    tau = check_partition(tau)
    l, m = len(tau), max_multiplicity(tau)
    if n < l + m:
        raise NTooSmall("need n >= %d for tau=%r, got %d" % (l + m, tau, n))
    return conjugate((n - l,) + multiplicities(tau))
