"""Frozen reference expansions and their loader.

Each fixture lives in its own JSON file named <id>.json inside the
packaged ``fixtures_data`` directory, or wherever the TRIHARM_FIXTURES
environment variable points.  The ``kind`` tag says how to decode the
payload:

``sym``
    symmetric function with integer coefficients
``tensor``
    pairs of partitions with integer coefficients
``qtsym``
    Schur expansion whose coefficients are integer q,t-polynomials
``hookpoly``
    integer polynomial in u, v indexed by (arm, leg)
``display``
    tensor given by explicit columns plus perp columns; a perp column
    at right index mu with parameter k expands to e_k-perp applied to
    the base column (right index 1^n for Schur right basis, the empty
    partition for the elementary right basis)
``kpoly``
    integer-valued polynomials in k, one per e-index tail
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from importlib import resources

from . import partitions as pt
from .qtring import QTPoly
from .symfunc import SymExpr, e_perp
from .tensorform import HookPoly, TensorExpr

ENV_VAR = "TRIHARM_FIXTURES"

KINDS = ("sym", "tensor", "qtsym", "hookpoly", "display", "kpoly")


class FixtureError(ValueError):
    pass


def _decode_sym(obj):
    if obj.get("basis") not in ("s", "e"):
        raise FixtureError("sym payload needs basis s or e")
    return SymExpr(obj["basis"],
                   {tuple(lam): int(c) for lam, c in obj["terms"]})


def _decode_tensor(obj):
    return TensorExpr(obj["right_basis"],
                      {(tuple(lam), tuple(mu)): int(c)
                       for lam, mu, c in obj["terms"]})


def _decode_qtsym(obj):
    out = {}
    for lam, rows in obj["terms"]:
        out[pt.check_partition(lam)] = QTPoly(
            {(eq, et): c for eq, et, c in rows})
    return out


def _decode_hookpoly(obj):
    return HookPoly({(a, l): c for a, l, c in obj["terms"]})


def _decode_display(obj):
    basis = obj["right_basis"]
    terms = {(tuple(lam), tuple(mu)): int(c)
             for lam, mu, c in obj["explicit"]}
    if basis == "s":
        base = (1,) * int(obj["n"])
    else:
        base = ()
    col = {lam: c for (lam, mu), c in terms.items() if mu == base}
    if not col:
        raise FixtureError("display has no base column")
    for mu, k in obj.get("perp", []):
        mu = tuple(mu)
        if any(key[1] == mu for key in terms):
            raise FixtureError("perp column %s collides with an explicit one"
                               % (list(mu),))
        for lam, c in e_perp(k, SymExpr("s", col)).terms.items():
            terms[(lam, mu)] = c
    return TensorExpr(basis, terms)


def _decode_kpoly(obj):
    entries = []
    for tail, num, den in obj["entries"]:
        if den <= 0:
            raise FixtureError("kpoly denominator must be positive")
        entries.append((pt.check_partition(tail),
                        tuple(int(c) for c in num), int(den)))
    return tuple(entries)


_DECODERS = {
    "sym": _decode_sym,
    "tensor": _decode_tensor,
    "qtsym": _decode_qtsym,
    "hookpoly": _decode_hookpoly,
    "display": _decode_display,
    "kpoly": _decode_kpoly,
}


@dataclass(frozen=True)
class Fixture:
    """One frozen reference value with its decoded payload."""

    id: str
    kind: str
    provenance: str
    annotation: str
    raw: dict = field(repr=False)
    payload: object = field(repr=False, compare=False)

    @classmethod
    def from_json(cls, obj):
        for key in ("id", "kind", "provenance", "payload"):
            if key not in obj:
                raise FixtureError("fixture record lacks %r" % key)
        kind = obj["kind"]
        if kind not in KINDS:
            raise FixtureError("unknown fixture kind %r" % kind)
        payload = _DECODERS[kind](obj["payload"])
        return cls(id=obj["id"], kind=kind, provenance=obj["provenance"],
                   annotation=obj.get("annotation", ""),
                   raw=obj["payload"], payload=payload)

    def to_json(self):
        out = {"id": self.id, "kind": self.kind,
               "provenance": self.provenance}
        if self.annotation:
            out["annotation"] = self.annotation
        out["payload"] = self.raw
        return out


def kpoly_value(entries, k):
    """Evaluate every tail polynomial at integer k; exact division."""
    out = {}
    for tail, num, den in entries:
        acc = 0
        for c in num:
            acc = acc * k + c
        if acc % den:
            raise FixtureError(
                "value at k=%d for tail %s is not divisible by %d"
                % (k, list(tail), den))
        v = acc // den
        if v:
            out[tail] = v
    return out


def kpoly_at_level(entries, k, n):
    """The k-evaluation as an e-expansion at x-degree n."""
    out = {}
    for tail, v in kpoly_value(entries, k).items():
        head = n - pt.size(tail)
        if head < (tail[0] if tail else 0):
            raise FixtureError("level %d too small for tail %s"
                               % (n, list(tail)))
        out[(head,) + tail] = v
    return SymExpr("e", out)


def data_dir():
    override = os.environ.get(ENV_VAR)
    if override:
        return override
    return str(resources.files("triharm") / "fixtures_data")


def load_dir(path=None):
    """Read every *.json fixture under path; ids must be unique."""
    path = path or data_dir()
    out = {}
    try:
        names = sorted(os.listdir(path))
    except FileNotFoundError:
        raise FixtureError("fixture directory %s does not exist" % path)
    for name in names:
        if not name.endswith(".json"):
            continue
        full = os.path.join(path, name)
        with open(full) as fh:
            try:
                obj = json.load(fh)
            except json.JSONDecodeError as exc:
                raise FixtureError("%s: %s" % (name, exc))
        fix = Fixture.from_json(obj)
        if fix.id in out:
            raise FixtureError("duplicate fixture id %r" % fix.id)
        if name != fix.id + ".json":
            raise FixtureError("file %s holds fixture id %r" % (name, fix.id))
        out[fix.id] = fix
    return out


_cache = None


def load_default(refresh=False):
    global _cache
    if _cache is None or refresh:
        _cache = load_dir()
    return _cache
