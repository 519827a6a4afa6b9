"""Skeletal fusion categories presented by F-symbols.

``F[a, b, c, d, e, f]`` is the coefficient of the right tree
``(b c -> f, a f -> d)`` in the associator applied to the left tree
``(a b -> e, e c -> d)``.  Entries with a unit among ``a, b, c`` are 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping

from . import linalg
from .errors import CategoryValidationError
from .fusion_ring import FusionRing
from .scalars import FieldSpec, Scalar

__all__ = [
    "FSymbolTable",
    "PentagonReport",
    "admissible_hexatuples",
    "pentagon_check",
    "gauge_transform",
]


def admissible_hexatuples(ring: FusionRing):
    """All (a, b, c, d, e, f) with N_ab^e N_ec^d = N_bc^f N_af^d = 1, lexicographic."""
    r = ring.rank
    out = []
    for a, b, c in itertools.product(range(r), repeat=3):
        for e in ring.fuse(a, b):
            for d in ring.fuse(e, c):
                for f in ring.fuse(b, c):
                    if ring.N(a, f, d):
                        out.append((a, b, c, d, e, f))
    return sorted(out)


@dataclass(frozen=True, eq=False)
class FSymbolTable:
    """Validated F-symbol data over a fusion ring.

    Use :meth:`build` to construct; it checks completeness, the field of every
    entry, unit strictness and invertibility of each F-block.
    """

    ring: FusionRing
    field: FieldSpec
    F: Mapping
    name: str = "custom"
    _blocks: dict = field(default_factory=dict, repr=False)
    _inverses: dict = field(default_factory=dict, repr=False)

    @classmethod
    def build(cls, ring: FusionRing, fld: FieldSpec, entries: Mapping, name: str = "custom") -> "FSymbolTable":
        hexes = admissible_hexatuples(ring)
        allowed = set(hexes)
        table = {}
        for key, value in entries.items():
            key = tuple(key)
            if key not in allowed:
                raise CategoryValidationError("inadmissible entry", _named(ring, key))
            if isinstance(value, Scalar):
                if value.field != fld:
                    raise CategoryValidationError(
                        "field mismatch", _named(ring, key), f"entry {_named(ring, key)} lies in {value.field}, not {fld}"
                    )
            else:
                value = fld(value)
            table[key] = value
        for key in hexes:
            if key not in table:
                raise CategoryValidationError("missing entry", _named(ring, key))
            a, b, c = key[:3]
            if ring.unit in (a, b, c) and table[key] != fld.one():
                raise CategoryValidationError("unit entry not 1", _named(ring, key))
        obj = cls(ring=ring, field=fld, F=table, name=name)
        for a, b, c, d in sorted({h[:4] for h in hexes}):
            rows, cols, m = obj.block(a, b, c, d)
            if linalg.determinant(m).is_zero():
                raise CategoryValidationError("singular F-matrix", _named(ring, (a, b, c, d)))
        return obj

    # lookup ----------------------------------------------------------------

    def __getitem__(self, key) -> Scalar:
        return self.F[tuple(key)]

    def get(self, a, b, c, d, e, f) -> Scalar:
        """F-entry, or zero for inadmissible label tuples."""
        return self.F.get((a, b, c, d, e, f), self.field.zero())

    def block(self, a, b, c, d):
        """(row labels e, column labels f, matrix) of F^{abc}_d."""
        key = (a, b, c, d)
        if key not in self._blocks:
            ring = self.ring
            es = [e for e in ring.fuse(a, b) if ring.N(e, c, d)]
            fs = [f for f in ring.fuse(b, c) if ring.N(a, f, d)]
            m = [[self.F[(a, b, c, d, e, f)] for f in fs] for e in es]
            self._blocks[key] = (es, fs, m)
        return self._blocks[key]

    def inverse_entry(self, a, b, c, d, f, e) -> Scalar:
        """Entry [f, e] of the inverse of F^{abc}_d (zero if inadmissible)."""
        key = (a, b, c, d)
        if key not in self._inverses:
            es, fs, m = self.block(a, b, c, d)
            if not es:
                self._inverses[key] = {}
            else:
                inv = linalg.inverse(m)
                self._inverses[key] = {(fs[i], es[j]): inv[i][j] for i in range(len(fs)) for j in range(len(es))}
        return self._inverses[key].get((f, e), self.field.zero())

    def with_entries(self, changes: Mapping, name: str | None = None) -> "FSymbolTable":
        """A new validated table with some entries replaced."""
        entries = dict(self.F)
        entries.update({tuple(k): v for k, v in changes.items()})
        return FSymbolTable.build(self.ring, self.field, entries, name or self.name)

    def __eq__(self, other):
        if not isinstance(other, FSymbolTable):
            return NotImplemented
        return self.ring == other.ring and self.field == other.field and dict(self.F) == dict(other.F)

    def __hash__(self):
        return hash((self.ring.labels, self.field, len(self.F)))


def _named(ring, key):
    return tuple(ring.labels[i] for i in key)


@dataclass(frozen=True)
class PentagonReport:
    passed: bool
    checked: int
    witness: tuple | None = None  # (a, b, c, d, e, f, g, k, l) label names
    lhs: Scalar | None = None
    rhs: Scalar | None = None

    def __bool__(self):
        return self.passed

    def __str__(self):
        if self.passed:
            return f"pentagon: pass ({self.checked} instances)"
        a, b, c, d, e, f, g, k, l = self.witness
        return (
            f"pentagon: FAIL at outer ({a},{b},{c},{d};{e}) internal f={f} g={g} k={k} l={l}: "
            f"lhs = {self.lhs}, rhs = {self.rhs}"
        )


def pentagon_check(F: FSymbolTable) -> PentagonReport:
    """Check every pentagon instance exactly.

    For outer labels (a, b, c, d; e) and internal f, g, k, l:
    F^{fcd}_e[g,l] F^{abl}_e[f,k] = sum_h F^{abc}_g[f,h] F^{ahd}_e[g,k] F^{bcd}_k[h,l].
    Instances are visited in lexicographic order of (a, b, c, d, e, f, g, k, l).
    """
    ring = F.ring
    r = ring.rank
    get = F.get
    count = 0
    for a, b, c, d in itertools.product(range(r), repeat=4):
        inst = []
        for f in ring.fuse(a, b):
            for g in ring.fuse(f, c):
                for e in ring.fuse(g, d):
                    for l in ring.fuse(c, d):
                        for k in ring.fuse(b, l):
                            if ring.N(a, k, e):
                                inst.append((e, f, g, k, l))
        inst.sort()
        for e, f, g, k, l in inst:
            count += 1
            lhs = get(f, c, d, e, g, l) * get(a, b, l, e, f, k)
            rhs = F.field.zero()
            for h in ring.fuse(b, c):
                if ring.N(a, h, g) and ring.N(h, d, k):
                    rhs = rhs + get(a, b, c, g, f, h) * get(a, h, d, e, g, k) * get(b, c, d, k, h, l)
            if lhs != rhs:
                return PentagonReport(False, count, _named(ring, (a, b, c, d, e, f, g, k, l)), lhs, rhs)
    return PentagonReport(True, count)


def gauge_transform(F: FSymbolTable, u: Mapping) -> FSymbolTable:
    """Rescale the fusion-tree basis by ``u[(a, b, c)]`` (missing entries count as 1).

    F'^{abc}_d[e,f] = F^{abc}_d[e,f] u^{ab}_e u^{ec}_d / (u^{bc}_f u^{af}_d).
    """
    ring, fld = F.ring, F.field
    one = fld.one()
    gauge = {}
    for key, val in u.items():
        key = tuple(key)
        if not ring.N(*key):
            raise CategoryValidationError("gauge on inadmissible triple", _named(ring, key))
        val = fld(val)
        if val.is_zero():
            raise CategoryValidationError("zero gauge entry", _named(ring, key))
        if ring.unit in key[:2] and val != one:
            raise CategoryValidationError("gauge on unit triple must be 1", _named(ring, key))
        gauge[key] = val

    def g(a, b, c):
        return gauge.get((a, b, c), one)

    out = {}
    for (a, b, c, d, e, f), val in F.F.items():
        out[(a, b, c, d, e, f)] = val * g(a, b, e) * g(e, c, d) / (g(b, c, f) * g(a, f, d))
    return FSymbolTable.build(ring, fld, out, F.name)
