"""Scalar shadow of the Frobenius algebra A = ⊕ L_i ⊠ *L_i.

Each label contributes two pairings on its ⊠-factors, ``e_i`` and
``*(e_i⁻)`` (both in Hom(i⊗ī, 1)), and the copairings ``γ`` of each.  The
module makes its own duality choices: ev_x := e_x, coev_x := γ(e_x).
Nothing here calls into the trace or norm code.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Mapping

from .category import FSymbolTable
from .duality import MorphismScalar, dual_morphism, gamma, standard_duality, zigzags
from .scalars import Scalar

__all__ = [
    "FrobeniusData",
    "FrobeniusReport",
    "SeparabilityReport",
    "build_frobenius",
    "frobenius_axioms_check",
    "window_element",
    "separability_check",
]


@dataclass(frozen=True)
class FrobeniusData:
    F: FSymbolTable = field(repr=False)
    e: tuple  # s_i: e_i = s_i e^{iī}_1
    pairing: tuple  # (b1_i, b2_i) in Hom(i⊗ī, 1)
    copairing: tuple  # (c1_i, c2_i) in Hom(1, ī⊗i)
    unit: Scalar  # u : 1 -> A on the L_1 ⊠ L_1 summand
    counit: Scalar  # λ : A -> 1 on the same summand

    def with_copairing(self, label: int, factor: int, value) -> "FrobeniusData":
        cop = [list(c) for c in self.copairing]
        cop[label][factor] = self.F.field(value)
        return replace(self, copairing=tuple(tuple(c) for c in cop))


def build_frobenius(F: FSymbolTable, scales: Mapping | None = None) -> FrobeniusData:
    """Build the pairing data; ``scales[i]`` rescales the basis evaluation e_i."""
    ring = F.ring
    r = ring.rank
    scales = scales or {}
    s = [standard_duality(F, i).c_ev * F.field(scales.get(i, 1)) for i in range(r)]
    e = [MorphismScalar(F, (i, ring.dual[i]), (), s[i]) for i in range(r)]
    c1 = [gamma(F, e[i]) for i in range(r)]
    coev = lambda x: c1[x].value  # noqa: E731
    ev = lambda x: e[x].value  # noqa: E731
    b2 = []
    for i in range(r):
        e_minus = MorphismScalar(F, (), (i, ring.dual[i]), s[i].inverse())
        b2.append(dual_morphism(F, e_minus, coev=coev, ev=ev))
    c2 = [gamma(F, b) for b in b2]
    one = F.field.one()
    return FrobeniusData(
        F=F,
        e=tuple(s),
        pairing=tuple((e[i].value, b2[i].value) for i in range(r)),
        copairing=tuple((c1[i].value, c2[i].value) for i in range(r)),
        unit=one,
        counit=one,
    )


@dataclass(frozen=True)
class FrobeniusReport:
    passed: bool
    failures: tuple  # (label name, factor, zigzag scalars)

    def __bool__(self):
        return self.passed


def frobenius_axioms_check(data: FrobeniusData) -> FrobeniusReport:
    F = data.F
    one = F.field.one()
    failures = []
    for i in range(F.ring.rank):
        for k in (0, 1):
            z = zigzags(F, i, data.copairing[i][k], data.pairing[i][k])
            if z != (one, one):
                failures.append((F.ring.labels[i], k, tuple(str(v) for v in z)))
    if data.counit * data.unit != one:
        failures.append(("counit", 0, (str(data.counit * data.unit),)))
    return FrobeniusReport(not failures, tuple(failures))


def window_element(data: FrobeniusData) -> Scalar:
    """w = Σ_i (e_i ∘ γ(e_ī)) · (*(e_i⁻) ∘ γ(*(e_ī⁻)))."""
    F = data.F
    ring = F.ring
    total = F.field.zero()
    for i in range(ring.rank):
        ib = ring.dual[i]
        pair = (i, ib)
        terms = []
        for k in (0, 1):
            b = MorphismScalar(F, pair, (), data.pairing[i][k])
            c = MorphismScalar(F, (), pair, data.copairing[ib][k])
            terms.append(c.then(b).value)
        total = total + terms[0] * terms[1]
    return total * data.counit * data.unit


@dataclass(frozen=True)
class SeparabilityReport:
    separable: bool
    dimension: Scalar
    note: str

    def __bool__(self):
        return self.separable


def separability_check(F: FSymbolTable) -> SeparabilityReport:
    from .duality import global_dimension

    dim = global_dimension(F)
    if dim.is_zero():
        note = f"global dimension vanishes in {F.field}; not separable"
    else:
        note = "separable; Δ/dim(C) splits the multiplication"
    return SeparabilityReport(not dim.is_zero(), dim, note)
