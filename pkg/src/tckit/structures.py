"""Pivotal structures, sphericality and quadruple-dual trivializations.

The double right dual acts on the splitting vector ê^{ij}_k by a scalar
tau^{ij}_k.  A pivotal structure is a labelling p with p_unit = 1 and
p_i p_j = tau^{ij}_k p_k on every admissible triple.  Right-dual witnesses
of x are the left-dual witnesses of dual(x).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .category import FSymbolTable
from .composite import TreeState
from .duality import DualityChoices, quantum_trace, standard_duality
from .scalars import Scalar, nth_roots

__all__ = [
    "DoubleDualGauge",
    "PivotalStructure",
    "QuadDualReport",
    "double_dual_gauge",
    "solve_multiplicative",
    "pivotal_solve",
    "quantum_dimensions",
    "spherical_check",
    "quadruple_dual_check",
]


@dataclass(frozen=True)
class DoubleDualGauge:
    tau: Mapping  # (i, j, k) -> Scalar


@dataclass(frozen=True)
class PivotalStructure:
    p: tuple  # Scalars indexed by label

    def __getitem__(self, i):
        return self.p[i]


def _bend_twice(F: FSymbolTable, i: int, j: int, k: int) -> Scalar:
    ring = F.ring
    dual = ring.dual

    def c_ev(x):
        return standard_duality(F, x).c_ev

    def c_coev(x):
        return standard_duality(F, x).c_coev

    ib, jb, kb = dual[i], dual[j], dual[k]
    # f* : j̄ ī -> k̄ for f = ê^{ij}_k
    st = TreeState.basis(F, (jb, ib), (jb, kb))
    st = st.cup(2, k, kb, c_coev(kb))
    st = st.split(2, i, j)
    st = st.cap(1, c_ev(ib))
    st = st.cap(0, c_ev(jb))
    sigma = st.scalar()
    # (f*)* : k -> i j
    st = TreeState.basis(F, (k,))
    st = st.cup(1, jb, j, c_coev(j))
    st = st.cup(2, ib, i, c_coev(i))
    st = st.fuse(1, kb, sigma)
    st = st.cap(0, c_ev(k))
    return st.coefficient((i, k))


def double_dual_gauge(F: FSymbolTable) -> DoubleDualGauge:
    return DoubleDualGauge({t: _bend_twice(F, *t) for t in sorted(F.ring.triples)})


def solve_multiplicative(F: FSymbolTable, t: Mapping) -> list[tuple]:
    """All p with p_unit = 1 and p_i p_j = t[i,j,k] p_k, values in the base field.

    Labels are fixed one at a time: propagation through triples with two known
    entries, then for a free label x a fusion path x -> x^2 -> ... -> 1 gives
    p_x^m = c, whose m-th roots in the field are tried in turn.
    """
    ring = F.ring
    r = ring.rank
    one = F.field.one()
    triples = sorted(ring.triples)
    solutions: list[tuple] = []

    def propagate(p):
        changed = True
        while changed:
            changed = False
            for i, j, k in triples:
                known = (p[i] is not None, p[j] is not None, p[k] is not None)
                if all(known):
                    if p[i] * p[j] != t[(i, j, k)] * p[k]:
                        return None
                elif known[0] and known[1]:
                    p[k] = p[i] * p[j] / t[(i, j, k)]
                    changed = True
                elif known[0] and known[2] and i != j:
                    p[j] = t[(i, j, k)] * p[k] / p[i]
                    changed = True
                elif known[1] and known[2] and i != j:
                    p[i] = t[(i, j, k)] * p[k] / p[j]
                    changed = True
        return p

    def power_relation(x):
        # BFS over labels reachable as summands of x^m: p_z = c_z * p_x^{m_z}
        seen = {x: (1, one)}
        queue = [x]
        while queue:
            z = queue.pop(0)
            m, c = seen[z]
            for w in ring.fuse(z, x):
                if w not in seen:
                    seen[w] = (m + 1, c / t[(z, x, w)])
                    if w == ring.unit:
                        mm, cc = seen[w]
                        return mm, cc.inverse()
                    queue.append(w)
        raise AssertionError("unit never reached in powers of a simple")

    def search(p):
        p = propagate(p)
        if p is None:
            return
        free = [x for x in range(r) if p[x] is None]
        if not free:
            if all(p[i] * p[j] == t[(i, j, k)] * p[k] for i, j, k in triples):
                sol = tuple(p)
                if sol not in solutions:
                    solutions.append(sol)
            return
        x = free[0]
        m, c = power_relation(x)
        for root in nth_roots(c, m):
            q = list(p)
            q[x] = root
            search(q)

    start = [None] * r
    start[ring.unit] = one
    search(start)
    return solutions


def pivotal_solve(F: FSymbolTable) -> list[PivotalStructure]:
    tau = double_dual_gauge(F).tau
    return [PivotalStructure(p) for p in solve_multiplicative(F, tau)]


def quantum_dimensions(F: FSymbolTable, P: PivotalStructure) -> list[Scalar]:
    choices = DualityChoices(F)
    return [quantum_trace(F, choices, i, P[i]) for i in range(F.ring.rank)]


def spherical_check(F: FSymbolTable, P: PivotalStructure) -> bool:
    d = quantum_dimensions(F, P)
    return all(d[i] == d[F.ring.dual[i]] for i in range(F.ring.rank))


@dataclass(frozen=True)
class QuadDualReport:
    solvable: bool
    witness: tuple | None
    distinguished: int
    solutions: int


def quadruple_dual_check(F: FSymbolTable) -> QuadDualReport:
    """Solve q_i q_j = (tau^{ij}_k)^2 q_k.

    The distinguished object is the projective cover of the unit, which in a
    semisimple category is the unit itself.
    """
    tau = double_dual_gauge(F).tau
    sols = solve_multiplicative(F, {key: v * v for key, v in tau.items()})
    return QuadDualReport(bool(sols), sols[0] if sols else None, F.ring.unit, len(sols))
