"""Rigidity witnesses, quantum traces, squared norms and global dimension.

Conventions: the left dual of ``x`` is the label ``dual(x)``; evaluation
``ev_x : x (*x) -> 1`` is ``c_ev * e^{x x̄}_1`` and coevaluation
``coev_x : 1 -> (*x) x`` is ``c_coev * ê^{x̄ x}_1``.  Every scalar below is
obtained by running the string diagram through :class:`TreeState`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .category import FSymbolTable
from .composite import TreeState
from .errors import TCKitError, ZigzagObstruction
from .scalars import Scalar

__all__ = [
    "DualPair",
    "DualityChoices",
    "MorphismScalar",
    "zigzags",
    "obstruction_entry",
    "standard_duality",
    "random_choices",
    "gamma",
    "ev_witness",
    "coev_witness",
    "dual_morphism",
    "quantum_trace",
    "squared_norm",
    "squared_norms",
    "global_dimension",
]


@dataclass(frozen=True)
class DualPair:
    c_coev: Scalar
    c_ev: Scalar


def zigzags(F: FSymbolTable, x: int, c_coev, c_ev) -> tuple[Scalar, Scalar]:
    """Scalars of (ev ⊗ id)(id ⊗ coev) on x and (id ⊗ ev)(coev ⊗ id) on *x."""
    xb = F.ring.dual[x]
    z1 = TreeState.basis(F, (x,)).cup(1, xb, x, c_coev).cap(0, c_ev).scalar()
    z2 = TreeState.basis(F, (xb,)).cup(0, xb, x, c_coev).cap(1, c_ev).scalar()
    return z1, z2


def obstruction_entry(F: FSymbolTable, x: int) -> tuple[int, ...]:
    """The F-entry through which the second zigzag of x factors."""
    xb, u = F.ring.dual[x], F.ring.unit
    return (xb, x, xb, xb, u, u)


def standard_duality(F: FSymbolTable, x) -> DualPair:
    """c_coev = 1, c_ev solved from the second zigzag, first zigzag verified."""
    x = F.ring.index(x)
    one = F.field.one()
    _, z = zigzags(F, x, one, one)
    if z.is_zero():
        raise ZigzagObstruction(F.ring.labels[x], F.ring.names(obstruction_entry(F, x)))
    pair = DualPair(one, z.inverse())
    _require_zigzags(F, x, pair)
    return pair


def _require_zigzags(F, x, pair: DualPair):
    z1, z2 = zigzags(F, x, pair.c_coev, pair.c_ev)
    one = F.field.one()
    if z1 != one or z2 != one:
        raise TCKitError(
            f"duality witnesses for {F.ring.labels[x]} fail the zigzags ({z1}, {z2}); F-data is inconsistent"
        )


class DualityChoices:
    """Witnesses along the chain x, *x, **x, keyed by (label, depth).

    Entry (x, k) exhibits dual^{k+1}(x) as the left dual of dual^k(x).
    Missing entries fall back to :func:`standard_duality`.
    """

    def __init__(self, F: FSymbolTable, pairs: Mapping | None = None):
        self.F = F
        self._pairs: dict = {}
        for (x, k), pair in (pairs or {}).items():
            if not isinstance(pair, DualPair):
                pair = DualPair(F.field(pair[0]), F.field(pair[1]))
            _require_zigzags(F, self.object(x, k), pair)
            self._pairs[(x, k)] = pair

    def object(self, x: int, depth: int) -> int:
        for _ in range(depth):
            x = self.F.ring.dual[x]
        return x

    def pair(self, x: int, depth: int = 0) -> DualPair:
        if (x, depth) not in self._pairs:
            self._pairs[(x, depth)] = standard_duality(self.F, self.object(x, depth))
        return self._pairs[(x, depth)]


def random_choices(F: FSymbolTable, rng: random.Random, depths=(0, 1, 2)) -> DualityChoices:
    """Random nonzero coevaluation coefficients with zigzag-solved evaluations."""
    pairs = {}
    for x in range(F.ring.rank):
        for k in depths:
            c = _random_nonzero(F.field, rng)
            std = standard_duality(F, _dual_power(F, x, k))
            pairs[(x, k)] = DualPair(c, std.c_ev / c)
    return DualityChoices(F, pairs)


def _dual_power(F, x, k):
    for _ in range(k):
        x = F.ring.dual[x]
    return x


def _random_nonzero(fld, rng: random.Random) -> Scalar:
    from fractions import Fraction

    while True:
        if fld.kind == "cyclotomic":
            s = fld.zero()
            for j in range(fld.degree):
                s = s + fld(Fraction(rng.randint(-4, 4), rng.randint(1, 3))) * fld.zeta(j)
        else:
            s = fld(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) if fld.kind == "rational" else rng.randint(1, 10**6))
        if not s.is_zero():
            return s


# morphisms between short words ----------------------------------------------


@dataclass(frozen=True)
class MorphismScalar:
    """A morphism in a one-dimensional hom-space, as a multiple of the basis vector.

    The basis vector of Hom(X, Y) is the canonical splitting tree of Y composed
    with the canonical fusion tree of X through their common channel; ``()``
    is the unit object.  ``F`` is the category the tags refer to.
    """

    F: FSymbolTable = field(repr=False, compare=False)
    source: tuple
    target: tuple
    value: Scalar

    def __post_init__(self):
        object.__setattr__(self, "source", tuple(self.source))
        object.__setattr__(self, "target", tuple(self.target))
        _channel(self.F, self.source, self.target)

    def __mul__(self, s):
        return MorphismScalar(self.F, self.source, self.target, self.value * s)

    __rmul__ = __mul__

    def then(self, other: "MorphismScalar") -> "MorphismScalar":
        """``other ∘ self``; only defined when tags match."""
        if self.target != other.source:
            raise TCKitError(f"cannot compose {self.source}->{self.target} with {other.source}->{other.target}")
        F = self.F
        d = _channel(F, self.source, other.target)
        st = TreeState.basis(F, *_start(F, self.source, d))
        st = other.apply(self.apply(st, 0), 0)
        _, tree = _start(F, other.target, d)
        return MorphismScalar(F, self.source, other.target, st.coefficient(tree))

    def apply(self, st: TreeState, pos: int) -> TreeState:
        """Post-compose ``id ⊗ self ⊗ id`` with the source at strands ``pos...``."""
        F = self.F
        d = _channel(F, self.source, self.target)
        src, tgt = self.source, self.target
        if not src:
            st = st.insert_unit(pos)
        else:
            tree = _canonical_tree(F, src, d)
            for i in range(1, len(src)):
                st = st.fuse(pos, tree[i])
        if not tgt:
            st = st.drop_unit(pos)
        else:
            tree = _canonical_tree(F, tgt, d)
            for i in range(len(tgt) - 1, 0, -1):
                st = st.split(pos, tree[i - 1], tgt[i])
        return st.scale(self.value)

    def describe(self) -> str:
        names = self.F.ring.labels
        s = "⊗".join(names[i] for i in self.source) or "1"
        t = "⊗".join(names[i] for i in self.target) or "1"
        return f"{self.value} in Hom({s}, {t})"


def _trees(F, word):
    """Left-canonical trees over ``word`` as {top: tree}; single channel only."""
    ring = F.ring
    trees = [(word[0],)]
    for x in word[1:]:
        trees = [t + (y,) for t in trees for y in ring.fuse(t[-1], x)]
    out = {}
    for t in trees:
        if t[-1] in out:
            raise TCKitError(f"hom-space over {word} has multiple trees with top {t[-1]}")
        out[t[-1]] = t
    return out


def _channel(F, source, target) -> int:
    u = F.ring.unit
    a = _trees(F, source) if source else {u: None}
    b = _trees(F, target) if target else {u: None}
    common = sorted(set(a) & set(b))
    if len(common) != 1:
        raise TCKitError(f"Hom({source}, {target}) is not one-dimensional")
    return common[0]


def _canonical_tree(F, word, top):
    return _trees(F, word)[top]


def _start(F, word, top=None):
    if not word:
        u = F.ring.unit
        return (u,), (u,)
    trees = _trees(F, word)
    if top is None:
        if len(trees) != 1:
            raise TCKitError("ambiguous channel")
        top = next(iter(trees))
    return word, trees[top]


def ev_witness(F: FSymbolTable, x: int, c) -> MorphismScalar:
    return MorphismScalar(F, (x, F.ring.dual[x]), (), F.field(c))


def coev_witness(F: FSymbolTable, x: int, c) -> MorphismScalar:
    return MorphismScalar(F, (), (F.ring.dual[x], x), F.field(c))


def gamma(F: FSymbolTable, witness: MorphismScalar, direction: str | None = None) -> MorphismScalar:
    """The partner of an evaluation or coevaluation completing a duality.

    An evaluation in Hom(x⊗y, 1) maps to the coevaluation in Hom(1, y⊗x) (and
    back) such that the pair exhibits y as the left dual of x.
    """
    ring = F.ring
    if witness.value.is_zero():
        raise TCKitError("gamma of the zero morphism is undefined")
    if len(witness.source) == 2 and not witness.target:
        kind = "ev"
        x, y = witness.source
    elif not witness.source and len(witness.target) == 2:
        kind = "coev"
        y, x = witness.target
    elif not witness.source and not witness.target:
        return MorphismScalar(F, (), (), witness.value.inverse())
    else:
        raise TCKitError("gamma expects an evaluation x⊗y->1 or a coevaluation 1->y⊗x")
    if direction is not None and direction != kind:
        raise TCKitError(f"witness is a {kind}, not a {direction}")
    if ring.dual[x] != y:
        raise TCKitError(f"{ring.labels[y]} is not dual to {ring.labels[x]}")
    one = F.field.one()
    _, z = zigzags(F, x, one, one)
    if z.is_zero():
        raise ZigzagObstruction(ring.labels[x], ring.names(obstruction_entry(F, x)))
    partner = (z * witness.value).inverse()
    if kind == "ev":
        _require_zigzags(F, x, DualPair(partner, witness.value))
        return MorphismScalar(F, (), (y, x), partner)
    _require_zigzags(F, x, DualPair(witness.value, partner))
    return MorphismScalar(F, (x, y), (), partner)


def dual_morphism(
    F: FSymbolTable,
    f: MorphismScalar,
    coev: Callable[[int], Scalar] | None = None,
    ev: Callable[[int], Scalar] | None = None,
) -> MorphismScalar:
    """Left dual *f : *Y -> *X of f : X -> Y.

    *f = (id ⊗ ev_Y)(id ⊗ f ⊗ id)(coev_X ⊗ id), with *(x⊗y) = *y⊗*x and
    nested witnesses for words.  ``coev(x)`` gives c_coev for letters of X and
    ``ev(y)`` gives c_ev for letters of Y (default: standard duality).
    """
    ring = F.ring
    coev = coev or (lambda x: standard_duality(F, x).c_coev)
    ev = ev or (lambda x: standard_duality(F, x).c_ev)
    X, Y = f.source, f.target
    dX = tuple(ring.dual[x] for x in reversed(X))
    dY = tuple(ring.dual[y] for y in reversed(Y))
    top = ring.dual[_channel(F, X, Y)]
    word, tree = _start(F, dY, top)
    st = TreeState.basis(F, word, tree)
    m = len(X)
    for i in range(m - 1, -1, -1):
        x = X[i]
        st = st.cup(m - 1 - i, ring.dual[x], x, coev(x))
    st = f.apply(st, m)
    for j in range(len(Y) - 1, -1, -1):
        st = st.cap(m + j, ev(Y[j]))
    if not dX and len(st.word) > 1:
        raise TCKitError("unexpected leftover strands")
    _, out_tree = _start(F, dX, top)
    if not dY and dX:
        # the unit strand carried along from the empty source was absorbed
        st = st.drop_unit(len(st.word) - 1) if st.word[-1] == ring.unit and len(st.word) > len(dX) else st
    return MorphismScalar(F, dY, dX, st.coefficient(out_tree))


# traces and norms -------------------------------------------------------------


def quantum_trace(F: FSymbolTable, choices: DualityChoices | None, x, a=None) -> Scalar:
    """Tr(a) = ev_x ∘ (a ⊗ id) ∘ coev_{*x} for a : **x -> x given as a scalar."""
    x = F.ring.index(x)
    choices = choices or DualityChoices(F)
    a = F.field.one() if a is None else F.field(a)
    outer = choices.pair(x, 0)
    inner = choices.pair(x, 1)
    xb = F.ring.dual[x]
    st = TreeState.unit(F).cup(0, x, xb, inner.c_coev).scale(a).cap(0, outer.c_ev)
    return st.scalar()


def squared_norm(F: FSymbolTable, x, choices: DualityChoices | None = None, a=None) -> Scalar:
    """‖x‖ = Tr(a) · Tr(*(a⁻¹)) for a : **x -> x (default a = 1)."""
    x = F.ring.index(x)
    choices = choices or DualityChoices(F)
    a = F.field.one() if a is None else F.field(a)
    first = quantum_trace(F, choices, x, a)
    # a⁻¹ : x -> **x; its dual ***x -> *x uses coev at depth 0 and ev at depth 2
    inv = MorphismScalar(F, (x,), (x,), a.inverse())
    star = dual_morphism(F, inv, coev=lambda _: choices.pair(x, 0).c_coev, ev=lambda _: choices.pair(x, 2).c_ev)
    xb = F.ring.dual[x]
    # trace of b : **(*x) -> *x uses ev_{*x} (depth 1) and coev_{***x} (depth 2)
    st = TreeState.unit(F).cup(0, xb, x, choices.pair(x, 2).c_coev).scale(star.value).cap(0, choices.pair(x, 1).c_ev)
    return first * st.scalar()


def squared_norms(F: FSymbolTable) -> list[Scalar]:
    choices = DualityChoices(F)
    return [squared_norm(F, x, choices) for x in range(F.ring.rank)]


def global_dimension(F: FSymbolTable) -> Scalar:
    total = F.field.zero()
    for n in squared_norms(F):
        total = total + n
    return total
