"""Generators and the strict layered model of 1- and 2-cells.

Objects are words in point letters (``P+``, ``P-``, and ``A``, ``B`` for the
abstract adjunction).  A 1-cell is a sequence of slices written in composition
order (the first slice is applied last); each slice is one generator
tensored with identity letters on either side.  A 2-cell is a source 1-cell
plus a list of layers ``(pos, name, offset)``; a layer replaces the slices
``pos .. pos+len(src)-1`` by the generator's target slices, with ``offset``
identity letters on the left.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import TypecheckError

__all__ = [
    "ONE_CELLS",
    "TWO_CELLS",
    "ALIASES",
    "Slice",
    "OneCell",
    "TwoCell",
    "one_cell_type",
    "two_cell_type",
]

P, M = "P+", "P-"

# name -> (source object, target object)
ONE_CELLS = {
    "ev": ((P, M), ()),
    "evL": ((), (P, M)),
    "evR": ((), (P, M)),
    "coev": ((), (M, P)),
    "coevL": ((M, P), ()),
    "coevR": ((M, P), ()),
    "f": (("A",), ("B",)),
    "fR": (("B",), ("A",)),
}

# name -> (source 1-cell generators, target 1-cell generators), composition order
TWO_CELLS = {
    # evL ⊣ ev
    "u1": ((), ("ev", "evL")),
    "v1": (("evL", "ev"), ()),
    # ev ⊣ evR
    "u2": ((), ("evR", "ev")),
    "v2": (("ev", "evR"), ()),
    # evR ⊣ ev, obtained from ev ⊣ evR by the ambidexterity lemma
    "v2R": ((), ("ev", "evR")),
    "u2R": (("evR", "ev"), ()),
    # abstract f ⊣ fR and the adjoints of its unit and counit
    "u": ((), ("fR", "f")),
    "v": (("f", "fR"), ()),
    "uL": (("fR", "f"), ()),
    "vL": ((), ("f", "fR")),
}

# ũ, ṽ in the Radford formulas are the unit and counit of evL ⊣ ev
ALIASES = {"ut": "u1", "ũ": "u1", "vt": "v1", "ṽ": "v1"}

OBJECT_LETTERS = (P, M, "A", "B")


def one_cell_type(name: str) -> tuple[tuple, tuple]:
    if name in ONE_CELLS:
        return ONE_CELLS[name]
    if name.startswith("tau(") and name.endswith(")"):
        a, _, b = name[4:-1].partition(",")
        if a in OBJECT_LETTERS and b in OBJECT_LETTERS:
            return (a, b), (b, a)
    raise TypecheckError(f"unknown 1-cell generator {name!r}")


def two_cell_type(name: str) -> tuple[tuple, tuple]:
    base, inverse = _split_inverse(name)
    base = ALIASES.get(base, base)
    if base not in TWO_CELLS:
        raise TypecheckError(f"unknown 2-cell generator {name!r}")
    src, tgt = TWO_CELLS[base]
    return (tgt, src) if inverse else (src, tgt)


def _split_inverse(name: str):
    if name.endswith("^-1"):
        return name[:-3], True
    return name, False


def _chain_objects(gens) -> tuple[tuple, tuple]:
    """(source, target) object of a composition-order generator chain."""
    if not gens:
        raise TypecheckError("empty chain has no intrinsic boundary")
    src = one_cell_type(gens[-1])[0]
    cur = src
    for g in reversed(gens):
        s, t = one_cell_type(g)
        if s != cur:
            raise TypecheckError(f"generator {g} expects {s}, got {cur}")
        cur = t
    return src, cur


def generator_object(name: str) -> tuple:
    """The object at the top/bottom of a 2-cell generator's boundary chains."""
    src, tgt = two_cell_type(name)
    chain = src or tgt
    s, t = _chain_objects(chain)
    if s != t and (not src or not tgt):
        raise TypecheckError(f"2-cell {name} with an identity side must be an endo-boundary")
    return t


@dataclass(frozen=True)
class Slice:
    left: tuple
    gen: str
    right: tuple

    @property
    def source(self) -> tuple:
        return self.left + one_cell_type(self.gen)[0] + self.right

    @property
    def target(self) -> tuple:
        return self.left + one_cell_type(self.gen)[1] + self.right

    def __str__(self):
        parts = [*self.left, self.gen, *self.right]
        return "⊗".join(parts)


@dataclass(frozen=True)
class OneCell:
    """A 1-cell ``source -> target`` as composition-order slices."""

    source: tuple
    target: tuple
    slices: tuple = ()

    def __post_init__(self):
        cur = self.source
        for s in reversed(self.slices):
            if s.source != cur:
                raise TypecheckError(f"slice {s} expects {s.source}, got {cur}")
            cur = s.target
        if cur != self.target:
            raise TypecheckError(f"1-cell ends at {cur}, declared {self.target}")

    @classmethod
    def generator(cls, name: str) -> "OneCell":
        s, t = one_cell_type(name)
        return cls(s, t, (Slice((), name, ()),))

    @classmethod
    def identity(cls, obj) -> "OneCell":
        return cls(tuple(obj), tuple(obj), ())

    def then(self, other: "OneCell") -> "OneCell":
        """Diagrammatic composite: self first, then other."""
        if self.target != other.source:
            raise TypecheckError(f"cannot compose 1-cells: {self.target} vs {other.source}")
        return OneCell(self.source, other.target, other.slices + self.slices)

    def tensor(self, other: "OneCell") -> "OneCell":
        """(self ⊗ id) ∘ (id ⊗ other), flattened."""
        mine = tuple(Slice(s.left, s.gen, s.right + other.target) for s in self.slices)
        theirs = tuple(Slice(self.source + s.left, s.gen, s.right) for s in other.slices)
        return OneCell(self.source + other.source, self.target + other.target, mine + theirs)

    def object_at(self, pos: int) -> tuple:
        """Object at the boundary above slice ``pos`` (0 is the target)."""
        if pos == 0:
            return self.target
        return self.slices[pos - 1].source

    def gens(self) -> tuple:
        return tuple(s.gen for s in self.slices)

    def __str__(self):
        if not self.slices:
            return f"id({'⊗'.join(self.source) or '∅'})"
        return " ∘ ".join(f"({s})" if s.left or s.right else s.gen for s in self.slices)


def apply_layer(cell: OneCell, layer) -> OneCell:
    """Apply one layer to a 1-cell, raising :class:`TypecheckError` on mismatch."""
    pos, name, offset = layer
    src, tgt = two_cell_type(name)
    if not 0 <= pos <= len(cell.slices):
        raise TypecheckError(f"layer position {pos} out of range")
    obj = generator_object(name)
    top = cell.object_at(pos)
    if top[offset : offset + len(obj)] != obj or offset < 0:
        raise TypecheckError(f"{name} does not fit at ({pos}, offset {offset}) of {cell}")
    left, right = top[:offset], top[offset + len(obj) :]
    want = tuple(Slice(left, g, right) for g in src)
    if cell.slices[pos : pos + len(src)] != want:
        raise TypecheckError(f"{name} source does not match at position {pos} of {cell}")
    new = tuple(Slice(left, g, right) for g in tgt)
    return OneCell(cell.source, cell.target, cell.slices[:pos] + new + cell.slices[pos + len(src) :])


@dataclass(frozen=True)
class TwoCell:
    """A typechecked 2-cell: source 1-cell and layers applied in order."""

    source: OneCell
    layers: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(tuple(l) for l in self.layers))
        self.target  # typecheck

    @property
    def target(self) -> OneCell:
        cell = self.source
        for layer in self.layers:
            cell = apply_layer(cell, layer)
        return cell

    def intermediates(self) -> list[OneCell]:
        cells = [self.source]
        for layer in self.layers:
            cells.append(apply_layer(cells[-1], layer))
        return cells

    def then(self, other: "TwoCell") -> "TwoCell":
        """Vertical composite: self first."""
        if self.target != other.source:
            raise TypecheckError(f"cannot compose 2-cells: {self.target} vs {other.source}")
        return TwoCell(self.source, self.layers + other.layers)

    def side(self, other: "TwoCell") -> "TwoCell":
        """Horizontal composite self ⊙ other, with source s(self) ∘ s(other)."""
        src = other.source.then(self.source)
        n = len(self.source.slices)
        shifted = tuple((p + n, g, k) for p, g, k in other.layers)
        return TwoCell(src, shifted + self.layers)

    def tensor(self, other: "TwoCell") -> "TwoCell":
        src = self.source.tensor(other.source)
        n = len(self.source.slices)
        k0 = len(self.source.source)
        shifted = tuple((p + n, g, k + k0) for p, g, k in other.layers)
        return TwoCell(src, shifted + self.layers)

    @classmethod
    def identity(cls, cell: OneCell) -> "TwoCell":
        return cls(cell, ())

    @classmethod
    def generator(cls, name: str) -> "TwoCell":
        src, _ = two_cell_type(name)
        obj = generator_object(name)
        if src:
            cell = OneCell.identity(_chain_objects(src)[0])
            for g in reversed(src):
                cell = cell.then(OneCell.generator(g))
        else:
            cell = OneCell.identity(obj)
        return cls(cell, ((0, name, 0),))
