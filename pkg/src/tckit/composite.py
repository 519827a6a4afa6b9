"""Graphical composition in a skeletal fusion category.

A :class:`TreeState` is a vector in Hom(d, x_0 x_1 ... x_{n-1}) written in the
left-canonical splitting-tree basis.  A tree is the tuple of intermediate
labels ``(y_0, ..., y_{n-1})`` with ``y_0 = x_0``, ``y_i`` a channel of
``y_{i-1} x_i`` and ``y_{n-1} = d``.  Morphisms act by post-composition, so a
string diagram is evaluated by feeding a basis tree through its layers from
bottom to top.

Vertices are normalized by ``fusion o splitting = id``: ``e^{ab}_c`` fuses two
adjacent strands, ``ê^{ab}_c`` splits one.  Unit strands are strict.
"""

from __future__ import annotations

from typing import Iterable

from .category import FSymbolTable
from .errors import TCKitError
from .scalars import Scalar

__all__ = ["TreeState"]


class TreeState:
    __slots__ = ("cat", "word", "vec")

    def __init__(self, cat: FSymbolTable, word: Iterable[int], vec: dict):
        self.cat = cat
        self.word = tuple(word)
        self.vec = {t: v for t, v in vec.items() if not v.is_zero()}

    @classmethod
    def basis(cls, cat: FSymbolTable, word, tree=None, coeff=None) -> "TreeState":
        word = tuple(word)
        if tree is None:
            if len(word) != 1:
                raise TCKitError("tree required for words longer than one")
            tree = word
        tree = tuple(tree)
        _check_tree(cat, word, tree)
        one = cat.field.one() if coeff is None else cat.field(coeff)
        return cls(cat, word, {tree: one})

    @classmethod
    def unit(cls, cat: FSymbolTable) -> "TreeState":
        u = cat.ring.unit
        return cls.basis(cat, (u,), (u,))

    def copy_with(self, word, vec) -> "TreeState":
        return TreeState(self.cat, word, vec)

    def __repr__(self):
        names = self.cat.ring.labels
        terms = ", ".join(f"{tuple(names[i] for i in t)}: {v}" for t, v in sorted(self.vec.items()))
        return f"TreeState({tuple(names[i] for i in self.word)}; {terms})"

    # reading ---------------------------------------------------------------

    def coefficient(self, tree=None) -> Scalar:
        if tree is None:
            if len(self.word) != 1:
                raise TCKitError("tree required for words longer than one")
            tree = self.word
        return self.vec.get(tuple(tree), self.cat.field.zero())

    def scalar(self) -> Scalar:
        """The coefficient of a state on a one-label word."""
        if len(self.word) != 1:
            raise TCKitError(f"state lives on a word of length {len(self.word)}")
        return self.coefficient()

    def __eq__(self, other):
        return isinstance(other, TreeState) and self.word == other.word and self.vec == other.vec

    # layers ----------------------------------------------------------------

    def scale(self, s) -> "TreeState":
        s = self.cat.field(s)
        return self.copy_with(self.word, {t: v * s for t, v in self.vec.items()})

    def insert_unit(self, pos: int) -> "TreeState":
        """Tensor a unit strand in at position ``pos``."""
        u = self.cat.ring.unit
        word = self.word[:pos] + (u,) + self.word[pos:]
        vec = {}
        for t, v in self.vec.items():
            if pos == 0:
                nt = (u,) + t
            else:
                nt = t[:pos] + (t[pos - 1],) + t[pos:]
            vec[nt] = v
        return self.copy_with(word, vec)

    def drop_unit(self, pos: int) -> "TreeState":
        """Remove the unit strand at ``pos``."""
        if self.word[pos] != self.cat.ring.unit:
            raise TCKitError(f"strand {pos} is not the unit")
        if len(self.word) == 1:
            return self
        word = self.word[:pos] + self.word[pos + 1 :]
        vec = {}
        for t, v in self.vec.items():
            nt = t[1:] if pos == 0 else t[:pos] + t[pos + 1 :]
            vec[nt] = vec.get(nt, self.cat.field.zero()) + v
        return self.copy_with(word, vec)

    def fuse(self, pos: int, c: int, coeff=None) -> "TreeState":
        """Apply ``coeff * e^{x_pos x_{pos+1}}_c`` to strands pos, pos+1."""
        cat = self.cat
        a, b = self.word[pos], self.word[pos + 1]
        if not cat.ring.N(a, b, c):
            raise TCKitError(f"no fusion vertex {a} {b} -> {c}")
        k = cat.field.one() if coeff is None else cat.field(coeff)
        word = self.word[:pos] + (c,) + self.word[pos + 2 :]
        vec = {}
        for t, v in self.vec.items():
            if pos == 0:
                if t[1] != c:
                    continue
                nt = (c,) + t[2:]
                w = v
            else:
                # reassociate (y a) b -> y (a b) and keep the channel c
                y, mid, top = t[pos - 1], t[pos], t[pos + 1]
                w = v * cat.get(y, a, b, top, mid, c)
                if w.is_zero():
                    continue
                nt = t[:pos] + t[pos + 1 :]
            vec[nt] = vec.get(nt, cat.field.zero()) + w * k
        return self.copy_with(word, vec)

    def split(self, pos: int, a: int, b: int, coeff=None) -> "TreeState":
        """Apply ``coeff * ê^{ab}_{x_pos}`` to strand ``pos``."""
        cat = self.cat
        c = self.word[pos]
        if not cat.ring.N(a, b, c):
            raise TCKitError(f"no splitting vertex {c} -> {a} {b}")
        k = cat.field.one() if coeff is None else cat.field(coeff)
        word = self.word[:pos] + (a, b) + self.word[pos + 1 :]
        vec = {}
        for t, v in self.vec.items():
            if pos == 0:
                nt = (a,) + t
                vec[nt] = vec.get(nt, cat.field.zero()) + v * k
                continue
            y, top = t[pos - 1], t[pos]
            for e in cat.ring.fuse(y, a):
                if not cat.ring.N(e, b, top):
                    continue
                w = cat.inverse_entry(y, a, b, top, c, e)
                if w.is_zero():
                    continue
                nt = t[:pos] + (e,) + t[pos:]
                vec[nt] = vec.get(nt, cat.field.zero()) + v * w * k
        return self.copy_with(word, vec)

    def cap(self, pos: int, coeff=None) -> "TreeState":
        """Evaluate strands pos, pos+1 (which must be dual) to the unit and drop it."""
        u = self.cat.ring.unit
        return self.fuse(pos, u, coeff).drop_unit(pos)

    def cup(self, pos: int, a: int, b: int, coeff=None) -> "TreeState":
        """Create a pair ``a b`` (b dual to a) at position ``pos``."""
        return self.insert_unit(pos).split(pos, a, b, coeff)


def _check_tree(cat, word, tree):
    ring = cat.ring
    if len(tree) != len(word) or not word:
        raise TCKitError("tree and word lengths differ")
    if tree[0] != word[0]:
        raise TCKitError("tree must start with the first strand")
    for i in range(1, len(word)):
        if not ring.N(tree[i - 1], word[i], tree[i]):
            raise TCKitError(f"inadmissible tree {tree} over {word}")
