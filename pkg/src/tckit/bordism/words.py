"""Typed bordism words: expression trees over the generator signature.

Operators: ``comp(x, y, ...)`` composes diagrammatically (x first),
``side(a, b)`` is the horizontal composite a ⊙ b with source s(a) ∘ s(b),
``tensor(a, b)`` is the monoidal product, ``id(...)`` an identity and
``inv(g)`` the formal inverse of a 2-cell generator declared invertible.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import TypecheckError
from .cells import OBJECT_LETTERS, ONE_CELLS, OneCell, TwoCell, one_cell_type, two_cell_type

__all__ = [
    "Expr",
    "BordismWord",
    "one_cell",
    "two_cell",
    "serre_word",
    "inverse_serre_word",
    "radford_word",
    "radford_inverse_word",
    "radford_conjugated_word",
    "MACROS",
]


@dataclass(frozen=True)
class Expr:
    op: str  # "name", "comp", "side", "tensor", "id", "inv"
    args: tuple = ()
    name: str = ""

    def __str__(self):
        if self.op == "name":
            return self.name
        return f"{self.op}({', '.join(str(a) for a in self.args)})"


def name(n: str) -> Expr:
    return Expr("name", (), n)


def call(op: str, *args: Expr) -> Expr:
    return Expr(op, tuple(args))


def one_cell(e: Expr) -> OneCell:
    """Evaluate an expression as a 1-cell."""
    if e.op == "name":
        if e.name in OBJECT_LETTERS:
            return OneCell.identity((e.name,))
        if e.name == "tau":
            return OneCell.generator("tau(P+,P+)")
        one_cell_type(e.name)
        return OneCell.generator(e.name)
    if e.op == "id":
        if not e.args:
            return OneCell.identity(())
        cells = [one_cell(a) for a in e.args]
        out = cells[0]
        for c in cells[1:]:
            out = out.tensor(c)
        if out.slices:
            raise TypecheckError("id(...) of a 1-cell expects objects")
        return out
    if e.op == "tau":
        letters = []
        for a in e.args:
            if a.op != "name" or a.name not in OBJECT_LETTERS:
                raise TypecheckError("tau takes two object letters")
            letters.append(a.name)
        if len(letters) != 2:
            raise TypecheckError("tau takes two object letters")
        return OneCell.generator(f"tau({letters[0]},{letters[1]})")
    if e.op == "comp":
        cells = [one_cell(a) for a in e.args]
        out = cells[0]
        for c in cells[1:]:
            out = out.then(c)
        return out
    if e.op == "tensor":
        cells = [one_cell(a) for a in e.args]
        out = cells[0]
        for c in cells[1:]:
            out = out.tensor(c)
        return out
    raise TypecheckError(f"{e.op}(...) is not a 1-cell expression")


def two_cell(e: Expr) -> TwoCell:
    """Evaluate an expression as a 2-cell."""
    if e.op == "name":
        if e.name in MACROS:
            return two_cell(MACROS[e.name]())
        two_cell_type(e.name)
        return TwoCell.generator(e.name)
    if e.op == "id":
        if len(e.args) <= 1:
            return TwoCell.identity(one_cell(e.args[0]) if e.args else OneCell.identity(()))
        return TwoCell.identity(one_cell(Expr("tensor", e.args)))
    if e.op == "inv":
        if len(e.args) != 1 or e.args[0].op != "name":
            raise TypecheckError("inv(...) applies to a single generator")
        return TwoCell.generator(e.args[0].name + "^-1")
    if e.op in ("comp", "side", "tensor"):
        cells = [_two_or_identity(a) for a in e.args]
        if len(cells) < 2:
            raise TypecheckError(f"{e.op} needs at least two arguments")
        out = cells[0]
        for c in cells[1:]:
            out = {"comp": out.then, "side": out.side, "tensor": out.tensor}[e.op](c)
        return out
    raise TypecheckError(f"{e.op}(...) is not a 2-cell expression")


def _two_or_identity(e: Expr) -> TwoCell:
    # bare objects and 1-cells inside 2-cell expressions stand for identities
    if e.op == "name" and (e.name in OBJECT_LETTERS or e.name in ONE_CELLS or e.name == "tau"):
        return TwoCell.identity(one_cell(e))
    if e.op == "tau":
        return TwoCell.identity(one_cell(e))
    return two_cell(e)


@dataclass(frozen=True)
class BordismWord:
    expr: Expr
    kind: str  # "1-cell" or "2-cell"

    @property
    def cell(self):
        return one_cell(self.expr) if self.kind == "1-cell" else two_cell(self.expr)

    def boundary(self):
        c = self.cell
        return (c.source, c.target)

    def __str__(self):
        return str(self.expr)


_SERRE_TAIL = call("comp", call("tensor", name("tau"), name("P-")), call("tensor", name("P+"), name("ev")))


def serre_word() -> BordismWord:
    """(id ⊗ ev) ∘ (τ ⊗ id) ∘ (id ⊗ evR) : P+ -> P+."""
    return BordismWord(call("comp", call("tensor", name("P+"), name("evR")), *_SERRE_TAIL.args), "1-cell")


def inverse_serre_word() -> BordismWord:
    """(id ⊗ ev) ∘ (τ ⊗ id) ∘ (id ⊗ evL) : P+ -> P+."""
    return BordismWord(call("comp", call("tensor", name("P+"), name("evL")), *_SERRE_TAIL.args), "1-cell")


def _radford() -> Expr:
    return call("comp", call("side", call("id", name("evL")), name("v2R")), call("side", name("v1"), call("id", name("evR"))))


def _radford_inverse() -> Expr:
    return call("comp", call("side", call("id", name("evR")), name("u1")), call("side", name("u2R"), call("id", name("evL"))))


def radford_word() -> BordismWord:
    """R = (v1 ⊙ id_evR) ∘ (id_evL ⊙ v2R) : evL => evR."""
    return BordismWord(_radford(), "2-cell")


def radford_inverse_word() -> BordismWord:
    """(u2R ⊙ id_evL) ∘ (id_evR ⊙ ũ) : evR => evL."""
    return BordismWord(_radford_inverse(), "2-cell")


def radford_conjugated_word() -> BordismWord:
    """(id ⊗ ev) ∘ (τ ⊗ id) ∘ (id ⊗ R), a 2-cell from the inverse Serre word to the Serre word."""
    tail = call("id", _SERRE_TAIL)
    return BordismWord(call("side", tail, call("tensor", call("id", name("P+")), _radford())), "2-cell")


MACROS = {"R": _radford, "radford": _radford, "Rinv": _radford_inverse, "radford_inv": _radford_inverse}
