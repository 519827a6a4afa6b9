"""Built-in fusion categories.

Every table is validated and pentagon-checked when loaded; the shipped
values are not trusted on their own.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping, Sequence

from .category import FSymbolTable, pentagon_check
from .errors import CategoryValidationError, CocycleError, ScalarDivisionByZero, TCKitError
from .fusion_ring import ring_from_group, validate_ring
from .scalars import QQ, FieldSpec, Scalar, cyclotomic

__all__ = [
    "BUILTIN_NAMES",
    "builtin",
    "pointed_category",
    "cyclic_table",
    "vec_g",
]

BUILTIN_NAMES = ("trivial", "vec_z2", "vec_z2_semion", "vec_z3", "fibonacci", "ising", "rep_s3")


def cyclic_table(n: int) -> list[list[int]]:
    return [[(g + h) % n for h in range(n)] for g in range(n)]


def pointed_category(
    mult_table: Sequence[Sequence[int]],
    omega: Mapping | Callable | None = None,
    field: FieldSpec = QQ,
    labels: Sequence[str] | None = None,
    name: str = "vec_g",
) -> FSymbolTable:
    """Vect[G, omega]: simple objects are group elements, F^{abc}_{abc} = omega(a, b, c).

    ``omega`` maps triples of group indices to scalars (missing triples are 1)
    or is a callable; it must be a normalized 3-cocycle.
    """
    ring = ring_from_group(mult_table, labels)
    mul = [list(row) for row in mult_table]
    r = ring.rank
    one = field.one()
    if omega is None:
        w = lambda a, b, c: one  # noqa: E731
    elif callable(omega):
        w = lambda a, b, c: field(omega(a, b, c))  # noqa: E731
    else:
        table = {tuple(k): field(v) for k, v in omega.items()}
        w = lambda a, b, c: table.get((a, b, c), one)  # noqa: E731
    vals = {t: w(*t) for t in itertools.product(range(r), repeat=3)}
    e = ring.unit
    for t, v in vals.items():
        if v.is_zero():
            raise CocycleError(t, f"omega{t} is zero")
        if e in t and v != one:
            raise CocycleError(t, f"omega{t} is not normalized")
    for a, b, c, d in itertools.product(range(r), repeat=4):
        lhs = vals[(b, c, d)] * vals[(a, mul[b][c], d)] * vals[(a, b, c)]
        rhs = vals[(mul[a][b], c, d)] * vals[(a, b, mul[c][d])]
        if lhs != rhs:
            raise CocycleError((a, b, c, d))
    entries = {}
    for a, b, c in itertools.product(range(r), repeat=3):
        ab, bc = mul[a][b], mul[b][c]
        entries[(a, b, c, mul[ab][c], ab, bc)] = vals[(a, b, c)]
    return _certified(FSymbolTable.build(ring, field, entries, name))


def vec_g(mult_table, omega=None, field: FieldSpec = QQ, labels=None) -> FSymbolTable:
    return pointed_category(mult_table, omega, field, labels, name="vec_g")


def _certified(F: FSymbolTable) -> FSymbolTable:
    report = pentagon_check(F)
    if not report:
        raise CategoryValidationError("pentagon", report.witness, str(report))
    return F


def _need_root(field: FieldSpec, m: int, name: str):
    if not field.contains_root_of_unity(m):
        raise TCKitError(f"{name} needs a field containing primitive {m}-th roots of unity, got {field}")


def _fibonacci(field: FieldSpec) -> FSymbolTable:
    _need_root(field, 5, "fibonacci")
    ring = validate_ring(
        labels=["1", "t"], unit=0, dual=[0, 1], N=[(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, 1)]
    )
    z = field.zeta(1, of_order=5)
    phi_inv = z + z**4  # 1/phi = (sqrt5 - 1)/2
    entries = {h: field.one() for h in _hexes(ring)}
    entries[(1, 1, 1, 1, 0, 0)] = phi_inv
    entries[(1, 1, 1, 1, 0, 1)] = field.one()
    entries[(1, 1, 1, 1, 1, 0)] = phi_inv
    entries[(1, 1, 1, 1, 1, 1)] = -phi_inv
    return _certified(FSymbolTable.build(ring, field, entries, "fibonacci"))


def _ising(field: FieldSpec) -> FSymbolTable:
    _need_root(field, 8, "ising")
    N = [(0, 0, 0), (0, 1, 1), (0, 2, 2), (1, 0, 1), (2, 0, 2), (1, 1, 0), (1, 1, 2), (1, 2, 1), (2, 1, 1), (2, 2, 0)]
    ring = validate_ring(labels=["1", "s", "p"], unit=0, dual=[0, 1, 2], N=N)
    z = field.zeta(1, of_order=8)
    inv_sqrt2 = (z + z**7) / 2
    entries = {h: field.one() for h in _hexes(ring)}
    for e, f in itertools.product((0, 2), repeat=2):
        sign = -1 if (e, f) == (2, 2) else 1
        entries[(1, 1, 1, 1, e, f)] = inv_sqrt2 * sign
    entries[(2, 1, 2, 1, 1, 1)] = -field.one()
    entries[(1, 2, 1, 2, 1, 1)] = -field.one()
    return _certified(FSymbolTable.build(ring, field, entries, "ising"))


# Rep(S3): labels trivial, sign, 2-dimensional.  Derived from explicit
# intertwiners of the standard representation on sum-zero vectors in Q^3;
# unlisted admissible entries are 1.
_REP_S3 = {
    (1, 1, 2, 2, 0, 2): "-1/3",
    (1, 2, 2, 0, 2, 1): "-3/2",
    (1, 2, 2, 1, 2, 0): "2",
    (1, 2, 2, 2, 2, 2): "-1",
    (2, 1, 1, 2, 2, 0): "-3",
    (2, 1, 2, 0, 2, 2): "-1",
    (2, 1, 2, 1, 2, 2): "-1",
    (2, 2, 1, 0, 1, 2): "2/3",
    (2, 2, 1, 1, 0, 2): "-1/2",
    (2, 2, 1, 2, 2, 2): "-1",
    (2, 2, 2, 1, 2, 2): "-1",
    (2, 2, 2, 2, 0, 0): "1/2",
    (2, 2, 2, 2, 0, 1): "-1/4",
    (2, 2, 2, 2, 0, 2): "1/2",
    (2, 2, 2, 2, 1, 1): "-1/2",
    (2, 2, 2, 2, 1, 2): "-1",
    (2, 2, 2, 2, 2, 1): "1/2",
    (2, 2, 2, 2, 2, 2): "0",
}


def _rep_s3(field: FieldSpec) -> FSymbolTable:
    N = [(0, 0, 0), (0, 1, 1), (0, 2, 2), (1, 0, 1), (2, 0, 2), (1, 1, 0), (1, 2, 2), (2, 1, 2), (2, 2, 0), (2, 2, 1), (2, 2, 2)]
    ring = validate_ring(labels=["1", "sgn", "r"], unit=0, dual=[0, 1, 2], N=N)
    entries = {h: field.one() for h in _hexes(ring)}
    try:
        for k, v in _REP_S3.items():
            entries[k] = field(Fraction(v))
    except ScalarDivisionByZero:
        raise TCKitError(f"rep_s3 needs characteristic prime to 6, got {field}") from None
    return _certified(FSymbolTable.build(ring, field, entries, "rep_s3"))


def _hexes(ring):
    from .category import admissible_hexatuples

    return admissible_hexatuples(ring)


_VEC_ZN = re.compile(r"vec_z(\d+)$")


@lru_cache(maxsize=None)
def builtin(name: str, field: FieldSpec | None = None) -> FSymbolTable:
    """Load a built-in category, optionally over another field.

    Names: trivial, vec_z2, vec_z2_semion, vec_z<n>, fibonacci, ising, rep_s3.
    """
    if name == "trivial":
        return pointed_category([[0]], field=field or QQ, labels=["1"], name="trivial")
    if name == "vec_z2_semion":
        fld = field or QQ
        return pointed_category(cyclic_table(2), {(1, 1, 1): -1}, fld, ["1", "g"], name="vec_z2_semion")
    m = _VEC_ZN.match(name)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise TCKitError("group order must be positive")
        labels = ["1"] + (["g"] if n == 2 else [f"g{k}" for k in range(1, n)])
        return pointed_category(cyclic_table(n), None, field or QQ, labels, name=name)
    if name == "fibonacci":
        return _fibonacci(field or cyclotomic(5))
    if name == "ising":
        return _ising(field or cyclotomic(8))
    if name == "rep_s3":
        return _rep_s3(field or QQ)
    raise TCKitError(f"unknown builtin {name!r}; known: {', '.join(BUILTIN_NAMES)}")
