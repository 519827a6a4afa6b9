"""Multiplicity-free fusion rings: labels, unit, duals and fusion rules."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import RingValidationError

__all__ = ["FusionRing", "validate_ring", "ring_from_group", "fp_dimension"]


@dataclass(frozen=True)
class FusionRing:
    """A based ring with basis ``labels`` and structure constants in {0, 1}.

    Labels are referred to by index; ``labels`` holds display names.  Build
    instances with :func:`validate_ring` rather than directly.
    """

    labels: tuple[str, ...]
    unit: int
    dual: tuple[int, ...]
    triples: frozenset  # admissible (i, j, k) with N_ij^k = 1
    _products: dict = field(default=None, compare=False, repr=False, hash=False)

    @property
    def rank(self) -> int:
        return len(self.labels)

    def N(self, i: int, j: int, k: int) -> int:
        return 1 if (i, j, k) in self.triples else 0

    def fuse(self, i: int, j: int) -> tuple[int, ...]:
        """Channels k of i x j in increasing index order."""
        return self._products[(i, j)]

    def index(self, name) -> int:
        if isinstance(name, int):
            if not 0 <= name < self.rank:
                raise KeyError(name)
            return name
        try:
            return self.labels.index(name)
        except ValueError:
            raise KeyError(f"unknown label {name!r}") from None

    def name(self, i: int) -> str:
        return self.labels[i]

    def names(self, idx: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in idx)

    def is_invertible(self, i: int) -> bool:
        return len(self.fuse(i, self.dual[i])) == 1

    def fusion_matrix(self, i: int) -> np.ndarray:
        """(N_i)_{jk} = N_{ij}^k."""
        r = self.rank
        m = np.zeros((r, r))
        for j in range(r):
            for k in self.fuse(i, j):
                m[j, k] = 1.0
        return m


def _products(rank, triples):
    prods = {(i, j): [] for i in range(rank) for j in range(rank)}
    for i, j, k in sorted(triples):
        prods[(i, j)].append(k)
    return {key: tuple(v) for key, v in prods.items()}


def validate_ring(
    candidate=None,
    *,
    labels: Sequence[str] | None = None,
    unit: int = 0,
    dual: Sequence[int] | Mapping[int, int] | None = None,
    N=None,
) -> FusionRing:
    """Check the fusion-ring axioms and return a sealed :class:`FusionRing`.

    ``N`` may be an r x r x r nested sequence of integers, a mapping
    ``(i, j, k) -> int``, or an iterable of admissible triples.  An existing
    :class:`FusionRing` is re-validated and returned unchanged.
    Raises :class:`RingValidationError` naming the first failed axiom.
    """
    if isinstance(candidate, FusionRing):
        labels, unit, dual = candidate.labels, candidate.unit, candidate.dual
        N = candidate.triples
    if labels is None or dual is None or N is None:
        raise TypeError("labels, dual and N are required")
    labels = tuple(str(x) for x in labels)
    r = len(labels)
    if r == 0:
        raise RingValidationError("rank", (), "a fusion ring needs at least one label")
    if len(set(labels)) != r:
        raise RingValidationError("labels", (), "label names must be distinct")
    if not 0 <= unit < r:
        raise RingValidationError("unit", (unit,), f"unit index {unit} out of range")
    if isinstance(dual, Mapping):
        dual = tuple(dual[i] for i in range(r))
    dual = tuple(int(d) for d in dual)
    if len(dual) != r or any(not 0 <= d < r for d in dual):
        raise RingValidationError("duality", tuple(dual), "dual map must send labels to labels")

    values = _coefficients(N, r)
    for key, v in sorted(values.items()):
        if v not in (0, 1):
            raise RingValidationError("multiplicity-free", key, f"N{key} = {v} is not in {{0, 1}}")
    triples = frozenset(key for key, v in values.items() if v)

    def n(i, j, k):
        return 1 if (i, j, k) in triples else 0

    for j, k in itertools.product(range(r), repeat=2):
        want = 1 if j == k else 0
        if n(unit, j, k) != want:
            raise RingValidationError("unit", (unit, j, k))
        if n(j, unit, k) != want:
            raise RingValidationError("unit", (j, unit, k))

    for i in range(r):
        if dual[dual[i]] != i:
            raise RingValidationError("duality", (i, dual[i]), f"dual(dual({labels[i]})) != {labels[i]}")
        for j in range(r):
            if n(i, j, unit) != (1 if j == dual[i] else 0):
                raise RingValidationError(
                    "duality", (i, j), f"N_({labels[i]},{labels[j]})^1 = {n(i, j, unit)} contradicts dual map"
                )

    prods = _products(r, triples)
    for i, j, k, l in itertools.product(range(r), repeat=4):
        left = sum(n(m, k, l) for m in prods[(i, j)])
        right = sum(n(i, m, l) for m in prods[(j, k)])
        if left != right:
            raise RingValidationError("associativity", (i, j, k, l))

    return FusionRing(labels=labels, unit=unit, dual=dual, triples=triples, _products=prods)


def _coefficients(N, r) -> dict:
    values = {}
    if isinstance(N, Mapping):
        for key, v in N.items():
            key = tuple(int(x) for x in key)
            _check_key(key, r)
            values[key] = int(v)
        return values
    N = list(N)
    if N and all(isinstance(t, (tuple, list)) and len(t) == 3 and all(isinstance(x, int) for x in t) for t in N) and not (
        len(N) == r and all(len(row) == r and all(isinstance(x, (list, tuple)) for x in row) for row in N)
    ):
        for t in N:
            key = tuple(t)
            _check_key(key, r)
            values[key] = values.get(key, 0) + 1
        return values
    if len(N) != r:
        raise RingValidationError("shape", (len(N),), "N must be r x r x r")
    for i, row in enumerate(N):
        if len(row) != r:
            raise RingValidationError("shape", (i,), "N must be r x r x r")
        for j, col in enumerate(row):
            if len(col) != r:
                raise RingValidationError("shape", (i, j), "N must be r x r x r")
            for k, v in enumerate(col):
                if v:
                    values[(i, j, k)] = int(v)
    return values


def _check_key(key, r):
    if len(key) != 3 or any(not 0 <= x < r for x in key):
        raise RingValidationError("shape", key, f"fusion index {key} out of range")


def ring_from_group(mult_table: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> FusionRing:
    """Pointed fusion ring of a finite group given by its multiplication table.

    ``mult_table[g][h]`` is the index of g*h.  Identity, inverses and
    associativity are checked; failures raise :class:`RingValidationError`
    with ``axiom`` in {"group-closure", "group-identity", "group-inverse",
    "group-associativity"}.
    """
    table = [list(row) for row in mult_table]
    r = len(table)
    if r == 0 or any(len(row) != r for row in table):
        raise RingValidationError("group-closure", (r,), "multiplication table must be square and non-empty")
    for g, h in itertools.product(range(r), repeat=2):
        if not 0 <= table[g][h] < r:
            raise RingValidationError("group-closure", (g, h))
    identity = next(
        (e for e in range(r) if all(table[e][g] == g and table[g][e] == g for g in range(r))),
        None,
    )
    if identity is None:
        raise RingValidationError("group-identity", (), "table has no two-sided identity")
    inverse = []
    for g in range(r):
        inv = [h for h in range(r) if table[g][h] == identity and table[h][g] == identity]
        if not inv:
            raise RingValidationError("group-inverse", (g,))
        inverse.append(inv[0])
    for a, b, c in itertools.product(range(r), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise RingValidationError("group-associativity", (a, b, c))
    if labels is None:
        labels = [str(g) for g in range(r)]
    triples = {(g, h, table[g][h]) for g in range(r) for h in range(r)}
    return validate_ring(labels=labels, unit=identity, dual=inverse, N=triples)


def fp_dimension(ring: FusionRing, i, tol: float = 1e-10, max_iter: int = 100_000) -> float:
    """Frobenius-Perron dimension of label ``i`` (diagnostic, floating point).

    Power iteration on N_i + I from the all-ones vector; the identity shift
    separates the Perron root from other eigenvalues of the same modulus.
    """
    i = ring.index(i)
    m = ring.fusion_matrix(i) + np.eye(ring.rank)
    v = np.ones(ring.rank)
    v /= np.linalg.norm(v)
    lam = 0.0
    for _ in range(max_iter):
        w = m @ v
        new = float(np.linalg.norm(w))
        w /= new
        if abs(new - lam) < tol * 1e-2 and np.linalg.norm(w - v) < tol:
            lam = new
            break
        v, lam = w, new
    return lam - 1.0
