"""Exact scalars over Q, cyclotomic fields Q(zeta_n) and prime fields F_p.

A :class:`Scalar` is an immutable value tagged with its :class:`FieldSpec`.
Cyclotomic elements are coefficient vectors in the power basis
``1, z, ..., z^(phi(n)-1)`` after folding ``z^n = 1`` and reducing by the
n-th cyclotomic polynomial, so equality of canonical forms is equality of
field elements.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import FieldMismatchError, ScalarDivisionByZero, TCKitError

__all__ = [
    "FieldSpec",
    "Scalar",
    "QQ",
    "cyclotomic",
    "prime_field",
    "cyclotomic_reduce",
    "invert",
    "conjugate",
    "cyclotomic_polynomial",
]


def _primitive_root(p: int) -> int:
    if p == 2:
        return 1
    phi = p - 1
    factors = {d for d in range(2, phi + 1) if phi % d == 0 and _is_prime(d)}
    for g in range(2, p):
        if all(pow(g, phi // q, p) != 1 for q in factors):
            return g
    raise AssertionError("no primitive root")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    r = math.isqrt(p)
    for d in range(3, r + 1, 2):
        if p % d == 0:
            return False
    return True


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    # x^n - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_exact_div(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        q, r = divmod(num[k + len(den) - 1], lead)
        assert r == 0
        out[k] = q
        for j, c in enumerate(den):
            num[k + j] -= q * c
    assert not any(num[: len(den) - 1])
    return out


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Canonical coordinates of z^k for k = 0..n-1 (integral since Phi_n is monic)."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by z, reduce the z^deg term with the monic relation
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(deg):
                cur[j] -= top * phi[j]
    return tuple(rows)


@dataclass(frozen=True)
class FieldSpec:
    """Description of a base field.

    ``kind`` is one of ``"rational"``, ``"cyclotomic"`` or ``"prime"``;
    ``order`` is the cyclotomic order n, ``p`` the prime.
    """

    kind: str
    order: int = 0
    p: int = 0

    def __post_init__(self):
        if self.kind == "rational":
            if self.order or self.p:
                raise ValueError("rational field takes no parameters")
        elif self.kind == "cyclotomic":
            if self.order < 1:
                raise ValueError("cyclotomic order must be >= 1")
            if self.p:
                raise ValueError("cyclotomic field takes no prime")
        elif self.kind == "prime":
            if not _is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
            if self.order:
                raise ValueError("prime field takes no cyclotomic order")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "prime" else 0

    @property
    def degree(self) -> int:
        if self.kind == "cyclotomic":
            return len(cyclotomic_polynomial(self.order)) - 1
        return 1

    def __str__(self) -> str:
        if self.kind == "rational":
            return "rational"
        if self.kind == "cyclotomic":
            return f"cyclotomic:{self.order}"
        return f"prime:{self.p}"

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``rational``, ``cyclotomic:n`` or ``prime:p``."""
        text = text.strip()
        if text in ("rational", "Q", "QQ"):
            return QQ
        kind, _, arg = text.partition(":")
        try:
            val = int(arg)
        except ValueError:
            raise ValueError(f"bad field spec {text!r}") from None
        if kind == "cyclotomic":
            return cls("cyclotomic", order=val)
        if kind == "prime":
            return cls("prime", p=val)
        raise ValueError(f"bad field spec {text!r}")

    # constructors ----------------------------------------------------------

    def zero(self) -> "Scalar":
        return self(0)

    def one(self) -> "Scalar":
        return self(1)

    def __call__(self, value) -> "Scalar":
        """Coerce an int, Fraction, or same-field Scalar into this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(f"{value.field} scalar used in {self}")
            return value
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot coerce {type(value).__name__} into {self}")
        if self.kind == "rational":
            return Scalar._make(self, Fraction(value))
        if self.kind == "prime":
            v = Fraction(value)
            num = v.numerator % self.p
            den = v.denominator % self.p
            if den == 0:
                raise ScalarDivisionByZero(f"denominator of {value} vanishes mod {self.p}")
            return Scalar._make(self, num * pow(den, -1, self.p) % self.p)
        coeffs = [Fraction(0)] * self.degree
        coeffs[0] = Fraction(value)
        return Scalar._make(self, tuple(coeffs))

    def zeta(self, k: int = 1, of_order: int | None = None) -> "Scalar":
        """The root of unity exp(2 pi i k / m) with m = ``of_order`` (default: the field order).

        In F_p the smallest primitive root stands in for exp(2 pi i / (p-1)).
        """
        m = of_order if of_order is not None else (self.order if self.kind == "cyclotomic" else 2)
        if not self.contains_root_of_unity(m):
            raise TCKitError(f"{self} does not contain a primitive {m}-th root of unity")
        if self.kind == "rational":
            return self(1) if k % m == 0 else self(-1)
        if self.kind == "prime":
            g = _primitive_root(self.p)
            return self(pow(g, ((self.p - 1) // m) * (k % m), self.p))
        n = self.order
        if n % m == 0:
            return self._zeta_index((n // m) * k)
        # odd n: zeta_{2n} = -zeta_n^((n+1)/2)
        e = ((2 * n) // m) * k % (2 * n)
        z2n = -self._zeta_index((n + 1) // 2)
        return z2n**e

    def _zeta_index(self, k: int) -> "Scalar":
        return Scalar._make(self, tuple(Fraction(c) for c in _power_table(self.order)[k % self.order]))

    def contains_root_of_unity(self, m: int) -> bool:
        if m <= 2:
            return True
        if self.kind == "rational":
            return False
        if self.kind == "prime":
            return (self.p - 1) % m == 0
        n = self.order
        full = n if n % 2 == 0 else 2 * n
        return full % m == 0

    def roots_of_unity(self) -> list["Scalar"]:
        """All roots of unity in the field, in a deterministic order."""
        if self.kind == "rational":
            return [self(1), self(-1)]
        if self.kind == "prime":
            return [self(k) for k in range(1, self.p)]
        n = self.order
        out = [self._zeta_index(k) for k in range(n)]
        if n % 2:
            out += [-z for z in out]
        return out


QQ = FieldSpec("rational")


def cyclotomic(n: int) -> FieldSpec:
    return FieldSpec("cyclotomic", order=n)


def prime_field(p: int) -> FieldSpec:
    return FieldSpec("prime", p=p)


class Scalar:
    """An exact field element.  Immutable and hashable."""

    __slots__ = ("field", "_v")

    def __init__(self, *args, **kwargs):
        raise TypeError("construct scalars through a FieldSpec, e.g. QQ(3) or cyclotomic(5).zeta()")

    @classmethod
    def _make(cls, field: FieldSpec, value) -> "Scalar":
        obj = object.__new__(cls)
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "_v", value)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def __reduce__(self):
        return (_rebuild, (self.field, self._v))

    # canonical data --------------------------------------------------------

    @property
    def value(self):
        """Canonical representation: Fraction, int mod p, or coefficient tuple."""
        return self._v

    def coefficients(self) -> tuple[Fraction, ...]:
        if self.field.kind == "cyclotomic":
            return self._v
        return (Fraction(self._v),)

    def is_zero(self) -> bool:
        if self.field.kind == "cyclotomic":
            return not any(self._v)
        return self._v == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return self.field.kind != "cyclotomic" or not any(self._v[1:])

    def to_fraction(self) -> Fraction:
        if self.field.kind == "prime":
            raise TypeError("prime-field elements have no rational value")
        if self.field.kind == "rational":
            return self._v
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._v[0]

    # arithmetic ------------------------------------------------------------

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        k = self.field.kind
        if k == "rational":
            return Scalar._make(self.field, self._v + o._v)
        if k == "prime":
            return Scalar._make(self.field, (self._v + o._v) % self.field.p)
        return Scalar._make(self.field, tuple(a + b for a, b in zip(self._v, o._v)))

    __radd__ = __add__

    def __neg__(self):
        k = self.field.kind
        if k == "rational":
            return Scalar._make(self.field, -self._v)
        if k == "prime":
            return Scalar._make(self.field, (-self._v) % self.field.p)
        return Scalar._make(self.field, tuple(-a for a in self._v))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        k = self.field.kind
        if k == "rational":
            return Scalar._make(self.field, self._v * o._v)
        if k == "prime":
            return Scalar._make(self.field, self._v * o._v % self.field.p)
        return Scalar._make(self.field, _cyc_mul(self.field.order, self._v, o._v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * invert(o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * invert(self)

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return invert(self) ** (-e)
        result = self.field(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "Scalar":
        return invert(self)

    # comparison ------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self._v == other._v
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == self.field(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self._v))

    # display ---------------------------------------------------------------

    def to_complex(self) -> complex:
        """Floating approximation; diagnostic display only."""
        k = self.field.kind
        if k == "rational":
            return complex(float(self._v))
        if k == "prime":
            return complex(self._v)
        n = self.field.order
        return sum(
            (float(c) * cmath.exp(2j * math.pi * i / n) for i, c in enumerate(self._v) if c),
            0j,
        )

    def approx(self) -> str:
        if self.field.kind == "prime":
            return str(self._v)
        z = self.to_complex()
        if abs(z.imag) < 1e-12:
            return f"{z.real:.10g}"
        return f"{z.real:.10g}{z.imag:+.10g}i"

    def __str__(self):
        k = self.field.kind
        if k == "rational":
            return str(self._v)
        if k == "prime":
            return f"{self._v} (mod {self.field.p})"
        n = self.field.order
        terms = []
        for i, c in enumerate(self._v):
            if not c:
                continue
            mono = "1" if i == 0 else (f"z{n}" if i == 1 else f"z{n}^{i}")
            if i == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self):
        return f"Scalar({self.field}, {self})"


def _rebuild(field, value):
    return Scalar._make(field, value)


def _cyc_mul(n: int, a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    raw = [Fraction(0)] * n
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                raw[(i + j) % n] += x * y
    return _canonical(n, raw)


def _canonical(n: int, raw: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Map a length-n vector of z^k coefficients to canonical coordinates."""
    table = _power_table(n)
    deg = len(table[0])
    out = [Fraction(0)] * deg
    for k, c in enumerate(raw):
        if not c:
            continue
        if k < deg:
            out[k] += c
            continue
        for j, t in enumerate(table[k]):
            if t:
                out[j] += c * t
    return tuple(out)


def cyclotomic_reduce(raw: Iterable, n: int) -> Scalar:
    """Canonical element of Q(zeta_n) from raw coefficients of z^0, z^1, ...

    Indices beyond n are folded with z^n = 1 before reduction by Phi_n.
    """
    raw = [Fraction(c) for c in raw]
    if not raw:
        raise ValueError("coefficient sequence must be non-empty")
    folded = [Fraction(0)] * n
    for k, c in enumerate(raw):
        folded[k % n] += c
    field = cyclotomic(n)
    return Scalar._make(field, _canonical(n, folded))


def _galois(x: Scalar, j: int) -> Scalar:
    """Image of x under z -> z^j (j coprime to the order)."""
    n = x.field.order
    raw = [Fraction(0)] * n
    for i, c in enumerate(x._v):
        if c:
            raw[(i * j) % n] += c
    return Scalar._make(x.field, _canonical(n, raw))


def conjugate(x: Scalar) -> Scalar:
    """z -> z^-1 on cyclotomic fields; the identity on Q and F_p."""
    if x.field.kind != "cyclotomic":
        return x
    return _galois(x, -1)


def invert(x: Scalar) -> Scalar:
    """Multiplicative inverse; raises ScalarDivisionByZero on zero."""
    if x.is_zero():
        raise ScalarDivisionByZero(f"cannot invert zero in {x.field}")
    k = x.field.kind
    if k == "rational":
        return Scalar._make(x.field, 1 / x._v)
    if k == "prime":
        return Scalar._make(x.field, pow(x._v, x.field.p - 2, x.field.p))
    n = x.field.order
    # product of the non-trivial Galois conjugates, divided by the (rational) norm
    others = x.field(1)
    for j in range(2, n + 1):
        if math.gcd(j, n) == 1 and j % n != 1:
            others = others * _galois(x, j)
    norm = (x * others).to_fraction()
    return Scalar._make(x.field, tuple(c / norm for c in others._v))


def nth_roots(c: Scalar, k: int) -> list[Scalar]:
    """All y in the field of c with y**k == c, sorted deterministically."""
    if k < 1:
        raise ValueError("root degree must be positive")
    field = c.field
    if c.is_zero():
        return [c]
    if k == 1:
        return [c]
    if field.kind == "prime":
        return [y for y in (field(v) for v in range(1, field.p)) if y**k == c]
    if field.kind == "rational":
        return _rational_roots(c.to_fraction(), k, field)
    return _cyclotomic_roots(c, k)


def _int_root(m: int, k: int) -> int | None:
    if m < 0:
        return None
    r = round(m ** (1.0 / k)) if m else 0
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**k == m:
            return cand
    # large values: integer Newton
    lo, hi = 0, 1 << ((m.bit_length() // k) + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**k < m:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**k == m else None


def _rational_roots(q: Fraction, k: int, field: FieldSpec) -> list[Scalar]:
    sign = 1 if q > 0 else -1
    if sign < 0 and k % 2 == 0:
        return []
    num = _int_root(abs(q.numerator), k)
    den = _int_root(q.denominator, k)
    if num is None or den is None:
        return []
    r = Fraction(num, den) * sign
    roots = [field(r)]
    if k % 2 == 0:
        roots.append(field(-r))
    return sorted(roots, key=_sort_key)


def _cyclotomic_roots(c: Scalar, k: int) -> list[Scalar]:
    import sympy
    from sympy.polys.domains import QQ as SQQ

    n = c.field.order
    dom = _sympy_cyclotomic_domain(n)
    coeffs_high_first = [sympy.Rational(v.numerator, v.denominator) for v in reversed(c.value)]
    elem = dom(coeffs_high_first)
    x = sympy.Symbol("x")
    poly = sympy.Poly([dom.one] + [dom.zero] * (k - 1) + [-elem], x, domain=dom)
    roots = []
    for factor, _mult in poly.factor_list()[1]:
        if factor.degree() != 1:
            continue
        lead, const = factor.rep.to_list()
        r = -const / lead
        vals = [Fraction(int(v.numerator), int(v.denominator)) for v in (SQQ.to_sympy(t) for t in r.to_list())]
        vals = list(reversed(vals)) + [Fraction(0)] * (c.field.degree - len(vals))
        roots.append(Scalar._make(c.field, tuple(vals[: c.field.degree])))
    for r in roots:
        assert r**k == c
    return sorted(set(roots), key=_sort_key)


@lru_cache(maxsize=None)
def _sympy_cyclotomic_domain(n: int):
    import sympy
    from sympy.polys.domains import QQ as SQQ

    dom = SQQ.algebraic_field(sympy.exp(2 * sympy.pi * sympy.I / n))
    mod = [Fraction(int(v.numerator), int(v.denominator)) for v in (SQQ.to_sympy(t) for t in dom.mod.to_list())]
    if tuple(reversed(mod)) != tuple(Fraction(v) for v in cyclotomic_polynomial(n)):
        raise TCKitError(f"unexpected minimal polynomial for zeta_{n}")
    return dom


def _sort_key(s: Scalar):
    if s.field.kind == "cyclotomic":
        return s.value
    return (s.value,)
