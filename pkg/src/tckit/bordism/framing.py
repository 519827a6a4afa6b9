"""Framing classes of the interval: pi_1(SO(n)), which is Z for n = 2 and Z/2 above."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import TCKitError

__all__ = ["FramingClass", "framing_compose", "loop", "identity", "stabilize"]


@dataclass(frozen=True)
class FramingClass:
    n: int
    value: int

    def __post_init__(self):
        if self.n < 2:
            raise TCKitError("framing dimension must be at least 2")
        if self.n >= 3:
            object.__setattr__(self, "value", self.value % 2)

    def __add__(self, other: "FramingClass") -> "FramingClass":
        return framing_compose(self, other)

    def __neg__(self) -> "FramingClass":
        return FramingClass(self.n, -self.value)

    def is_identity(self) -> bool:
        return self.value == 0


def framing_compose(a: FramingClass, b: FramingClass) -> FramingClass:
    """Concatenation of framed intervals."""
    if a.n != b.n:
        raise TCKitError(f"cannot compose framings in dimensions {a.n} and {b.n}")
    return FramingClass(a.n, a.value + b.value)


def identity(n: int) -> FramingClass:
    return FramingClass(n, 0)


def loop(n: int) -> FramingClass:
    """The loop bordism: -1 in Z for n = 2, the generator of Z/2 otherwise."""
    return FramingClass(n, -1)


def stabilize(c: FramingClass, m: int | None = None) -> FramingClass:
    m = c.n + 1 if m is None else m
    if m < c.n:
        raise TCKitError("stabilization cannot lower the dimension")
    return FramingClass(m, c.value)
