"""2-framed immersed circles given as closed polygons with a normal side."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ParseError, TCKitError

__all__ = [
    "FramedImmersedCircle",
    "turning_number",
    "circle_invariant",
    "parse_polygon",
    "looped_circle",
    "figure_eight",
    "circle_family",
]


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


@dataclass(frozen=True)
class FramedImmersedCircle:
    vertices: tuple
    normal_side: str = "left"

    def __post_init__(self):
        pts = tuple((Fraction(x), Fraction(y)) for x, y in self.vertices)
        object.__setattr__(self, "vertices", pts)
        if self.normal_side not in ("left", "right"):
            raise TCKitError("normal_side must be 'left' or 'right'")
        if len(pts) < 3:
            raise TCKitError("a closed polygon needs at least three vertices")
        edges = self.edges()
        for i, e in enumerate(edges):
            if e == (0, 0):
                raise TCKitError(f"zero-length edge at vertex {i}")
        for i, e in enumerate(edges):
            nxt = edges[(i + 1) % len(edges)]
            if _cross(e, nxt) == 0 and _dot(e, nxt) < 0:
                raise TCKitError(f"antipodal consecutive tangents at vertex {(i + 1) % len(edges)}")

    def edges(self):
        pts = self.vertices
        n = len(pts)
        return [(pts[(i + 1) % n][0] - pts[i][0], pts[(i + 1) % n][1] - pts[i][1]) for i in range(n)]


def _upper(v) -> bool:
    # half-open upper half plane: angle in [0, pi)
    return v[1] > 0 or (v[1] == 0 and v[0] > 0)


def turning_number(c: FramedImmersedCircle) -> int:
    """Whitney degree of the tangent, counted exactly.

    The tangent turns from edge to edge by the short rotation; each signed
    crossing of the direction angle 0 contributes one full turn.
    """
    edges = c.edges()
    t = 0
    for i, u in enumerate(edges):
        v = edges[(i + 1) % len(edges)]
        turn = _cross(u, v)
        if turn > 0 and not _upper(u) and _upper(v):
            t += 1
        elif turn < 0 and _upper(u) and not _upper(v):
            t -= 1
    return t


def circle_invariant(c: FramedImmersedCircle) -> int:
    """s * t with s = +1 for a left normal, -1 for a right normal."""
    s = 1 if c.normal_side == "left" else -1
    return s * turning_number(c)


def parse_polygon(text: str, normal_side: str = "left") -> FramedImmersedCircle:
    """One ``x y`` pair per line (commas allowed); ``#`` starts a comment."""
    pts = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two coordinates")
        try:
            pts.append((Fraction(parts[0]), Fraction(parts[1])))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"line {lineno}: bad coordinate") from None
    return FramedImmersedCircle(tuple(pts), normal_side)


def _rational(x: float, den: int = 10_000) -> Fraction:
    return Fraction(round(x * den), den)


def looped_circle(loops: int = 0, normal_side: str = "left", samples: int = 480) -> FramedImmersedCircle:
    """A clockwise round circle with ``loops`` small kinks turning the same way.

    Sampled from z(t) = e^{-it} + a e^{-i(loops+1)t}; for loops >= 1 the
    amplitude a satisfies a (loops + 1) > 1 so each kink is a genuine loop.
    """
    m = loops + 1
    a = 0.0 if loops == 0 else 1.4 / m
    pts = []
    for s in range(samples):
        t = 2 * math.pi * s / samples
        pts.append((_rational(math.cos(t) + a * math.cos(m * t)), _rational(-math.sin(t) - a * math.sin(m * t))))
    return FramedImmersedCircle(tuple(pts), normal_side)


def figure_eight(normal_side: str = "left", samples: int = 480) -> FramedImmersedCircle:
    pts = []
    for s in range(samples):
        t = 2 * math.pi * s / samples
        pts.append((_rational(math.sin(t)), _rational(math.sin(t) * math.cos(t))))
    return FramedImmersedCircle(tuple(pts), normal_side)


def circle_family() -> list[FramedImmersedCircle]:
    """The seven pictured circles, left to right: left normal with 2, 1, 0
    kinks, the figure-eight, right normal with 0, 1, 2 kinks."""
    return [
        looped_circle(2, "left"),
        looped_circle(1, "left"),
        looped_circle(0, "left"),
        figure_eight("left"),
        looped_circle(0, "right"),
        looped_circle(1, "right"),
        looped_circle(2, "right"),
    ]
