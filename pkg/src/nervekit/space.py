"""Model spaces: the circle R/Z, flat d-tori, and finite abstract metric spaces.

All coordinates are exact rationals.  The torus carries the l-infinity
combination of per-coordinate circle distances, so every distance in the
toolkit is an exact ``Fraction`` and set arithmetic never touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

Rat = Fraction


class SpaceMismatchError(ValueError):
    """Raised when a point or set does not belong to the given space."""


def frac(x) -> Fraction:
    """Coerce ints, strings like '3/4', or Fractions to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floats are not allowed in exact coordinates: %r" % (x,))
    return Fraction(x)


def angle(x) -> Fraction:
    """Reduce a rational to the fundamental domain [0, 1) of R/Z."""
    return frac(x) % 1


def circle_dist(p, q) -> Fraction:
    """Quotient metric on R/Z: min(|p-q|, 1-|p-q|).  Always <= 1/2."""
    d = abs(angle(p) - angle(q))
    return min(d, 1 - d)


def torus_point(coords: Sequence) -> tuple[Fraction, ...]:
    return tuple(angle(c) for c in coords)


@dataclass(frozen=True)
class SpaceDescriptor:
    """One of the model spaces: circle, torus(d), or abstract(n).

    Abstract spaces carry an explicit point count and a symmetric rational
    distance matrix with zero diagonal satisfying the triangle inequality.
    Points are Fractions (circle), tuples of Fractions (torus), or integer
    indices (abstract).
    """

    kind: str  # "circle" | "torus" | "abstract"
    dim: int = 1
    dist_matrix: tuple[tuple[Fraction, ...], ...] | None = field(default=None)

    def __post_init__(self):
        if self.kind not in ("circle", "torus", "abstract"):
            raise ValueError("unknown space kind %r" % self.kind)
        if self.kind == "torus" and self.dim < 1:
            raise ValueError("torus dimension must be >= 1")
        if self.kind == "abstract":
            m = self.dist_matrix
            if m is None:
                raise ValueError("abstract space needs a distance matrix")
            n = len(m)
            for i in range(n):
                if len(m[i]) != n or m[i][i] != 0:
                    raise ValueError("distance matrix must be square with zero diagonal")
                for j in range(n):
                    if m[i][j] != m[j][i] or m[i][j] < 0:
                        raise ValueError("distance matrix must be symmetric nonnegative")
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        if m[i][j] > m[i][k] + m[k][j]:
                            raise ValueError("triangle inequality violated")

    @property
    def point_count(self) -> int:
        if self.kind != "abstract":
            raise SpaceMismatchError("point_count only defined for abstract spaces")
        return len(self.dist_matrix)

    def diameter(self) -> Fraction:
        """Diameter of the space itself."""
        if self.kind in ("circle", "torus"):
            return Fraction(1, 2)
        return max((d for row in self.dist_matrix for d in row), default=Fraction(0))

    def check_point(self, p) -> None:
        if self.kind == "circle":
            if not isinstance(p, Fraction):
                raise SpaceMismatchError("point/space mismatch")
        elif self.kind == "torus":
            if not (isinstance(p, tuple) and len(p) == self.dim):
                raise SpaceMismatchError("point/space mismatch")
        else:
            if not (isinstance(p, int) and 0 <= p < self.point_count):
                raise SpaceMismatchError("point/space mismatch")

    def to_json(self) -> dict:
        if self.kind == "circle":
            return {"kind": "circle"}
        if self.kind == "torus":
            return {"kind": "torus", "dim": self.dim}
        return {
            "kind": "abstract",
            "points": self.point_count,
            "dist": [[rat_str(d) for d in row] for row in self.dist_matrix],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SpaceDescriptor":
        kind = obj["kind"]
        if kind == "circle":
            return circle()
        if kind == "torus":
            return torus(int(obj["dim"]))
        rows = tuple(tuple(frac(d) for d in row) for row in obj["dist"])
        return abstract(rows)


def circle() -> SpaceDescriptor:
    return SpaceDescriptor("circle", dim=1)


def torus(d: int) -> SpaceDescriptor:
    return SpaceDescriptor("torus", dim=d)


def abstract(dist_matrix) -> SpaceDescriptor:
    rows = tuple(tuple(frac(d) for d in row) for row in dist_matrix)
    return SpaceDescriptor("abstract", dim=0, dist_matrix=rows)


def distance(space: SpaceDescriptor, p, q) -> Fraction:
    """Flat quotient metric: circle arc distance, l-infinity on tori,
    matrix lookup on abstract spaces."""
    space.check_point(p)
    space.check_point(q)
    if space.kind == "circle":
        return circle_dist(p, q)
    if space.kind == "torus":
        return max(circle_dist(a, b) for a, b in zip(p, q))
    return space.dist_matrix[p][q]


def rat_str(x: Fraction) -> str:
    """Serialize a rational as 'p/q' (denominator kept even when 1)."""
    return "%d/%d" % (x.numerator, x.denominator)
