"""Projective points with rational coordinates."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .poly import as_fraction

PLANE_VARS = ("x", "y", "w")
SPACE_VARS = ("x", "y", "w", "z")


class ProjPoint:
    """A point of the projective plane or projective 3-space.

    Equality and hashing are up to a nonzero common factor.
    """

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        coords = tuple(as_fraction(c) for c in coords)
        if len(coords) not in (3, 4):
            raise ValueError(f"projective points need 3 or 4 coordinates, got {len(coords)}")
        if not any(coords):
            raise ValueError("all coordinates are zero")
        self.coords = coords

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    @property
    def variables(self) -> tuple:
        return PLANE_VARS if len(self.coords) == 3 else SPACE_VARS

    def as_dict(self) -> dict:
        return dict(zip(self.variables, self.coords))

    def normalized(self) -> tuple:
        pivot = next(c for c in self.coords if c)
        return tuple(c / pivot for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        if len(self.coords) != len(other.coords):
            return False
        a, b = self.coords, other.coords
        n = len(a)
        return all(a[i] * b[j] == a[j] * b[i] for i in range(n) for j in range(i + 1, n))

    def __hash__(self):
        return hash(self.normalized())

    def __repr__(self):
        return "(" + " : ".join(str(c) for c in self.coords) + ")"

    def projected(self) -> "ProjPoint":
        """Image under the projection from (0:0:0:1) to the plane."""
        if len(self.coords) != 4:
            raise ValueError("only space points can be projected")
        return ProjPoint(self.coords[:3])

    def on(self, f) -> bool:
        return f.evaluate(self.as_dict()) == 0


def point(*coords) -> ProjPoint:
    return ProjPoint(coords)


def parse_coord(text) -> Fraction:
    return Fraction(text) if not isinstance(text, Fraction) else text
