"""Plane curves of fixed degree through a finite set of points."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .linalg import nullspace, rank
from .points import PLANE_VARS, ProjPoint
from .poly import RatPoly


def monomials(degree: int) -> list:
    """Exponent triples of degree ``degree`` in (x, y, w), highest x first."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    return [(i, j, degree - i - j) for i in range(degree, -1, -1) for j in range(degree - i, -1, -1)]


def evaluation_matrix(points: Sequence[ProjPoint], degree: int) -> list:
    rows = []
    mons = monomials(degree)
    for p in points:
        x, y, w = p.coords
        rows.append([x**a * y**b * w**c for a, b, c in mons])
    return rows


@dataclass
class LinearSystem:
    degree: int
    length: int
    h0: int
    virtual: int
    basis: list = field(repr=False)

    @property
    def delta(self) -> int:
        """Superabundance: how far the points fail to impose independent conditions."""
        return self.h0 - self.virtual


def linear_system(points: Sequence[ProjPoint], degree: int) -> LinearSystem:
    """Forms of ``degree`` vanishing at the reduced set ``points``."""
    pts = list(points)
    for p in pts:
        if len(p.coords) != 3:
            raise ValueError(f"{p} is not a plane point")
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate points in the scheme")
    mons = monomials(degree)
    n = len(mons)
    matrix = evaluation_matrix(pts, degree)
    h0 = n - rank(matrix) if pts else n
    kernel = nullspace(matrix, ncols=n) if pts else nullspace([], ncols=n)
    basis = []
    for vec in kernel:
        terms = {e: c for e, c in zip(mons, vec) if c}
        basis.append(RatPoly(PLANE_VARS, terms).normalized())
    assert len(basis) == h0
    return LinearSystem(degree, len(pts), h0, n - len(pts), basis)


def linear_system_dim(points: Sequence[ProjPoint], degree: int) -> tuple:
    """``(h0, virtual, delta)`` for degree-``degree`` curves through ``points``."""
    ls = linear_system(points, degree)
    return ls.h0, ls.virtual, ls.delta
