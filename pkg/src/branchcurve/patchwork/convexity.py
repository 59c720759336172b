"""Regularity (convexity) of lattice subdivisions via exact linear feasibility.

A subdivision is convex when some convex function is affine on every cell
and breaks along every interior edge.  Each cell i gets an affine function
lambda_i(x, y) = a_i x + b_i y + c_i; neighbours agree on their common edge
and across each edge the neighbour's function lies strictly below at an
off-edge vertex.  Strictness is encoded with slack 1, which loses nothing
because the feasible set of the strict system is a cone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .lp import LinearSystem, fourier_motzkin_feasible, simplex_feasible
from .polygons import Subdivision


@dataclass
class ConvexityResult:
    feasible: bool
    certificate: Optional[list]  # per cell (a, b, c)
    method: str
    verified: bool

    def heights(self, s: Subdivision) -> dict:
        """Lifted height of every vertex of the subdivision."""
        out = {}
        for (a, b, c), cell in zip(self.certificate, s.cells):
            for x, y in cell.vertices:
                out[(x, y)] = a * x + b * y + c
        return out


def _row(ncells, cell, point, sign=1):
    row = [Fraction(0)] * (3 * ncells)
    row[3 * cell] = Fraction(sign * point[0])
    row[3 * cell + 1] = Fraction(sign * point[1])
    row[3 * cell + 2] = Fraction(sign)
    return row


def _add(r1, r2):
    return [a + b for a, b in zip(r1, r2)]


def convexity_system(s: Subdivision) -> LinearSystem:
    n = len(s.cells)
    eq, ub = [], []
    # cell 0 carries the zero function, which fixes the affine gauge
    for k in range(3):
        row = [Fraction(0)] * (3 * n)
        row[k] = Fraction(1)
        eq.append((row, Fraction(0)))
    for edge, (i, j) in sorted(s.adjacency().items(), key=lambda kv: kv[1]):
        for v in sorted(edge):
            eq.append((_add(_row(n, i, v), _row(n, j, v, -1)), Fraction(0)))
        off = next(v for v in s.cells[j].vertices if v not in edge)
        # lambda_i(off) + 1 <= lambda_j(off)
        ub.append((_add(_row(n, i, off), _row(n, j, off, -1)), Fraction(-1)))
    return LinearSystem(3 * n, eq, ub)


def verify_certificate(s: Subdivision, certificate) -> bool:
    """Exact check: agreement on shared edges and a strict break at every off-edge vertex."""
    if len(certificate) != len(s.cells):
        return False

    def value(k, p):
        a, b, c = certificate[k]
        return a * p[0] + b * p[1] + c

    for edge, (i, j) in s.adjacency().items():
        for v in edge:
            if value(i, v) != value(j, v):
                return False
        for mine, other in ((j, i), (i, j)):
            for v in s.cells[mine].vertices:
                if v not in edge and not value(other, v) < value(mine, v):
                    return False
    return True


def check_convexity(s: Subdivision, method: str = "simplex") -> ConvexityResult:
    """Look for a convex lifting; ``method`` is "simplex" or "fourier-motzkin"."""
    system = convexity_system(s)
    if method == "simplex":
        x = simplex_feasible(system)
    elif method == "fourier-motzkin":
        x = fourier_motzkin_feasible(system)
    else:
        raise ValueError(f"unknown method {method!r}")
    if x is None:
        return ConvexityResult(False, None, method, True)
    if not system.satisfied_by(x):
        raise AssertionError("solver returned a point violating the system")
    cert = [tuple(x[3 * k:3 * k + 3]) for k in range(len(s.cells))]
    if not verify_certificate(s, cert):
        raise AssertionError("certificate failed exact re-verification")
    return ConvexityResult(True, cert, method, True)
