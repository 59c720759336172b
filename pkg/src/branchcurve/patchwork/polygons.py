"""Lattice polygons and subdivisions of the triangle T_d = conv{(0,0), (d,0), (0,d)}."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


def cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lattice_length(p, q) -> int:
    return gcd(abs(q[0] - p[0]), abs(q[1] - p[1]))


def convex_hull(points: Iterable) -> list:
    """Counterclockwise hull without collinear points (monotone chain)."""
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower, upper = half(pts), half(reversed(pts))
    return lower[:-1] + upper[:-1]


class LatticePolygon:
    """Polygon with integer vertices listed counterclockwise."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Sequence[Sequence[int]]):
        verts = []
        for v in vertices:
            if len(v) != 2:
                raise ValueError(f"vertex {v} is not a plane point")
            if any(isinstance(c, float) and not c.is_integer() for c in v) or any(
                Fraction(c).denominator != 1 for c in v
            ):
                raise ValueError(f"vertex {v} is not a lattice point")
            verts.append((int(v[0]), int(v[1])))
        if len(verts) < 2:
            raise ValueError("a polygon needs at least two vertices")
        self.vertices = tuple(verts)

    def __eq__(self, other):
        return isinstance(other, LatticePolygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"LatticePolygon({list(self.vertices)})"

    def twice_area(self) -> int:
        """Twice the signed area; positive for counterclockwise order."""
        v = self.vertices
        return sum(v[i][0] * v[(i + 1) % len(v)][1] - v[(i + 1) % len(v)][0] * v[i][1] for i in range(len(v)))

    def edges(self) -> list:
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def is_strictly_convex(self) -> bool:
        v = self.vertices
        n = len(v)
        return n >= 3 and all(cross(v[i], v[(i + 1) % n], v[(i + 2) % n]) > 0 for i in range(n))

    def defects(self) -> list:
        out = []
        if len(self.vertices) < 3 or self.twice_area() == 0:
            return ["degenerate cell"]
        if self.twice_area() < 0:
            out.append("clockwise vertex order")
        elif not self.is_strictly_convex():
            out.append("non-convex cell or collinear vertices")
        if len(set(self.vertices)) != len(self.vertices):
            out.append("repeated vertex")
        return out

    def contains(self, p) -> bool:
        """Closed containment for a counterclockwise convex polygon."""
        return all(cross(a, b, p) >= 0 for a, b in self.edges())

    def lattice_points(self) -> list:
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return [(x, y) for x in range(min(xs), max(xs) + 1) for y in range(min(ys), max(ys) + 1)
                if self.contains((x, y))]

    def transformed(self, matrix, shift=(0, 0)) -> "LatticePolygon":
        (a, b), (c, d) = matrix
        verts = [(a * x + b * y + shift[0], c * x + d * y + shift[1]) for x, y in self.vertices]
        if a * d - b * c < 0:
            verts.reverse()
        return LatticePolygon(verts)


def triangle(d: int) -> LatticePolygon:
    return LatticePolygon([(0, 0), (d, 0), (0, d)])


def interiors_overlap(p: LatticePolygon, q: LatticePolygon) -> bool:
    """Separating-axis test for convex polygons; touching boundaries do not overlap."""
    for poly, other in ((p, q), (q, p)):
        for a, b in poly.edges():
            if all(cross(a, b, v) <= 0 for v in other.vertices):
                return False
    return True


def minkowski_sum(p: Sequence, q: Sequence) -> list:
    return convex_hull((a[0] + b[0], a[1] + b[1]) for a in p for b in q)


def _hull_twice_area(points) -> int:
    h = convex_hull(points)
    if len(h) < 3:
        return 0
    return LatticePolygon(h).twice_area()


def mixed_area(p: Sequence, q: Sequence) -> int:
    """Mixed area normalized so that two unit triangles give 1.

    By Bernstein's theorem this counts the intersections in the torus of two
    generic curves with Newton polygons p and q.
    """
    twice = _hull_twice_area(minkowski_sum(p, q)) - _hull_twice_area(p) - _hull_twice_area(q)
    assert twice % 2 == 0
    return twice // 2


def product_nodes(factors: Sequence[Sequence]) -> int:
    """Nodes of a product of generic rational curves with the given Newton polygons."""
    total = 0
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            total += mixed_area(factors[i], factors[j])
    return total


def newton_sum(factors: Sequence[Sequence]) -> list:
    acc = [(0, 0)]
    for f in factors:
        acc = minkowski_sum(acc, f)
    return acc


def same_polygon(a: Sequence, b: Sequence) -> bool:
    """Equality of convex polygons as point sets, up to starting vertex and collinear points."""
    return convex_hull(a) == convex_hull(b)


@dataclass
class Subdivision:
    d: int
    cells: list

    def __init__(self, d: int, cells: Iterable):
        if d < 1:
            raise ValueError("degree must be positive")
        self.d = d
        self.cells = [c if isinstance(c, LatticePolygon) else LatticePolygon(c) for c in cells]

    def edge_map(self) -> dict:
        """Undirected edge -> list of (cell index, directed edge)."""
        out = {}
        for k, cell in enumerate(self.cells):
            for a, b in cell.edges():
                out.setdefault(frozenset((a, b)), []).append(k)
        return out

    def on_boundary(self, a, b) -> bool:
        d = self.d
        return ((a[0] == 0 and b[0] == 0) or (a[1] == 0 and b[1] == 0)
                or (a[0] + a[1] == d and b[0] + b[1] == d))

    def adjacency(self) -> dict:
        """Interior edge -> (i, j) with i < j, for edges shared by exactly two cells."""
        out = {}
        for edge, owners in self.edge_map().items():
            if len(owners) == 2:
                out[edge] = tuple(sorted(owners))
        return out

    def neighbors(self) -> list:
        nb = [set() for _ in self.cells]
        for i, j in self.adjacency().values():
            nb[i].add(j)
            nb[j].add(i)
        return nb

    def transformed(self, matrix, shift=(0, 0)) -> "Subdivision":
        """Image under x -> Mx + shift.  The result need not sit inside T_d."""
        out = Subdivision.__new__(Subdivision)
        out.d = self.d
        out.cells = [c.transformed(matrix, shift) for c in self.cells]
        return out


def validate_subdivision(s: Subdivision) -> list:
    """Defects of a proposed subdivision of T_d; an empty list means valid."""
    defects = []
    d = s.d
    big = triangle(d)
    for k, cell in enumerate(s.cells):
        for msg in cell.defects():
            defects.append(f"cell {k}: {msg}")
        for v in cell.vertices:
            if not big.contains(v):
                defects.append(f"cell {k}: vertex {v} outside T_{d}")
    if defects:
        return defects
    for i in range(len(s.cells)):
        for j in range(i + 1, len(s.cells)):
            if interiors_overlap(s.cells[i], s.cells[j]):
                defects.append(f"interior overlap between cells {i} and {j}")
    total = sum(c.twice_area() for c in s.cells)
    if total != d * d:
        defects.append(f"area mismatch: twice the total area is {total}, expected {d * d}")
    for edge, owners in sorted(s.edge_map().items(), key=lambda kv: sorted(kv[0])):
        a, b = sorted(edge)
        boundary = s.on_boundary(a, b)
        if boundary and len(owners) != 1:
            defects.append(f"boundary edge {a}-{b} belongs to {len(owners)} cells")
        if not boundary and len(owners) != 2:
            defects.append(f"interior edge {a}-{b} is not shared by exactly two cells (owners {owners})")
    return defects
