"""Block singularity accounting and the gluing conditions for patchworking.

Each cell of a subdivision carries a block curve with known cusps and
nodes.  Condition C1 compares block polynomials along shared edges;
condition C2 asks for an acyclic orientation of the cell adjacency graph
such that every component of every block has fewer cusps than its
intersection number with the unmarked toric divisors of its cell.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from ..algebra import univariate
from ..algebra.poly import RatPoly
from .polygons import Subdivision, convex_hull, lattice_length


@dataclass(frozen=True)
class BlockDatum:
    cell: int
    cusps: int
    nodes: int
    components: tuple = ()
    polynomial: Optional[RatPoly] = field(default=None, compare=False)

    def __post_init__(self):
        if self.cusps < 0 or self.nodes < 0:
            raise ValueError("cusp and node counts must be nonnegative")
        comps = tuple(self.components) if self.components else (self.cusps,)
        if sum(comps) != self.cusps or any(c < 0 for c in comps):
            raise ValueError(f"component cusps {comps} do not sum to {self.cusps}")
        object.__setattr__(self, "components", comps)

    @property
    def split(self) -> bool:
        return len(self.components) > 1


def _index_blocks(blocks: Sequence[BlockDatum], ncells: Optional[int]) -> dict:
    by_cell = {}
    for b in blocks:
        if b.cell in by_cell:
            raise ValueError(f"duplicate block data for cell {b.cell}")
        if ncells is not None and not 0 <= b.cell < ncells:
            raise ValueError(f"block refers to cell {b.cell}, which does not exist")
        by_cell[b.cell] = b
    if ncells is not None:
        missing = [k for k in range(ncells) if k not in by_cell]
        if missing:
            raise ValueError(f"missing block data for cells {missing}")
    return by_cell


def sum_blocks(blocks: Sequence[BlockDatum], subdivision: Optional[Subdivision] = None) -> tuple:
    """(total cusps, total nodes); with a subdivision, every cell needs exactly one datum."""
    _index_blocks(blocks, len(subdivision.cells) if subdivision is not None else None)
    return sum(b.cusps for b in blocks), sum(b.nodes for b in blocks)


# condition C2


def _on_segment(p, seg) -> bool:
    a, b = seg
    if (b[0] - a[0]) * (p[1] - a[1]) != (b[1] - a[1]) * (p[0] - a[0]):
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


@dataclass
class C2Result:
    orientation: Optional[list]  # arcs (from_cell, to_cell)
    order: Optional[list]
    intersection_numbers: dict  # cell -> C.D of its unmarked sides
    split_blocks: list

    @property
    def found(self) -> bool:
        return self.orientation is not None


def _side_owners(s: Subdivision) -> dict:
    owners = {}
    for edge, (i, j) in s.adjacency().items():
        owners.setdefault(i, {})[edge] = j
        owners.setdefault(j, {})[edge] = i
    return owners


def unmarked_intersection(s: Subdivision, k: int, incoming: set, sigma=None) -> int:
    """Sum of lattice lengths of the sides of cell k that are not marked."""
    owners = _side_owners(s).get(k, {})
    total = 0
    for a, b in s.cells[k].edges():
        nb = owners.get(frozenset((a, b)))
        if nb is not None and nb in incoming:
            continue
        if sigma is not None and _on_segment(a, sigma) and _on_segment(b, sigma):
            continue
        total += lattice_length(a, b)
    return total


def check_C2(s: Subdivision, blocks: Sequence[BlockDatum], sigma=None) -> C2Result:
    """Search for an acyclic orientation satisfying C2 (or C2' when ``sigma`` is a side of T_d).

    Acyclic orientations are generated by orders of the cells: an arc goes
    from the earlier cell to the later one.  Whether a cell is satisfied
    depends only on which of its neighbours precede it, so a depth-first
    search over the set of already placed cells with memoized failures is
    exhaustive.
    """
    n = len(s.cells)
    by_cell = _index_blocks(blocks, n)
    neighbors = s.neighbors()
    owners = _side_owners(s)
    lengths = []
    for k, cell in enumerate(s.cells):
        sides = []
        for a, b in cell.edges():
            nb = owners.get(k, {}).get(frozenset((a, b)))
            on_sigma = sigma is not None and _on_segment(a, sigma) and _on_segment(b, sigma)
            sides.append((nb, on_sigma, lattice_length(a, b)))
        lengths.append(sides)
    worst = [max(by_cell[k].components) for k in range(n)]

    def cd(k, placed_mask):
        return sum(length for nb, on_sigma, length in lengths[k]
                   if not on_sigma and not (nb is not None and placed_mask >> nb & 1))

    failed = set()
    order = []

    def dfs(mask):
        if mask == (1 << n) - 1:
            return True
        if mask in failed:
            return False
        for k in range(n):
            if mask >> k & 1:
                continue
            if worst[k] < cd(k, mask):
                order.append(k)
                if dfs(mask | 1 << k):
                    return True
                order.pop()
        failed.add(mask)
        return False

    split = sorted(k for k, b in by_cell.items() if b.split)
    if not dfs(0):
        return C2Result(None, None, {}, split)
    position = {k: i for i, k in enumerate(order)}
    arcs = sorted((i, j) if position[i] < position[j] else (j, i)
                  for i in range(n) for j in neighbors[i] if i < j)
    numbers = {}
    mask = 0
    for k in order:
        numbers[k] = cd(k, mask)
        mask |= 1 << k
    return C2Result(arcs, order, dict(sorted(numbers.items())), split)


# condition C1


def newton_polygon(f: RatPoly) -> list:
    """Counterclockwise vertices of the Newton polygon of an affine polynomial in x, y."""
    f = f.with_vars(("x", "y"))
    if set(f.support_vars()) - {"x", "y"}:
        raise ValueError("block polynomials must be in x and y")
    ix, iy = f.vars.index("x"), f.vars.index("y")
    return convex_hull((e[ix], e[iy]) for e in f.terms)


def edge_truncation(f: RatPoly, a, b) -> list:
    """Coefficients of f at the lattice points a, a+s, ..., b along a primitive step s."""
    f = f.with_vars(("x", "y"))
    steps = lattice_length(a, b)
    sx, sy = (b[0] - a[0]) // steps, (b[1] - a[1]) // steps
    return [f.coefficient({"x": a[0] + k * sx, "y": a[1] + k * sy}) for k in range(steps + 1)]


def check_C1(s: Subdivision, blocks: Sequence[BlockDatum]) -> list:
    """Defects of the block polynomials along shared edges; empty means C1 holds."""
    by_cell = {b.cell: b for b in blocks if b.polynomial is not None}
    for k, b in by_cell.items():
        if convex_hull(newton_polygon(b.polynomial)) != convex_hull(s.cells[k].vertices):
            raise ValueError(f"Newton polygon of the block polynomial of cell {k} differs from the cell")
    defects = []
    for edge, (i, j) in sorted(s.adjacency().items(), key=lambda kv: kv[1]):
        a, b = sorted(edge)
        truncs = {}
        for k in (i, j):
            if k in by_cell:
                truncs[k] = edge_truncation(by_cell[k].polynomial, a, b)
        if len(truncs) == 2 and truncs[i] != truncs[j]:
            defects.append(f"coefficient mismatch on edge {a}-{b} between cells {i} and {j}")
        for k, t in truncs.items():
            if not t[0] or not t[-1] or not univariate.is_squarefree(t):
                defects.append(f"degenerate truncation on edge {a}-{b} in cell {k}")
    return defects
