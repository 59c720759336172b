"""Targets for patchworked curves and the shipped construction plans.

A plan for nu needs a curve of degree d(nu) with at least c(nu) cusps and
at least n(nu) + 1 nodes, where (d, c, n)(nu) are the Salmon numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..geography import salmon_counts
from .conditions import BlockDatum
from .polygons import Subdivision, newton_sum, product_nodes, same_polygon

# constructed (d, c, n) per surface degree
TARGET_TABLE = {
    3: (6, 6, 1),
    4: (12, 24, 16),
    5: (20, 63, 67),
    6: (30, 126, 191),
    7: (42, 216, 435),
    8: (56, 336, 902),
    9: (72, 504, 1550),
    10: (90, 720, 2526),
}


@dataclass(frozen=True)
class TargetCheck:
    nu: int
    constructed: tuple
    required: tuple
    degree_ok: bool
    cusps_ok: bool
    nodes_ok: bool

    @property
    def ok(self) -> bool:
        return self.degree_ok and self.cusps_ok and self.nodes_ok


def verify_targets(nu: int, constructed: tuple) -> TargetCheck:
    if not 3 <= nu <= 10:
        raise ValueError(f"targets are tabulated for 3 <= nu <= 10, got {nu}")
    d, c, n = constructed
    s = salmon_counts(nu)
    required = (s.d, s.c, s.n + 1)
    return TargetCheck(nu, (d, c, n), required, d == s.d, c >= s.c, n >= s.n + 1)


# plans

UNIT = ((0, 0), (1, 0), (0, 1))
HORIZONTAL = ((0, 0), (1, 0))
VERTICAL = ((0, 0), (0, 1))
ANTIDIAGONAL = ((0, 0), (-1, 1))


@dataclass
class Plan:
    nu: int
    subdivision: Subdivision
    blocks: list
    factors: dict  # cell -> Newton polygons of the linear factors of a nodal block

    def check_factor_nodes(self) -> list:
        """Cells whose declared nodes disagree with the factor count or whose factors do not tile the cell."""
        bad = []
        for b in self.blocks:
            fs = self.factors.get(b.cell)
            if fs is None:
                continue
            cell = self.subdivision.cells[b.cell]
            shape = newton_sum(fs)
            shift = min(cell.vertices)
            base = min(shape)
            moved = [(x - base[0] + shift[0], y - base[1] + shift[1]) for x, y in shape]
            if not same_polygon(moved, cell.vertices) or product_nodes(fs) != b.nodes:
                bad.append(b.cell)
        return bad


def _tri_up(x, y, s=6):
    return [(x, y), (x + s, y), (x, y + s)]


def _tri_down(x, y, s=6):
    return [(x + s, y), (x + s, y + s), (x, y + s)]


def _square(x, y, s=6):
    return [(x, y), (x + s, y), (x + s, y + s), (x, y + s)]


def plan_nu4() -> Plan:
    """T_12 cut into four side-6 triangles, each carrying a sextic with 6 cusps and 4 nodes."""
    cells = [_tri_up(0, 0), _tri_up(6, 0), _tri_up(0, 6), _tri_down(0, 0)]
    blocks = [BlockDatum(k, 6, 4) for k in range(4)]
    return Plan(4, Subdivision(12, cells), blocks, {})


def plan_nu5() -> Plan:
    """T_20: seven side-6 triangles with 9-cuspidal sextics, five cells with products of lines."""
    cusp_cells = [_tri_up(0, 0), _tri_up(6, 0), _tri_up(0, 6), _tri_down(0, 0),
                  _tri_up(12, 0), _tri_down(6, 0), _tri_down(0, 6)]
    nodal = [
        ([(18, 0), (20, 0), (14, 6), (12, 6)], [HORIZONTAL] * 2 + [ANTIDIAGONAL] * 6),
        ([(12, 6), (14, 6), (12, 8)], [UNIT] * 2),
        ([(6, 6), (12, 6), (12, 8), (8, 12), (6, 12)], [UNIT] * 4 + [HORIZONTAL] * 2 + [VERTICAL] * 2),
        ([(6, 12), (8, 12), (6, 14)], [UNIT] * 2),
        ([(0, 12), (6, 12), (6, 14), (0, 20)], [UNIT] * 6 + [VERTICAL] * 2),
    ]
    cells = cusp_cells + [c for c, _ in nodal]
    blocks = [BlockDatum(k, 9, 0) for k in range(len(cusp_cells))]
    factors = {}
    for offset, (cell, fs) in enumerate(nodal):
        k = len(cusp_cells) + offset
        factors[k] = fs
        blocks.append(BlockDatum(k, 0, product_nodes(fs), tuple([0] * len(fs))))
    return Plan(5, Subdivision(20, cells), blocks, factors)


def plan_nu7() -> Plan:
    """T_42 on a grid of side 6: cusp triangles along the axes, products of lines elsewhere."""
    cells, blocks, factors = [], [], {}

    def add(cell, cusps, fs=None):
        k = len(cells)
        cells.append(cell)
        if fs is None:
            blocks.append(BlockDatum(k, cusps, 0))
        else:
            factors[k] = fs
            blocks.append(BlockDatum(k, 0, product_nodes(fs), tuple([0] * len(fs))))

    for i in range(7):
        for j in range(7 - i):
            x, y = 6 * i, 6 * j
            if i + j == 6:
                if i == 0 or j == 0:
                    add(_tri_up(x, y), 9)
                else:
                    add(_tri_up(x, y), 0, [UNIT] * 6)
            elif i == 0 or j == 0:
                add(_tri_up(x, y), 9)
                add(_tri_down(x, y), 9)
            else:
                add(_square(x, y), 0, [HORIZONTAL] * 6 + [VERTICAL] * 6)
    return Plan(7, Subdivision(42, cells), blocks, factors)


PLANS = {4: plan_nu4, 5: plan_nu5, 7: plan_nu7}


def plan(nu: int) -> Optional[Plan]:
    builder = PLANS.get(nu)
    return builder() if builder else None
