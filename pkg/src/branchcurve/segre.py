"""Branch curves of surfaces under projection from (0:0:0:1), and the adjoint-curve criterion.

A smooth surface of degree nu has a branch curve of degree nu(nu-1) whose
nodes and cusps form a 0-cycle xi.  The criterion checked by
``verify_segre`` asks for the right node and cusp counts, a unique curve L
of degree a = (nu-1)(nu-2) through xi, and a curve L1 of degree a+1
through xi whose tangent differs from that of L at every point of xi.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .algebra.linsys import linear_system
from .algebra.points import PLANE_VARS, SPACE_VARS, ProjPoint
from .algebra.poly import RatPoly
from .algebra.resultant import discriminant_z, polar, resultant
from .algebra.singularity import (
    Cusp,
    Node,
    Smooth,
    classify_singularity,
    gradient,
    intersection_multiplicity,
    proportional,
)
from .geography import salmon_counts

CENTER = ProjPoint((0, 0, 0, 1))
KINDS = {"node": Node, "cusp": Cusp, "plain": Smooth}


@dataclass(frozen=True)
class CyclePoint:
    point: ProjPoint
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown point kind {self.kind!r}; expected one of {sorted(KINDS)}")
        if len(self.point.coords) != 3:
            raise ValueError(f"{self.point} is not a plane point")


class PointCycle:
    """Distinct plane points, each tagged node, cusp or plain."""

    def __init__(self, entries: Iterable):
        items = []
        for entry in entries:
            if not isinstance(entry, CyclePoint):
                p, kind = entry
                entry = CyclePoint(p if isinstance(p, ProjPoint) else ProjPoint(p), kind)
            items.append(entry)
        points = [e.point for e in items]
        if len(set(points)) != len(points):
            raise ValueError("points of a cycle must be pairwise distinct")
        self.entries = tuple(items)

    @property
    def points(self) -> list:
        return [e.point for e in self.entries]

    def count(self, kind: str) -> int:
        return sum(1 for e in self.entries if e.kind == kind)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, PointCycle):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return f"PointCycle({[(e.point, e.kind) for e in self.entries]})"


@dataclass(frozen=True)
class SurfaceInstance:
    f: RatPoly

    def __post_init__(self):
        f = self.f
        stray = set(f.support_vars()) - set(SPACE_VARS)
        if stray:
            raise ValueError(f"surface equation uses unexpected variables {sorted(stray)}")
        if f.is_zero() or not f.is_homogeneous():
            raise ValueError("surface equation must be a nonzero homogeneous form")
        nu = f.degree()
        if f.with_vars(SPACE_VARS).coefficient({"z": nu}) == 0:
            raise ValueError("the projection center (0:0:0:1) lies on the surface")
        object.__setattr__(self, "f", f.with_vars(SPACE_VARS))

    @property
    def nu(self) -> int:
        return self.f.degree()

    @property
    def center(self) -> ProjPoint:
        return CENTER


def branch_curve(s: SurfaceInstance) -> RatPoly:
    """Discriminant of the surface equation in z, a plane form of degree nu(nu-1)."""
    B = discriminant_z(s.f).with_vars(PLANE_VARS)
    nu = s.nu
    if B.is_zero() or B.degree() != nu * (nu - 1):
        raise AssertionError(f"branch curve has degree {B.degree()}, expected {nu * (nu - 1)}")
    return B.drop_unused(keep=PLANE_VARS)


def cusp_candidates(s: SurfaceInstance, candidates: Sequence[ProjPoint]) -> list:
    """Space points on the surface, its first polar and its second polar."""
    forms = (s.f, polar(s.f, CENTER, 1), polar(s.f, CENTER, 2))
    out = []
    for p in candidates:
        if len(p.coords) != 4:
            raise ValueError(f"{p} is not a space point")
        values = p.as_dict()
        if all(g.evaluate(values) == 0 for g in forms):
            out.append(p)
    return out


# criterion


@dataclass
class SegreReport:
    nu: int
    nodes: int
    cusps: int
    expected: tuple
    counts_ok: bool
    h0_a: int
    L: Optional[RatPoly]
    L_unique: bool
    h0_a1: int
    L1: Optional[RatPoly]
    tangents_separated: dict
    l1_status: str
    candidates_tried: int
    reasons: list = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return (self.counts_ok and self.L_unique and self.l1_status == "verified"
                and all(self.tangents_separated.values()))

    @property
    def status(self) -> str:
        if self.verdict:
            return "PASS"
        if self.l1_status == "not verified" and self.counts_ok and self.L_unique:
            return "NOT VERIFIED"
        return "FAIL"


def _grid(size: int, values: Sequence[int] = (1, -1, 2, -2)) -> list:
    """Nonzero coefficient vectors up to sign, ordered by height then support size."""
    out = []
    choices = (0,) + tuple(values)
    for vec in itertools.product(choices, repeat=size):
        nz = [v for v in vec if v]
        if not nz or nz[0] < 0:
            continue
        out.append(vec)
    out.sort(key=lambda v: (max(abs(c) for c in v), sum(1 for c in v if c), [abs(c) for c in v], v))
    return out


def verify_segre(B: RatPoly, xi: PointCycle, nu: int, l1_hints: Sequence[RatPoly] = (),
                 max_candidates: int = 20000) -> SegreReport:
    """Check the adjoint-curve criterion for B with singular 0-cycle xi."""
    expected_degree = nu * (nu - 1)
    if B.is_zero() or not B.is_homogeneous() or B.degree() != expected_degree:
        raise ValueError(f"curve degree {B.degree()} does not match nu(nu-1) = {expected_degree}")
    B = B.with_vars(PLANE_VARS)
    for e in xi:
        if not e.point.on(B):
            raise ValueError(f"{e.point} is not on the curve")
        kind = classify_singularity(B, e.point)
        if kind != KINDS[e.kind]:
            raise ValueError(f"{e.point} is declared {e.kind} but classifies as {kind!r}")

    salmon = salmon_counts(nu)
    nodes, cusps = xi.count("node"), xi.count("cusp")
    counts_ok = nodes == salmon.n and cusps == salmon.c
    reasons = []
    if not counts_ok:
        reasons.append(f"expected {salmon.n} nodes and {salmon.c} cusps, found {nodes} and {cusps}")

    pts = xi.points
    a = (nu - 1) * (nu - 2)
    ls_a = linear_system(pts, a)
    L = ls_a.basis[0] if ls_a.h0 == 1 else None
    if ls_a.h0 == 0:
        reasons.append(f"no curve of degree {a} passes through the cycle")
    elif ls_a.h0 > 1:
        reasons.append(f"curves of degree {a} through the cycle form a {ls_a.h0}-dimensional space")
    ls_a1 = linear_system(pts, a + 1)

    report = SegreReport(nu, nodes, cusps, (salmon.n, salmon.c), counts_ok, ls_a.h0, L,
                         ls_a.h0 == 1, ls_a1.h0, None, {p: False for p in pts}, "", 0, reasons)
    if L is None or ls_a1.h0 == 0:
        report.l1_status = "impossible"
        if ls_a1.h0 == 0:
            reasons.append(f"no curve of degree {a + 1} passes through the cycle")
        return report

    grad_L = [gradient(L, p) for p in pts]
    singular = [p for p, g in zip(pts, grad_L) if not any(g)]
    if singular:
        report.l1_status = "failed"
        reasons.append(f"L is singular at {singular}")
        return report

    def separated(grads):
        return [any(g) and not proportional(g, gl) for g, gl in zip(grads, grad_L)]

    best, best_flags, tried = None, None, 0
    for h in l1_hints:
        h = h.with_vars(PLANE_VARS)
        if h.degree() != a + 1 or not all(p.on(h) for p in pts):
            reasons.append(f"hint {h} is not a degree-{a + 1} curve through the cycle")
            continue
        tried += 1
        flags = separated([gradient(h, p) for p in pts])
        if best_flags is None or sum(flags) > sum(best_flags):
            best, best_flags = h, flags
        if all(flags):
            break

    if best_flags is None or not all(best_flags):
        # gradients are linear in the coefficients, so precompute them per basis vector
        basis = ls_a1.basis
        basis_grads = [[gradient(q, p) for p in pts] for q in basis]
        for vec in _grid(len(basis)):
            if tried >= max_candidates:
                break
            tried += 1
            grads = [
                tuple(sum(c * bg[i][k] for c, bg in zip(vec, basis_grads) if c) for k in range(3))
                for i in range(len(pts))
            ]
            flags = separated(grads)
            if best_flags is None or sum(flags) > sum(best_flags):
                best = sum((q * c for c, q in zip(vec, basis) if c), RatPoly.constant(0, PLANE_VARS))
                best_flags = flags
            if all(flags):
                break

    report.candidates_tried = tried
    if best_flags is not None:
        report.tangents_separated = dict(zip(pts, best_flags))
    if best_flags is not None and all(best_flags):
        report.L1 = best.normalized()
        report.l1_status = "verified"
    else:
        report.l1_status = "not verified"
        reasons.append(f"no L1 with separated tangents among {tried} candidates")
    return report


def strict_tangency(curve: RatPoly, B: RatPoly, points: Sequence[ProjPoint]) -> dict:
    """Intersection multiplicity of a curve smooth at each point with B there."""
    return {p: intersection_multiplicity(curve, B, p) for p in points}


# the cubic-surface construction


@dataclass
class CubicPipelineResult:
    surface: SurfaceInstance
    B: RatPoly
    xi: PointCycle
    adjoint_conic: RatPoly
    report: SegreReport


def cubic_surface(a: RatPoly, b: RatPoly) -> SurfaceInstance:
    """The cubic surface z^3 - 3az + b."""
    z = RatPoly.gens("z")[0]
    return SurfaceInstance(z ** 3 - a * z * 3 + b)


def cubic_pipeline(a: RatPoly, b: RatPoly, points: Sequence[ProjPoint]) -> CubicPipelineResult:
    """Build the branch curve of z^3 - 3az + b and check the criterion at the six points a = b = 0."""
    a, b = a.with_vars(PLANE_VARS), b.with_vars(PLANE_VARS)
    if not a.is_homogeneous() or a.degree() != 2 or not b.is_homogeneous() or b.degree() != 3:
        raise ValueError("a must be a conic and b a cubic")
    pts = list(points)
    if len(pts) != 6 or len(set(pts)) != 6:
        raise ValueError("expected six distinct points")
    for p in pts:
        if not (p.on(a) and p.on(b)):
            raise ValueError(f"{p} is not a common zero of a and b")
        ga, gb = gradient(a, p), gradient(b, p)
        if not any(ga) or not any(gb) or proportional(ga, gb):
            raise ValueError(f"a and b are not transversal at {p}")
    # six transversal intersections exhaust the conic-cubic intersection

    surface = cubic_surface(a, b)
    B = branch_curve(surface)
    if not B.is_proportional(b * b - a ** 3 * 4):
        raise AssertionError("branch curve is not proportional to b^2 - 4a^3")
    lifted = [ProjPoint(p.coords + (0,)) for p in pts]
    if cusp_candidates(surface, lifted) != lifted:
        raise AssertionError("lifted points are not on the surface and both polars")
    for p in pts:
        kind = classify_singularity(B, p)
        if kind != Cusp:
            raise AssertionError(f"{p} classifies as {kind!r}, not a cusp")
    conics = linear_system(pts, 2)
    if conics.h0 != 1 or not conics.basis[0].is_proportional(a):
        raise AssertionError("the six cusps do not lie on a unique conic proportional to a")
    xi = PointCycle((p, "cusp") for p in pts)
    report = verify_segre(B, xi, 3, l1_hints=[b])
    return CubicPipelineResult(surface, B, xi, conics.basis[0], report)


# bisecants


def _shift(u: RatPoly, prime: Sequence[str], other: Sequence[str]) -> RatPoly:
    """u(p' + t p) with p' in the variables ``prime`` and p in ``other``."""
    t = RatPoly.gens("t")[0]
    gens = dict(zip(other, RatPoly.gens(*other)))
    mapping = {}
    for v, o in zip(prime, other):
        mapping[v] = RatPoly.gens(v)[0] + gens[o] * t
    return u.with_vars(prime).substitute(mapping)


BISECANT_POINT_VARS = ("px", "py", "pw", "pz")


def bisecant_resultant(u: RatPoly, v: RatPoly) -> RatPoly:
    """Resultant in t of (u(p'+tp) - u(p'))/t and (v(p'+tp) - v(p'))/t.

    p' uses the variables (x, y, w, z) and p uses BISECANT_POINT_VARS.
    """
    for g in (u, v):
        if not g.is_homogeneous() or set(g.support_vars()) - set(SPACE_VARS):
            raise ValueError("expected homogeneous forms in x, y, w, z")
        if g.degree() < 2:
            raise ValueError("both forms need degree at least 2")
    polys = []
    for g in (u, v):
        shifted = _shift(g, SPACE_VARS, BISECANT_POINT_VARS)
        diff = shifted - g.with_vars(shifted.vars)
        t = RatPoly.gens("t")[0]
        polys.append(diff.exact_div(t))
    return resultant(polys[0], polys[1], "t")


def bidegree(R: RatPoly, first: Sequence[str] = SPACE_VARS,
             second: Sequence[str] = BISECANT_POINT_VARS) -> tuple:
    """(deg in first, deg in second) if R is bihomogeneous, else raise."""
    degs = set()
    for exps in R.terms:
        by_var = dict(zip(R.vars, exps))
        degs.add((sum(by_var.get(v, 0) for v in first), sum(by_var.get(v, 0) for v in second)))
    if len(degs) != 1:
        raise ValueError(f"not bihomogeneous: degrees {sorted(degs)}")
    return degs.pop()
