"""Numerical invariants and admissibility constraints for nodal-cuspidal curves.

A curve class is the triple (d, c, n): degree, number of cusps, number of
nodes.  Everything here is integer arithmetic on such triples and on the
invariants of the surfaces whose generic projections they may be branch
curves of.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

DEFAULT_DEGREE_BOUND = 20


@dataclass(frozen=True, order=True)
class CurveClass:
    d: int
    c: int
    n: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"degree must be positive, got {self.d}")
        if self.c < 0:
            raise ValueError(f"cusp count must be nonnegative, got {self.c}")

    @classmethod
    def from_chi(cls, d: int, c: int, chi: int) -> "CurveClass":
        twice = d * (d - 3) - 2 * c + chi
        if twice % 2:
            raise ValueError("odd Euler characteristic gives a non-integral node count")
        return cls(d, c, twice // 2)

    @property
    def pa(self) -> int:
        """Arithmetic genus of a plane curve of degree d."""
        return (self.d - 1) * (self.d - 2) // 2

    @property
    def g(self) -> int:
        return self.pa - self.c - self.n

    @property
    def chi(self) -> int:
        return 2 - 2 * self.g


@dataclass(frozen=True)
class DualInvariants:
    d_star: int
    c_star: int
    chi_star: int
    n_star: int
    g_star: int

    def as_class(self) -> CurveClass:
        return CurveClass(self.d_star, self.c_star, self.n_star)


def plucker_dual(cc: CurveClass) -> DualInvariants:
    """Invariants of the dual curve; linear in (d, c, chi).

    No sign checks are made here: a negative entry means the class has no
    Plücker dual and is judged by the admissibility constraints.
    """
    d, c, chi = cc.d, cc.c, cc.chi
    d_star = 2 * d - c - chi
    c_star = 3 * d - 2 * c - 3 * chi
    # chi is even, so chi/2 is exact
    n_star = d_star * (d_star - 3) // 2 - c_star + chi // 2
    return DualInvariants(d_star, c_star, chi, n_star, cc.g)


def dual_of_dual(cc: CurveClass) -> tuple:
    """(d, c, chi) after dualizing twice, computed on the linear coordinates."""
    first = plucker_dual(cc)
    d1, c1, chi1 = first.d_star, first.c_star, first.chi_star
    return (2 * d1 - c1 - chi1, 3 * d1 - 2 * c1 - 3 * chi1, chi1)


# constraints


@dataclass(frozen=True)
class Constraint:
    name: str
    tier: int
    inequality: str
    source: str
    test: Callable = field(compare=False, repr=False)
    group: str = ""

    def holds(self, cc: CurveClass, nu: Optional[int] = None) -> bool:
        return bool(self.test(cc, nu))


def _zariski_bound(d: int) -> Fraction:
    beta = (d - 1) // 6
    return Fraction((d - beta) * (d - beta - 3), 2) + 2


def _dual(cc):
    return plucker_dual(cc)


TIER1 = (
    Constraint("nodes_nonneg", 1, "n >= 0", "definition", lambda cc, nu: cc.n >= 0),
    Constraint("genus_nonneg", 1, "g >= 0", "genus formula", lambda cc, nu: cc.g >= 0),
    Constraint("dual_degree_nonneg", 1, "2d - c - chi >= 0", "Plücker formulas",
               lambda cc, nu: _dual(cc).d_star >= 0, group="dual"),
    Constraint("dual_cusps_nonneg", 1, "3d - 2c - 3chi >= 0", "Plücker formulas",
               lambda cc, nu: _dual(cc).c_star >= 0, group="dual"),
    Constraint("dual_nodes_nonneg", 1, "d*(d*-3)/2 - c* + chi/2 >= 0", "Plücker formulas",
               lambda cc, nu: _dual(cc).n_star >= 0, group="dual"),
    Constraint("zariski", 1, "c < (d-b)(d-b-3)/2 + 2, b = floor((d-1)/6)", "Zariski",
               lambda cc, nu: cc.c < _zariski_bound(cc.d)),
    Constraint("polar_bound", 1, "2c + n <= (d-1)^2", "Bezout on two polars",
               lambda cc, nu: 2 * cc.c + cc.n <= (cc.d - 1) ** 2),
)

TIER2 = (
    Constraint("even_degree", 2, "d even", "branch curves of generic covers",
               lambda cc, nu: cc.d % 2 == 0),
    # smooth conics are branch curves, so the bound only applies to singular curves
    Constraint("nori", 2, "6c + 2n >= d^2 (singular curves)", "Nori",
               lambda cc, nu: cc.c + cc.n == 0 or 6 * cc.c + 2 * cc.n >= cc.d ** 2),
    Constraint("shimada", 2, "2n < d^2 - 5d + 8", "Shimada",
               lambda cc, nu: 2 * cc.n < cc.d ** 2 - 5 * cc.d + 8),
    Constraint("cusps_mod3", 2, "c = 0 mod 3", "divisibility of the cusp class",
               lambda cc, nu: cc.c % 3 == 0),
    Constraint("nodes_mod4", 2, "n = 0 mod 4", "divisibility of the node class",
               lambda cc, nu: cc.n % 4 == 0),
    Constraint("nemirovski", 2, "15d - 5chi - 6c > 0", "Nemirovski",
               lambda cc, nu: 15 * cc.d - 5 * cc.chi - 6 * cc.c > 0),
    Constraint("degree_vs_nu", 2, "d >= 2nu - 2 (nu given)", "generic projection degree bound",
               lambda cc, nu: nu is None or cc.d >= 2 * nu - 2),
)

BOGOMOLOV = Constraint("bogomolov", 2, "5chi + 6c - 9d <= 0 (general type)",
                       "Bogomolov-Miyaoka-Yau", lambda cc, nu: 5 * cc.chi + 6 * cc.c - 9 * cc.d <= 0)

CONSTRAINT_NAMES = tuple(c.name for c in TIER1 + TIER2) + (BOGOMOLOV.name,)


@dataclass
class ConstraintReport:
    curve: CurveClass
    tier1_violations: list
    tier2_violations: Optional[list]
    results: dict

    @property
    def tier1_ok(self) -> bool:
        return not self.tier1_violations

    @property
    def admissible(self) -> bool:
        return self.tier1_ok and self.tier2_violations is not None and not self.tier2_violations


def select_tier1(dual_realizability: bool = True) -> tuple:
    return tuple(c for c in TIER1 if dual_realizability or c.group != "dual")


def select_tier2(general_type: bool = False) -> tuple:
    return TIER2 + ((BOGOMOLOV,) if general_type else ())


def _evaluate(constraints: Iterable[Constraint], cc: CurveClass, nu) -> dict:
    return {c.name: c.holds(cc, nu) for c in constraints}


def nodal_cuspidal_admissible(cc: CurveClass, dual_realizability: bool = True) -> ConstraintReport:
    results = _evaluate(select_tier1(dual_realizability), cc, None)
    failed = [name for name, ok in results.items() if not ok]
    return ConstraintReport(cc, failed, None, results)


def branch_admissible(cc: CurveClass, nu: Optional[int] = None, general_type: bool = False,
                      dual_realizability: bool = True) -> ConstraintReport:
    """Both tiers.  Raises ValueError when the class is not even a nodal-cuspidal class."""
    report = nodal_cuspidal_admissible(cc, dual_realizability)
    if not report.tier1_ok:
        raise ValueError(f"{cc} fails nodal-cuspidal constraints: {', '.join(report.tier1_violations)}")
    results = _evaluate(select_tier2(general_type), cc, nu)
    report.results.update(results)
    report.tier2_violations = [name for name, ok in results.items() if not ok]
    return report


def full_report(cc: CurveClass, nu: Optional[int] = None, general_type: bool = False,
                dual_realizability: bool = True) -> ConstraintReport:
    """Like branch_admissible, but tier 2 is left unevaluated (None) when tier 1 fails."""
    report = nodal_cuspidal_admissible(cc, dual_realizability)
    if report.tier1_ok:
        return branch_admissible(cc, nu, general_type, dual_realizability)
    return report


def enumerate_candidates(d: int, bound: int = DEFAULT_DEGREE_BOUND,
                         constraints: Optional[Sequence[Constraint]] = None) -> list:
    """All (c, n) with c + n > 0 passing every constraint, in lexicographic order.

    Smooth classes (0, 0) are left out: the enumeration is of singular
    branch curves.  ``constraints`` defaults to both tiers with dual
    realizability and without Bogomolov.
    """
    if d % 2:
        raise ValueError(f"branch curves have even degree, got {d}")
    if d < 2:
        raise ValueError("degree must be at least 2")
    if d > bound:
        raise ValueError(f"degree {d} exceeds the enumeration bound {bound}")
    if d > DEFAULT_DEGREE_BOUND:
        warnings.warn(f"constraint completeness is not claimed beyond degree {DEFAULT_DEGREE_BOUND}")
    active = tuple(constraints) if constraints is not None else select_tier1() + select_tier2()
    pa = (d - 1) * (d - 2) // 2
    out = []
    for c in range(pa + 1):
        for n in range(pa + 1):
            if c == 0 and n == 0:
                continue
            cc = CurveClass(d, c, n)
            if all(con.holds(cc, None) for con in active):
                out.append((c, n))
    return out


# surfaces


def salmon_counts(nu: int) -> CurveClass:
    """Degree, cusps and nodes of the branch curve of a generic smooth degree-nu surface."""
    return CurveClass(nu * (nu - 1), nu * (nu - 1) * (nu - 2), nu * (nu - 1) * (nu - 2) * (nu - 3) // 2)


@dataclass(frozen=True)
class SmoothBranch:
    cc: CurveClass
    a: int
    identities: dict


def smooth_surface_branch(nu: int) -> SmoothBranch:
    if nu < 2:
        raise ValueError("surface degree must be at least 2")
    cc = salmon_counts(nu)
    a = (nu - 1) * (nu - 2)
    d, c, n = cc.d, cc.c, cc.n
    identities = {
        "c = (nu-2) d": c == (nu - 2) * d,
        "2n + 3c = nu(nu-2) d": 2 * n + 3 * c == nu * (nu - 2) * d,
        "2n + 2c = a d": 2 * n + 2 * c == a * d,
        "n + c = nu(nu-1)^2(nu-2)/2": 2 * (n + c) == nu * (nu - 1) ** 2 * (nu - 2),
    }
    failed = [k for k, ok in identities.items() if not ok]
    if failed:
        raise AssertionError(f"degree identities fail for nu={nu}: {failed}")
    return SmoothBranch(cc, a, identities)


@dataclass(frozen=True)
class ChernPair:
    c1sq: int
    c2: int


def chern_from_branch(nu: int, cc: CurveClass) -> ChernPair:
    """Chern numbers of a surface of degree nu with the given branch curve class."""
    if cc.d % 2:
        raise ValueError("branch curve degree must be even")
    twice_c1sq = 18 * nu - 9 * cc.d - cc.chi
    if twice_c1sq % 2:
        raise ValueError("non-integral c1^2")
    return ChernPair(twice_c1sq // 2, 3 * nu - cc.chi - cc.c)


def invert_chern(c1sq: int, c2: int, nu: int, d: int) -> tuple:
    """(c, n) of the branch curve from the Chern numbers, nu and d."""
    if d % 2:
        raise ValueError("non-integral node count for odd d")
    n = -3 * c1sq + c2 + 24 * nu + d * d // 2 - 15 * d
    c = 2 * c1sq - c2 - 15 * nu + 9 * d
    return c, n


@dataclass(frozen=True)
class OrdinarySurfaceData:
    """Surface of degree nu with ordinary singularities.

    ``e`` is the degree of the double curve, ``e_star`` the degree of the
    dual of its plane image, ``t`` the number of triple points and
    ``g_minus_u`` the geometric genus of the double curve minus its number
    of components.
    """

    nu: int
    e: int
    e_star: int
    t: int
    g_minus_u: int

    def __post_init__(self):
        if self.nu < 3:
            raise ValueError("surface degree must be at least 3")
        if self.e < 0 or self.e_star < 0 or self.t < 0:
            raise ValueError("e, e_star and t must be nonnegative")
        if self.e > (self.nu - 1) * (self.nu - 2) // 2:
            raise ValueError(f"double curve degree {self.e} out of range for nu={self.nu}")


@dataclass(frozen=True)
class OrdinaryInvariants:
    d: int
    cc: CurveClass
    chern: ChernPair
    pinch: int


def ordinary_invariants(data: OrdinarySurfaceData) -> OrdinaryInvariants:
    nu, e, es, t, gu = data.nu, data.e, data.e_star, data.t, data.g_minus_u
    d = nu * (nu - 1) - 2 * e
    if not 2 * (nu - 1) <= d <= nu * (nu - 1):
        raise AssertionError(f"branch degree {d} outside [{2 * (nu - 1)}, {nu * (nu - 1)}]")
    c = nu * (nu - 1) * (nu - 2) - 3 * e * (nu - 2) + 3 * t
    n = (nu * (nu - 1) * (nu - 2) * (nu - 3) // 2 - 2 * e * (nu - 2) * (nu - 3)
         - 2 * es - 12 * t + 2 * e * (e - 1))
    if c < 0 or n < 0:
        raise ValueError(f"inconsistent data: computed c={c}, n={n}")
    c1sq = nu * (nu - 4) ** 2 - 5 * nu * e + 24 * e + 4 * gu + 9 * t
    c2 = nu * nu * (nu - 4) + 6 * nu + 24 * e - 7 * nu * e + 8 * gu + 15 * t
    pinch = 2 * e * (nu - 4) - 4 * gu - 6 * t
    return OrdinaryInvariants(d, CurveClass(d, c, n), ChernPair(c1sq, c2), pinch)


@dataclass(frozen=True)
class OrdinarySolution:
    g_minus_u: int
    t: int
    pinch: int

    @property
    def contradiction(self) -> bool:
        """A surface with a nonempty double curve has at least one pinch point."""
        return self.pinch <= 0


def solve_ordinary(nu: int, e: int, chern: ChernPair) -> OrdinarySolution:
    """Recover (g - u, t) and the pinch count from the Chern numbers."""
    r1 = chern.c1sq - nu * (nu - 4) ** 2 + 5 * nu * e - 24 * e
    r2 = chern.c2 - nu * nu * (nu - 4) - 6 * nu - 24 * e + 7 * nu * e
    # 4X + 9t = r1, 8X + 15t = r2; determinant -12
    det = 4 * 15 - 9 * 8
    x_num = r1 * 15 - 9 * r2
    t_num = 4 * r2 - 8 * r1
    if x_num % det or t_num % det:
        raise ValueError(f"no integral solution: X={Fraction(x_num, det)}, t={Fraction(t_num, det)}")
    x, t = x_num // det, t_num // det
    if t < 0:
        raise ValueError(f"negative triple point count t={t}")
    return OrdinarySolution(x, t, 2 * e * (nu - 4) - 4 * x - 6 * t)


@dataclass(frozen=True)
class DimensionReport:
    nu: int
    dim_S: int
    dim_B3: int
    vdim: int
    delta_a: int
    delta_a1: int


def dimension_report(nu: int) -> DimensionReport:
    if nu < 3:
        raise ValueError("surface degree must be at least 3")
    dim_s = (nu + 1) * (nu + 2) * (nu + 3) // 6 - 1
    cc = salmon_counts(nu)
    vdim = cc.d * (cc.d + 3) // 2 - cc.n - 2 * cc.c
    delta_a = (nu - 1) * (nu - 2) * (2 * nu - 5) // 2
    delta_a1 = (nu - 3) * (2 * nu * nu - 7 * nu + 4) // 2
    return DimensionReport(nu, dim_s, dim_s - 4, vdim, delta_a, delta_a1)


def bisecant_count(mu: int, nu2: int) -> int:
    """Bisecants through a general point of a complete intersection of degrees mu, nu2."""
    if mu < 1 or nu2 < 1:
        raise ValueError("degrees must be positive")
    return mu * nu2 * (mu - 1) * (nu2 - 1) // 2
