"""Local analysis of plane curves at rational points."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .points import ProjPoint
from .poly import RatPoly, as_fraction


@dataclass(frozen=True)
class SingularityKind:
    name: str
    multiplicity: int
    note: str = ""

    def __repr__(self):
        if self.name == "other":
            return f"Other({self.multiplicity}, {self.note!r})"
        return self.name.capitalize()


Smooth = SingularityKind("smooth", 1)
Node = SingularityKind("node", 2)
Cusp = SingularityKind("cusp", 2)


def Other(multiplicity: int, note: str) -> SingularityKind:
    return SingularityKind("other", multiplicity, note)


def local_equation(f: RatPoly, p) -> RatPoly:
    """Move ``p`` to the origin of an affine chart.

    Forms involving ``w`` are treated as homogeneous in (x, y, w) and
    dehomogenized at a nonzero coordinate of ``p`` (w preferred), unless
    ``p`` is an affine pair.  Everything else is affine in (x, y), with ``p``
    an affine pair or a plane point with nonzero last coordinate.  The
    result is a polynomial in the two chart variables.
    """
    if "w" in f.vars and (isinstance(p, ProjPoint) or "w" in f.support_vars()):
        if not isinstance(p, ProjPoint) or len(p.coords) != 3:
            raise ValueError("a homogeneous plane form needs a plane point")
        stray = set(f.support_vars()) - {"x", "y", "w"}
        if stray:
            raise ValueError(f"unexpected variables {sorted(stray)}")
        if not f.is_homogeneous():
            raise ValueError("form in (x, y, w) is not homogeneous")
        coords = dict(zip(("x", "y", "w"), p.coords))
        chart = next(v for v in ("w", "x", "y") if coords[v])
        scale = coords[chart]
        rest = [v for v in ("x", "y", "w") if v != chart]
        g = f.with_vars(("x", "y", "w"))
        gens = dict(zip(("x", "y", "w"), RatPoly.gens("x", "y", "w")))
        subs = {chart: RatPoly.constant(1, ("x", "y", "w"))}
        for v in rest:
            subs[v] = gens[v] + coords[v] / scale
        return g.substitute(subs).drop_unused(keep=rest)
    stray = set(f.support_vars()) - {"x", "y"}
    if stray:
        raise ValueError(f"affine curves must be in x, y; found {sorted(stray)}")
    if isinstance(p, ProjPoint):
        if len(p.coords) != 3:
            raise ValueError("expected a plane point")
        if p.coords[2] == 0:
            raise ValueError("point at infinity is not finite-representable in the affine chart")
        px, py = p.coords[0] / p.coords[2], p.coords[1] / p.coords[2]
    else:
        px, py = (as_fraction(c) for c in p)
    x, y = RatPoly.gens("x", "y")
    g = f.with_vars(("x", "y")).substitute({"x": x + px, "y": y + py})
    return g.drop_unused(keep=("x", "y"))


def _quadratic_coeffs(q: RatPoly, u: str, v: str) -> tuple:
    return (q.coefficient({u: 2}), q.coefficient({u: 1, v: 1}), q.coefficient({v: 2}))


def classify_singularity(f: RatPoly, p) -> SingularityKind:
    """Classify the point ``p`` of the curve ``f = 0`` as smooth, node, cusp or other.

    A double point is a node when its tangent cone has nonzero discriminant
    (two distinct tangents over the algebraic closure) and a cusp when the
    tangent cone is a double line and the cubic term does not vanish along
    that line.
    """
    if f.is_zero():
        raise ValueError("zero polynomial does not define a curve")
    g = local_equation(f, p)
    if g.coefficient((0, 0)) != 0:
        raise ValueError(f"point {p} is not on the curve")
    u, v = g.vars
    m = g.lowest_degree()
    if m == 1:
        return Smooth
    if m > 2:
        return Other(m, f"multiplicity {m}")
    A, B, C = _quadratic_coeffs(g.homogeneous_part(2), u, v)
    if B * B - 4 * A * C != 0:
        return Node
    # tangent cone is a double line; take a direction vector along it
    direction = (-B, 2 * A) if A else (Fraction(1), Fraction(0))
    cubic = g.homogeneous_part(3)
    if cubic.evaluate(dict(zip((u, v), direction))) != 0:
        return Cusp
    return Other(2, "tangent-cone double line, x^3 coefficient zero")


def _series_mul(a: list, b: list, n: int) -> list:
    out = [Fraction(0)] * n
    for i, ai in enumerate(a[:n]):
        if ai:
            for j, bj in enumerate(b[: n - i]):
                out[i + j] += ai * bj
    return out


def _compose(g: RatPoly, u: str, v: str, param_var: str, series: list, n: int) -> list:
    """Truncated series of g(t, phi(t)) (or g(phi(t), t)) in t."""
    t = [Fraction(0), Fraction(1)] + [Fraction(0)] * (n - 2)
    phi = list(series) + [Fraction(0)] * (n - len(series))
    u_vals, v_vals = (t, phi) if param_var == u else (phi, t)
    powers_u = {0: [Fraction(1)] + [Fraction(0)] * (n - 1)}
    powers_v = {0: [Fraction(1)] + [Fraction(0)] * (n - 1)}

    def pw(cache, base, k):
        if k not in cache:
            cache[k] = _series_mul(pw(cache, base, k - 1), base, n)
        return cache[k]

    acc = [Fraction(0)] * n
    iu, iv = g.vars.index(u), g.vars.index(v)
    for exps, c in g.terms.items():
        term = _series_mul(pw(powers_u, u_vals, exps[iu]), pw(powers_v, v_vals, exps[iv]), n)
        for k in range(n):
            acc[k] += c * term[k]
    return acc


def intersection_multiplicity(smooth: RatPoly, f: RatPoly, p, precision: int = 24):
    """Intersection multiplicity at ``p`` of a curve smooth there with ``f = 0``.

    The smooth curve is parametrized by a truncated power series; the order
    of ``f`` along it is the multiplicity.  Returns None when the order is at
    least ``precision`` (e.g. a common component).
    """
    g = local_equation(smooth, p)
    h = local_equation(f, p)
    if g.coefficient((0, 0)) != 0:
        raise ValueError("point is not on the smooth curve")
    if h.coefficient((0, 0)) != 0:
        return 0
    u, v = g.vars
    h = h.with_vars(g.vars)
    gu, gv = g.coefficient({u: 1}), g.coefficient({v: 1})
    if gu == 0 and gv == 0:
        raise ValueError("first curve is singular at the point")
    param, slope = (u, gv) if gv else (v, gu)
    n = precision + 1
    series = [Fraction(0)] * n
    # fixed-point iteration gains one order of accuracy per step
    for _ in range(n):
        residual = _compose(g, u, v, param, series, n)
        if not any(residual):
            break
        series = [s - r / slope for s, r in zip(series, residual)]
    values = _compose(h, u, v, param, series, n)
    for k, c in enumerate(values[:precision]):
        if c:
            return k
    return None


def gradient(f: RatPoly, p: ProjPoint, variables: Sequence[str] = ("x", "y", "w")) -> tuple:
    g = f.with_vars(variables)
    values = dict(zip(variables, p.coords))
    return tuple(g.derivative(v).evaluate(values) for v in variables)


def proportional(u: Sequence, v: Sequence) -> bool:
    """True when the vectors are linearly dependent."""
    n = len(u)
    return all(u[i] * v[j] == u[j] * v[i] for i in range(n) for j in range(i + 1, n))
