"""Polars, Sylvester resultants and discriminants."""

from __future__ import annotations

from .linalg import poly_det
from .points import PLANE_VARS, SPACE_VARS, ProjPoint
from .poly import RatPoly


def polar(f: RatPoly, center: ProjPoint, order: int = 1) -> RatPoly:
    """Iterated polar ``(sum O_i d/dx_i)^order f`` of a homogeneous form.

    Four-coordinate centers act on forms in (x, y, w, z); three-coordinate
    centers on plane forms in (x, y, w).
    """
    if order not in (1, 2):
        raise ValueError("polar order must be 1 or 2")
    ambient = SPACE_VARS if len(center.coords) == 4 else PLANE_VARS
    stray = set(f.support_vars()) - set(ambient)
    if stray:
        raise ValueError(
            f"dimension mismatch: form uses {sorted(stray)} but center has {len(center.coords)} coordinates"
        )
    if not f.is_homogeneous():
        raise ValueError("polar needs a homogeneous form")
    g = f.with_vars(ambient)
    for _ in range(order):
        acc = RatPoly.constant(0, g.vars)
        for var, c in zip(ambient, center.coords):
            if c:
                acc = acc + g.derivative(var) * c
        g = acc
    return g


def sylvester_matrix(f: RatPoly, g: RatPoly, var: str = "z") -> list:
    """Sylvester matrix of ``f`` and ``g`` as univariate polynomials in ``var``."""
    m, n = f.degree_in(var), g.degree_in(var)
    if m < 1 or n < 1:
        raise ValueError(f"both polynomials need positive degree in {var!r}")
    fc, gc = f.coefficients_in(var), g.coefficients_in(var)
    rest = sorted((set(f.vars) | set(g.vars)) - {var})
    zero = RatPoly.constant(0, rest)

    def coeff(table, k):
        return table[k].with_vars(rest) if k in table else zero

    size = m + n
    rows = []
    for shift in range(n):
        row = [zero] * size
        for i in range(m + 1):
            row[shift + i] = coeff(fc, m - i)
        rows.append(row)
    for shift in range(m):
        row = [zero] * size
        for j in range(n + 1):
            row[shift + j] = coeff(gc, n - j)
        rows.append(row)
    return rows


def resultant(f: RatPoly, g: RatPoly, var: str = "z") -> RatPoly:
    """Determinant of the Sylvester matrix; the result is free of ``var``."""
    return poly_det(sylvester_matrix(f, g, var))


def resultant_z(f: RatPoly, g: RatPoly) -> RatPoly:
    return resultant(f, g, "z")


def discriminant(f: RatPoly, var: str = "z") -> RatPoly:
    """``(-1)^(m(m-1)/2) Res(f, df/dvar) / lc(f)`` with m the degree in ``var``.

    With this sign convention a monic quadratic ``z^2 + p z + q`` has
    discriminant ``p^2 - 4q``.
    """
    m = f.degree_in(var)
    if m < 1:
        raise ValueError(f"polynomial is free of {var!r}")
    if m < 2:
        raise ValueError(f"discriminant needs degree at least 2 in {var!r}, got {m}")
    lead = f.coefficients_in(var)[m]
    if lead.is_zero():
        raise ValueError("vanishing leading coefficient")
    res = resultant(f, f.derivative(var), var)
    sign = -1 if (m * (m - 1) // 2) % 2 else 1
    return res.exact_div(lead) * sign


def discriminant_z(f: RatPoly) -> RatPoly:
    """Discriminant in z.  A homogeneous degree-m form with constant z^m coefficient
    yields a homogeneous form of degree m(m-1) in the remaining variables."""
    if "z" not in f.support_vars():
        raise ValueError("polynomial is free of 'z'")
    m = f.degree_in("z")
    lead = f.coefficients_in("z")[m]
    if not lead.is_constant():
        raise ValueError("leading z-coefficient must be a nonzero constant; normalize first")
    d = discriminant(f, "z")
    if f.is_homogeneous() and f.degree() == m:
        expected = m * (m - 1)
        if not d.is_zero() and (not d.is_homogeneous() or d.degree() != expected):
            raise AssertionError(f"discriminant degree {d.degree()} != {expected}")
    return d
