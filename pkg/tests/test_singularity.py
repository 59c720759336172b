from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from branchcurve.algebra.linsys import linear_system, linear_system_dim, monomials
from branchcurve.algebra.points import point
from branchcurve.algebra.poly import RatPoly
from branchcurve.algebra.singularity import (
    Cusp,
    Node,
    Other,
    Smooth,
    classify_singularity,
    intersection_multiplicity,
)

x, y, w = RatPoly.gens("x", "y", "w")
ORIGIN = (0, 0)


def test_local_models():
    assert classify_singularity(x * y, ORIGIN) == Node
    assert classify_singularity(y ** 2 - x ** 3, ORIGIN) == Cusp
    assert classify_singularity(y ** 2 - x ** 5, ORIGIN) == Other(2, "tangent-cone double line, x^3 coefficient zero")
    assert classify_singularity(y - x ** 2, ORIGIN) == Smooth


def test_node_with_complex_tangents_is_a_node():
    # x^2 + y^2 has distinct tangents over the algebraic closure
    assert classify_singularity(x ** 2 + y ** 2 + x ** 3, ORIGIN) == Node


def test_triple_point_is_other():
    kind = classify_singularity(x ** 3 - y ** 3 + x ** 4, ORIGIN)
    assert kind.name == "other" and kind.multiplicity == 3


def test_node_and_cusp_have_multiplicity_two():
    assert Node.multiplicity == Cusp.multiplicity == 2


def test_point_off_curve_is_an_error():
    with pytest.raises(ValueError):
        classify_singularity(x * y - 1, ORIGIN)


def test_point_at_infinity_in_affine_chart_is_an_error():
    u, v = RatPoly.gens("x", "y")
    with pytest.raises(ValueError):
        classify_singularity(u * v, point(1, 0, 0))


def test_homogeneous_input_uses_a_chart():
    cusp = y ** 2 * w - x ** 3
    assert classify_singularity(cusp, point(0, 0, 1)) == Cusp
    assert classify_singularity(cusp, point(0, 1, 0)) == Smooth
    nodal = y ** 2 * w - x ** 2 * (x + w)
    assert classify_singularity(nodal, point(0, 0, 1)) == Node


MODELS = [(x * y + y ** 3, Node), (y ** 2 - x ** 3 + x * y ** 2, Cusp), (y ** 2 - x ** 5, None)]


invertible = st.tuples(*[st.integers(-3, 3)] * 4, st.integers(1, 2)).filter(
    lambda t: t[0] * t[3] != t[1] * t[2] * t[4]).map(
    lambda t: [[Fraction(t[0], t[4]), Fraction(t[1])], [Fraction(t[2]), Fraction(t[3])]])


@given(invertible, st.integers(-2, 2), st.integers(-2, 2))
@settings(max_examples=40, deadline=None)
def test_classification_invariant_under_linear_change(m, px, py):
    for f, _ in MODELS:
        base = classify_singularity(f, ORIGIN)
        g = f.substitute({"x": x * m[0][0] + y * m[0][1] - px * m[0][0] - py * m[0][1],
                          "y": x * m[1][0] + y * m[1][1] - px * m[1][0] - py * m[1][1]})
        assert classify_singularity(g, (px, py)) == base


def test_intersection_multiplicity():
    cusp = y ** 2 - x ** 3
    assert intersection_multiplicity(y, cusp, ORIGIN) == 3  # tangent line
    assert intersection_multiplicity(x, cusp, ORIGIN) == 2
    assert intersection_multiplicity(y - x, x * y, ORIGIN) == 2


# linear systems

CONIC = w ** 2 - x * y
SIX = [point(1, t * t, t) for t in (0, 1, -1, 2, -2, 3)]


def test_six_points_on_a_conic():
    assert linear_system_dim(SIX, 2) == (1, 0, 1)
    assert linear_system(SIX, 2).basis[0].is_proportional(CONIC)
    assert linear_system_dim(SIX, 3) == (4, 4, 0)


def test_cubics_through_six_points_contain_the_conic_multiples():
    basis = linear_system(SIX, 3).basis
    for mult in (x, y, w):
        f = CONIC * mult
        assert all(p.on(f) for p in SIX)
    assert len(basis) == 4


def test_empty_cycle():
    for m in range(5):
        assert linear_system_dim([], m)[0] == (m + 1) * (m + 2) // 2


def test_general_position_points_impose_independent_conditions():
    pts = [point(1, 0, 0), point(0, 1, 0), point(0, 0, 1), point(1, 1, 1), point(1, 2, 3), point(2, -1, 5)]
    assert linear_system_dim(pts, 2)[0] == 0


def test_duplicate_points_rejected():
    with pytest.raises(ValueError):
        linear_system([point(1, 2, 3), point(2, 4, 6)], 2)


@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(1, 3)), max_size=9, unique=True),
       st.integers(0, 3))
@settings(max_examples=40, deadline=None)
def test_h0_monotone_and_bounded_below(coords, m):
    pts = []
    for c in coords:
        p = point(*c)
        if p not in pts:
            pts.append(p)
    prev = None
    for k in range(len(pts) + 1):
        h0, virtual, delta = linear_system_dim(pts[:k], m)
        if prev is not None:
            assert h0 <= prev
        if virtual >= 0:
            assert h0 >= virtual
        assert delta == h0 - virtual
        prev = h0


def test_monomial_count():
    assert len(monomials(4)) == 15
