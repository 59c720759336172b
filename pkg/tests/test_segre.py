import random

import pytest
import sympy as sp

from branchcurve.algebra.linsys import linear_system
from branchcurve.algebra.points import ProjPoint, point
from branchcurve.algebra.poly import RatPoly
from branchcurve.io import load_data, point_from_json, poly_from_json
from branchcurve.segre import (
    PointCycle,
    SurfaceInstance,
    bidegree,
    bisecant_resultant,
    branch_curve,
    cubic_pipeline,
    cubic_surface,
    cusp_candidates,
    strict_tangency,
    verify_segre,
)

from oracles import same_up_to_scalar, to_sympy

x, y, w, z = RatPoly.gens("x", "y", "w", "z")


@pytest.fixture(scope="module")
def cubic():
    d = load_data("cubic_pipeline.json")
    a, b = poly_from_json(d["a"]), poly_from_json(d["b"])
    pts = [point_from_json(p) for p in d["points"]]
    return a, b, pts


@pytest.fixture(scope="module")
def pipeline(cubic):
    return cubic_pipeline(*cubic)


def test_cubic_pipeline_passes(pipeline, cubic):
    a, b, _ = cubic
    rep = pipeline.report
    assert rep.status == "PASS" and rep.verdict
    assert (rep.nodes, rep.cusps) == (0, 6)
    assert rep.L.is_proportional(x * y - w ** 2)
    assert pipeline.adjoint_conic.is_proportional(a)
    assert rep.L1.is_proportional(b)
    assert all(rep.tangents_separated.values())


def test_branch_curve_matches_sympy_discriminant(pipeline, cubic):
    a, b, _ = cubic
    ref = sp.discriminant(to_sympy(pipeline.surface.f), sp.Symbol("z"))
    assert same_up_to_scalar(to_sympy(pipeline.B), ref)
    assert pipeline.B.is_proportional(b * b - a ** 3 * 4)


def test_cusp_candidates_keep_lifted_points_only(pipeline, cubic):
    _, _, pts = cubic
    lifted = [ProjPoint(p.coords + (0,)) for p in pts]
    rng = random.Random(5)
    noise = [point(*(rng.randint(-9, 9) for _ in range(3)), 1) for _ in range(10)]
    found = cusp_candidates(pipeline.surface, noise + lifted)
    assert found == lifted


def test_cusp_candidates_rejects_plane_points(pipeline):
    with pytest.raises(ValueError):
        cusp_candidates(pipeline.surface, [point(1, 0, 0)])


def test_replacing_a_cusp_by_a_smooth_point_fails(pipeline, cubic):
    _, _, pts = cubic
    smooth = point(-5, 4, 4)
    assert smooth.on(pipeline.B)
    with pytest.raises(ValueError):
        verify_segre(pipeline.B, PointCycle([(smooth, "cusp")] + [(p, "cusp") for p in pts[1:]]), 3)
    rep = verify_segre(pipeline.B, PointCycle([(smooth, "plain")] + [(p, "cusp") for p in pts[1:]]), 3)
    assert rep.status == "FAIL" and not rep.counts_ok


def test_search_without_hint_reaches_pass(pipeline):
    rep = verify_segre(pipeline.B, pipeline.xi, 3)
    assert rep.status == "PASS"
    assert rep.candidates_tried >= 1
    assert all(p.on(rep.L1) for p in pipeline.xi.points)


def test_cubic_l1_agrees_with_conic_modulo_linear_multiples(pipeline, cubic):
    # cubics through the six points are b plus linear multiples of the conic
    a, b, pts = cubic
    cubics = linear_system(pts, 3)
    assert cubics.h0 == 4
    span = [b] + [a * v for v in (x, y, w)]
    for q in cubics.basis:
        vecs = [to_sympy(s) for s in span]
        cs = sp.symbols("c0:4")
        expr = sp.expand(to_sympy(q) - sum(c * v for c, v in zip(cs, vecs)))
        poly = sp.Poly(expr, *sp.symbols("x y w"))
        assert sp.solve(poly.coeffs(), cs)


def test_wrong_degree_is_rejected(pipeline):
    with pytest.raises(ValueError):
        verify_segre(pipeline.B, pipeline.xi, 4)


def test_point_off_curve_is_rejected(pipeline):
    with pytest.raises(ValueError):
        verify_segre(pipeline.B, PointCycle([(point(1, 2, 3), "node")]), 3)


def test_duplicate_cycle_points_are_rejected():
    with pytest.raises(ValueError):
        PointCycle([(point(1, 0, 0), "cusp"), (point(2, 0, 0), "node")])
    with pytest.raises(ValueError):
        PointCycle([(point(1, 0, 0), "tacnode")])


def test_quadric_branch_curve_is_the_conic():
    q = x * y - w ** 2
    B = branch_curve(SurfaceInstance(z ** 2 - q))
    assert B.is_proportional(q)


def test_quartic_branch_curve_degree():
    f = z ** 4 + (x ** 2 + y * w) * z ** 2 + (x - w) * z * y * x + x ** 4 - y ** 3 * w + w ** 4
    B = branch_curve(SurfaceInstance(f))
    assert B.is_homogeneous() and B.degree() == 12


def test_surface_through_center_is_rejected():
    with pytest.raises(ValueError):
        SurfaceInstance(x * z ** 2 + y ** 3)


def test_pipeline_rejects_non_intersection_points(cubic):
    a, b, pts = cubic
    with pytest.raises(ValueError):
        cubic_pipeline(a, b, pts[:5] + [point(1, 2, 3)])


def test_bisecant_bidegrees():
    assert bidegree(bisecant_resultant(x * y - w * z, x ** 2 + y * z)) == (1, 3)
    u = x * y - w * z
    v = x ** 3 + y ** 3 + w ** 2 * z + z ** 3
    assert bidegree(bisecant_resultant(u, v)) == (2, 5)


def test_bisecant_rejects_linear_forms():
    with pytest.raises(ValueError):
        bisecant_resultant(x + y, x * y)


def test_strict_tangency_at_cusps(pipeline, cubic):
    # b follows the cusp tangent, the conic crosses it
    a, b, pts = cubic
    assert set(strict_tangency(b, pipeline.B, pts).values()) == {3}
    assert set(strict_tangency(a, pipeline.B, pts).values()) == {2}


def test_cubic_surface_has_the_expected_equation(cubic):
    a, b, _ = cubic
    s = cubic_surface(a, b)
    assert s.nu == 3
    assert s.f == (z ** 3 - a * z * 3 + b).with_vars(s.f.vars)
    assert s.center == point(0, 0, 0, 1)
