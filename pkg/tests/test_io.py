import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from branchcurve import io
from branchcurve.algebra.points import ProjPoint, point
from branchcurve.algebra.poly import RatPoly
from branchcurve.geography import OrdinarySurfaceData
from branchcurve.monodromy import LocalCondition
from branchcurve.segre import PointCycle

BUNDLED = ["b3_center.json", "cubic_pipeline.json", "deltoid.json", "nonregular_subdivision.json",
           "sextic9.json", "sextic9_locals.json", "t12_blocks.json", "t12_subdivision.json", "targets.json"]


def through_text(obj):
    return json.loads(io.dumps(obj))


@pytest.mark.parametrize("name", BUNDLED)
def test_bundled_files_load(name):
    assert io.load_data(name)


def test_polynomials_round_trip():
    d = io.load_data("cubic_pipeline.json")
    for key in ("a", "b"):
        f = io.poly_from_json(d[key])
        assert io.poly_from_json(through_text(io.poly_to_json(f))) == f


@given(st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)),
                       st.fractions(max_denominator=50).filter(bool), max_size=6))
@settings(max_examples=50, deadline=None)
def test_arbitrary_polynomials_round_trip(terms):
    f = RatPoly(("x", "y"), terms)
    assert io.poly_from_json(through_text(io.poly_to_json(f))) == f


def test_huge_coefficients_survive():
    f = RatPoly(("x",), {(1,): Fraction(10 ** 40 + 1, 3 ** 30)})
    assert io.poly_from_json(through_text(io.poly_to_json(f))) == f


def test_points_and_cycles_round_trip():
    p = point(Fraction(1, 2), -3, 7)
    assert io.point_from_json(through_text(io.point_to_json(p))) == p
    xi = PointCycle([(point(1, 0, 0), "cusp"), (point(0, 1, 0), "node"), (point(1, 1, 1), "plain")])
    assert io.cycle_from_json(through_text(io.cycle_to_json(xi))) == xi


def test_presentations_round_trip():
    for name in ("deltoid.json", "b3_center.json", "sextic9.json"):
        pres = io.presentation_from_json(io.load_data(name))
        assert io.presentation_from_json(through_text(io.presentation_to_json(pres))) == pres


def test_local_conditions_round_trip():
    locs = io.locals_from_json(io.load_data("sextic9_locals.json"))
    assert len(locs) == 5 and all(lc.kind == "cusp" for lc in locs)
    lc = LocalCondition("node", ([1, -2], [3]))
    assert io.local_from_json(through_text(io.local_to_json(lc))) == lc
    assert io.locals_from_json([io.local_to_json(lc)]) == [lc]


def test_subdivisions_and_blocks_round_trip():
    for name in ("t12_subdivision.json", "nonregular_subdivision.json"):
        s = io.subdivision_from_json(io.load_data(name))
        again = io.subdivision_from_json(through_text(io.subdivision_to_json(s)))
        assert again.d == s.d and again.cells == s.cells
    blocks = io.blocks_from_json(io.load_data("t12_blocks.json"))
    assert io.blocks_from_json(through_text(io.blocks_to_json(blocks))) == blocks


def test_ordinary_data_round_trip():
    data = OrdinarySurfaceData(4, 3, 0, 1, -3)
    assert io.ordinary_from_json(through_text(io.ordinary_to_json(data))) == data


@pytest.mark.parametrize("decoder, obj", [
    (io.poly_from_json, {"vars": ["x"], "terms": [{"e": [1, 2], "n": "1", "d": "1"}]}),
    (io.poly_from_json, {"vars": ["x"], "terms": [{"e": [1], "n": "1", "d": "0"}]}),
    (io.poly_from_json, {"terms": []}),
    (io.point_from_json, {"coords": ["0/1", "0/1", "0/1"]}),
    (io.point_from_json, {"coords": ["a", "1", "1"]}),
    (io.presentation_from_json, {"ngens": 2, "relators": [[1, 3]]}),
    (io.presentation_from_json, {"ngens": "2", "relators": []}),
    (io.locals_from_json, {"conditions": [{"kind": "tacnode", "pair": [[1], [2]]}]}),
    (io.locals_from_json, "cusp"),
    (io.subdivision_from_json, {"d": 2, "cells": [{"verts": [[0, 0], [0.5, 0], [0, 1]]}]}),
    (io.blocks_from_json, {"x": {"cusps": 1, "nodes": 0}}),
    (io.blocks_from_json, {"0": {"cusps": 3, "nodes": 0, "components": [1, 1]}}),
    (io.ordinary_from_json, {"nu": 4, "e": 1}),
])
def test_malformed_input_raises_input_error(decoder, obj):
    with pytest.raises(io.InputError):
        decoder(obj)


def test_input_error_is_a_value_error():
    assert issubclass(io.InputError, ValueError)


def test_read_json_errors(tmp_path):
    with pytest.raises(io.InputError):
        io.read_json(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("[1,")
    with pytest.raises(io.InputError):
        io.read_json(bad)


def test_data_override(tmp_path, monkeypatch):
    (tmp_path / "deltoid.json").write_text(json.dumps({"ngens": 1, "relators": []}))
    monkeypatch.setenv(io.DATA_ENV, str(tmp_path))
    assert io.load_data("deltoid.json")["ngens"] == 1
    with pytest.raises(io.InputError):
        io.load_data("sextic9.json")


def test_plane_points_stay_projective():
    p = io.point_from_json({"coords": ["2/1", "4/1", "6/1"]})
    assert isinstance(p, ProjPoint) and p == point(1, 2, 3)
