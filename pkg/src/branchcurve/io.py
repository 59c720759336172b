"""JSON encodings of the package's data types and access to the bundled sample data."""

from __future__ import annotations

import json
import os
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any

from .algebra.points import ProjPoint
from .algebra.poly import RatPoly
from .geography import OrdinarySurfaceData
from .monodromy import LocalCondition, Presentation
from .patchwork.conditions import BlockDatum
from .patchwork.polygons import Subdivision
from .segre import PointCycle

DATA_ENV = "BRANCHCURVE_DATA"


class InputError(ValueError):
    """Malformed or missing input data."""


def _int_string(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise InputError(f"{what} must be a decimal integer string, got {value!r}")
    try:
        return int(value)
    except ValueError:
        raise InputError(f"{what} must be a decimal integer string, got {value!r}") from None


def _require(obj, key: str, kind, where: str):
    if not isinstance(obj, dict) or key not in obj:
        raise InputError(f"{where}: missing field {key!r}")
    value = obj[key]
    if not isinstance(value, kind):
        raise InputError(f"{where}: field {key!r} has the wrong type")
    return value


# polynomials and points


def poly_to_json(f: RatPoly) -> dict:
    terms = [{"e": list(e), "n": str(c.numerator), "d": str(c.denominator)}
             for e, c in sorted(f.terms.items(), reverse=True)]
    return {"vars": list(f.vars), "terms": terms}


def poly_from_json(obj) -> RatPoly:
    variables = _require(obj, "vars", list, "polynomial")
    terms = _require(obj, "terms", list, "polynomial")
    parsed = []
    for t in terms:
        e = _require(t, "e", list, "polynomial term")
        if len(e) != len(variables):
            raise InputError(f"polynomial term {e} does not match variables {variables}")
        num = _int_string(t.get("n"), "numerator")
        den = _int_string(t.get("d", "1"), "denominator")
        if den <= 0:
            raise InputError("denominators must be positive")
        parsed.append((e, Fraction(num, den)))
    try:
        return RatPoly(variables, parsed)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _coord_string(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def point_to_json(p: ProjPoint) -> dict:
    return {"coords": [_coord_string(c) for c in p.coords]}


def point_from_json(obj) -> ProjPoint:
    coords = _require(obj, "coords", list, "point")
    try:
        return ProjPoint([Fraction(str(c)) for c in coords])
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"point: {exc}") from None


def cycle_to_json(xi: PointCycle) -> dict:
    return {"points": [dict(point_to_json(e.point), kind=e.kind) for e in xi]}


def cycle_from_json(obj) -> PointCycle:
    entries = _require(obj, "points", list, "point cycle")
    try:
        return PointCycle((point_from_json(e), _require(e, "kind", str, "cycle point")) for e in entries)
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"point cycle: {exc}") from None


# monodromy


def presentation_to_json(p: Presentation) -> dict:
    return {"ngens": p.ngens, "relators": [list(r) for r in p.relators]}


def presentation_from_json(obj) -> Presentation:
    ngens = _require(obj, "ngens", int, "presentation")
    relators = _require(obj, "relators", list, "presentation")
    try:
        return Presentation(ngens, relators)
    except (ValueError, TypeError) as exc:
        raise InputError(f"presentation: {exc}") from None


def local_to_json(lc: LocalCondition) -> dict:
    return {"kind": lc.kind, "pair": [list(w) for w in lc.pair]}


def local_from_json(obj) -> LocalCondition:
    kind = _require(obj, "kind", str, "local condition")
    pair = _require(obj, "pair", list, "local condition")
    try:
        return LocalCondition(kind, pair)
    except (ValueError, TypeError) as exc:
        raise InputError(f"local condition: {exc}") from None


def locals_from_json(obj) -> list:
    items = obj.get("conditions") if isinstance(obj, dict) else obj
    if not isinstance(items, list):
        raise InputError("local conditions must be a list or an object with a 'conditions' list")
    return [local_from_json(x) for x in items]


# patchwork


def subdivision_to_json(s: Subdivision) -> dict:
    return {"d": s.d, "cells": [{"verts": [list(v) for v in c.vertices]} for c in s.cells]}


def subdivision_from_json(obj) -> Subdivision:
    d = _require(obj, "d", int, "subdivision")
    cells = _require(obj, "cells", list, "subdivision")
    try:
        return Subdivision(d, [_require(c, "verts", list, "cell") for c in cells])
    except (ValueError, TypeError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"subdivision: {exc}") from None


def blocks_to_json(blocks) -> dict:
    out = {}
    for b in sorted(blocks, key=lambda b: b.cell):
        entry = {"cusps": b.cusps, "nodes": b.nodes}
        if b.split:
            entry["components"] = list(b.components)
        if b.polynomial is not None:
            entry["polynomial"] = poly_to_json(b.polynomial)
        out[str(b.cell)] = entry
    return out


def blocks_from_json(obj) -> list:
    if not isinstance(obj, dict):
        raise InputError("blocks must be an object keyed by cell index")
    out = []
    for key, entry in obj.items():
        cell = _int_string(key, "cell index")
        cusps = _require(entry, "cusps", int, f"block {key}")
        nodes = _require(entry, "nodes", int, f"block {key}")
        poly = poly_from_json(entry["polynomial"]) if "polynomial" in entry else None
        try:
            out.append(BlockDatum(cell, cusps, nodes, tuple(entry.get("components", ())), poly))
        except ValueError as exc:
            raise InputError(f"block {key}: {exc}") from None
    return sorted(out, key=lambda b: b.cell)


# geography

_ORDINARY_FIELDS = ("nu", "e", "e_star", "t", "g_minus_u")


def ordinary_to_json(data: OrdinarySurfaceData) -> dict:
    return {k: getattr(data, k) for k in _ORDINARY_FIELDS}


def ordinary_from_json(obj) -> OrdinarySurfaceData:
    values = {k: _require(obj, k, int, "ordinary surface data") for k in _ORDINARY_FIELDS}
    try:
        return OrdinarySurfaceData(**values)
    except ValueError as exc:
        raise InputError(f"ordinary surface data: {exc}") from None


# files


def read_json(path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def data_path(name: str):
    """Path of a bundled sample file; the BRANCHCURVE_DATA directory takes precedence."""
    override = os.environ.get(DATA_ENV)
    if override:
        return Path(override) / name
    return resources.files("branchcurve").joinpath("data", name)


def load_data(name: str) -> Any:
    path = data_path(name)
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise InputError(f"sample data file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from None
