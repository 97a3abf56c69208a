"""JSON encodings for matrices, subspaces, filtrations, curve systems and pants graphs.

Rationals are written as strings (``"3"``, ``"-1/2"``); integers are accepted
on input as well.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .filtered import Filtration
from .linalg import LinearMap, Subspace, echelonize
from .nilwf import CertifiedNonexistent, Exists, Inconclusive, RelativeWFOutcome
from .pants import PantsGraph
from .surface import CurveSystem, SurfaceModel


class MalformedInput(ValueError):
    """Input does not follow the expected schema."""


def _rational(x, where: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise MalformedInput(f"{where}: expected an integer or a rational string, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedInput(f"{where}: cannot parse {x!r} as a rational") from exc


def _rows(data, where: str) -> list[list[Fraction]]:
    if not isinstance(data, list) or any(not isinstance(r, list) for r in data):
        raise MalformedInput(f"{where}: expected a list of rows")
    out = [[_rational(x, f"{where}[{i}][{j}]") for j, x in enumerate(row)]
           for i, row in enumerate(data)]
    if len({len(r) for r in out}) > 1:
        raise MalformedInput(f"{where}: rows have differing lengths")
    return out


def _key(data: dict, key: str, where: str):
    if not isinstance(data, dict) or key not in data:
        raise MalformedInput(f"{where}: missing key {key!r}")
    return data[key]


def fmt(x: Fraction) -> str:
    return str(x)


def matrix_to_json(f: LinearMap) -> dict:
    return {"rows": [[fmt(x) for x in row] for row in f.entries]}


def matrix_from_json(data: Any) -> LinearMap:
    rows = _rows(_key(data, "rows", "matrix"), "matrix.rows")
    if not rows:
        raise MalformedInput("matrix: at least one row is required")
    return LinearMap.from_rows(rows)


def subspace_to_json(s: Subspace) -> dict:
    return {"ambient": s.ambient, "basis": [[fmt(x) for x in row] for row in s.basis]}


def subspace_from_json(data: Any) -> Subspace:
    n = _key(data, "ambient", "subspace")
    if not isinstance(n, int) or n < 0:
        raise MalformedInput("subspace.ambient: expected a non-negative integer")
    rows = _rows(_key(data, "basis", "subspace"), "subspace.basis")
    if any(len(r) != n for r in rows):
        raise MalformedInput("subspace.basis: vector length differs from ambient")
    return echelonize(rows, n)


def filtration_to_json(f: Filtration) -> dict:
    return {"ambient": f.ambient,
            "steps": {str(w): [[fmt(x) for x in row] for row in s.basis]
                      for w, s in f.jumps.items()}}


def filtration_from_json(data: Any) -> Filtration:
    n = _key(data, "ambient", "filtration")
    if not isinstance(n, int) or n < 0:
        raise MalformedInput("filtration.ambient: expected a non-negative integer")
    steps = _key(data, "steps", "filtration")
    if not isinstance(steps, dict):
        raise MalformedInput("filtration.steps: expected an object keyed by weight")
    parsed = {}
    for k, basis in steps.items():
        try:
            w = int(k)
        except ValueError as exc:
            raise MalformedInput(f"filtration.steps: weight {k!r} is not an integer") from exc
        rows = _rows(basis, f"filtration.steps[{k}]")
        if any(len(r) != n for r in rows):
            raise MalformedInput(f"filtration.steps[{k}]: vector length differs from ambient")
        parsed[w] = echelonize(rows, n) if rows else Subspace.zero(n)
    try:
        return Filtration(n, parsed)
    except ValueError as exc:
        raise MalformedInput(f"filtration: {exc}") from exc


def curves_from_json(data: Any) -> tuple[SurfaceModel, CurveSystem]:
    g = _key(data, "genus", "curves")
    n = data.get("punctures", 0)
    if not isinstance(g, int) or not isinstance(n, int) or g < 0 or n < 0:
        raise MalformedInput("curves: genus and punctures must be non-negative integers")
    surface = SurfaceModel(g, n)
    curves = _key(data, "curves", "curves")
    if not isinstance(curves, list):
        raise MalformedInput("curves.curves: expected a list")
    labels, classes = [], []
    for i, c in enumerate(curves):
        cls_ = _key(c, "class", f"curves[{i}]")
        if not isinstance(cls_, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in cls_):
            raise MalformedInput(f"curves[{i}].class: expected a list of integers")
        labels.append(str(c.get("label", f"c{i}")))
        classes.append(cls_)
    return surface, CurveSystem.build(surface, classes, labels)


def curves_to_json(surface: SurfaceModel, cs: CurveSystem) -> dict:
    return {"genus": surface.genus, "punctures": surface.punctures,
            "curves": [{"label": l, "class": list(c)} for l, c in zip(cs.labels, cs.classes)]}


def pants_to_json(pg: PantsGraph) -> dict:
    return {"genus": pg.genus, "boundary": pg.boundary, "blacks": list(pg.blacks),
            "whites": [{"id": w.id, "kind": w.kind, "class": list(w.cls)} for w in pg.whites],
            "edges": [[b, w] for b, w in pg.edges]}


def pants_from_json(data: Any) -> PantsGraph:
    g = _key(data, "genus", "pants")
    n = data.get("boundary", 0)
    if not isinstance(g, int) or not isinstance(n, int):
        raise MalformedInput("pants: genus and boundary must be integers")
    blacks = _key(data, "blacks", "pants")
    whites = _key(data, "whites", "pants")
    edges = _key(data, "edges", "pants")
    if not all(isinstance(x, list) for x in (blacks, whites, edges)):
        raise MalformedInput("pants: blacks, whites and edges must be lists")
    ws = []
    for i, w in enumerate(whites):
        wid = _key(w, "id", f"pants.whites[{i}]")
        kind = w.get("kind", "internal")
        c = w.get("class")
        if c is not None and (not isinstance(c, list) or not all(isinstance(x, int) for x in c)):
            raise MalformedInput(f"pants.whites[{i}].class: expected a list of integers")
        ws.append((wid, kind, c))
    if any(not isinstance(e, list) or len(e) != 2 for e in edges):
        raise MalformedInput("pants.edges: expected [black, white] pairs")
    return PantsGraph.build(g, n, blacks, ws, [tuple(e) for e in edges])


def outcome_to_json(outcome: RelativeWFOutcome) -> dict:
    if isinstance(outcome, Exists):
        return {"outcome": "Exists", "method": outcome.method,
                "filtration": filtration_to_json(outcome.filtration)}
    if isinstance(outcome, CertifiedNonexistent):
        return {"outcome": "CertifiedNonexistent", "clause": outcome.clause,
                "weight": outcome.weight, "witness": [fmt(x) for x in outcome.witness],
                "candidate": filtration_to_json(outcome.candidate)}
    if isinstance(outcome, Inconclusive):
        return {"outcome": "Inconclusive", "search_depth": outcome.search_depth}
    raise TypeError(f"unknown outcome {outcome!r}")


def _dump(obj: Any, depth: int) -> str:
    pad, inner = "  " * depth, "  " * (depth + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {_dump(v, depth + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(x, (dict, list, tuple)) for x in obj):
            return "[" + ", ".join(json.dumps(x) for x in obj) + "]"
        return "[\n" + ",\n".join(inner + _dump(x, depth + 1) for x in obj) + f"\n{pad}]"
    return json.dumps(obj)


def dumps(obj: Any) -> str:
    """Indented JSON with arrays of scalars kept on one line."""
    return _dump(obj, 0)


def loads(text: str, where: str = "input") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{where}: invalid JSON at line {exc.lineno} column {exc.colno}: "
                             f"{exc.msg}") from exc
