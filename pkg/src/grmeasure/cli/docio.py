"""Reading and writing representation documents (JSON, see docs/FORMAT.md)."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

import jsonschema
import numpy as np

from ..errors import DimensionMismatchError, GRError, ParseError
from ..ffla import FpMatrix, Subspace
from ..quiverrep import Quiver, Representation
from ..sublattice import Subrep


@lru_cache(maxsize=1)
def rep_schema() -> dict:
    return json.loads(resources.files("grmeasure.cli").joinpath("rep_schema.json").read_text())


def rep_from_dict(doc: dict) -> Representation:
    try:
        jsonschema.validate(doc, rep_schema())
    except jsonschema.ValidationError as exc:
        raise ParseError(f"document does not match the schema: {exc.message}") from exc
    p = doc["p"]
    try:
        Q = Quiver(tuple(doc["quiver"]["vertices"]), tuple((a["name"], a["from"], a["to"]) for a in doc["quiver"]["arrows"]))
    except ValueError as exc:
        raise ParseError(f"bad quiver: {exc}") from exc
    dims = doc["dims"]
    if set(dims) != set(Q.vertices):
        raise ParseError("dims must list every vertex exactly once")
    names = {a for a, _, _ in Q.arrows}
    if set(doc["maps"]) != names:
        raise ParseError("maps must list every arrow exactly once")
    maps = {}
    for a, s, t in Q.arrows:
        rows = doc["maps"][a]
        r, c = dims[t], dims[s]
        if len(rows) != r or any(len(row) != c for row in rows):
            raise ParseError(f"arrow {a}: expected a {r} x {c} matrix (dim(to) x dim(from))")
        if any(x >= p for row in rows for x in row):
            raise ParseError(f"arrow {a}: entries must lie in [0, {p})")
        maps[a] = FpMatrix(np.array(rows, dtype=np.int64).reshape(r, c), p) if r * c else FpMatrix.zeros(r, c, p)
    try:
        return Representation(Q, p, dims, maps)
    except (GRError, ValueError) as exc:
        raise ParseError(str(exc)) from exc


def rep_to_dict(M: Representation) -> dict:
    Q = M.quiver
    return {
        "p": M.p,
        "quiver": {
            "vertices": list(Q.vertices),
            "arrows": [{"name": a, "from": s, "to": t} for a, s, t in Q.arrows],
        },
        "dims": {v: M.dims[v] for v in Q.vertices},
        "maps": {a: M.maps[a].tolist() for a, _, _ in Q.arrows},
    }


def dumps(M: Representation) -> str:
    """Canonical text: one top-level field per line, fixed field order."""
    d = rep_to_dict(M)
    lines = [f"  {json.dumps(k)}: {json.dumps(v)}" for k, v in d.items()]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def loads(text: str) -> Representation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("a representation document is a JSON object")
    return rep_from_dict(doc)


def load(path: str) -> Representation:
    try:
        with open(path, encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def subrep_from_dict(M: Representation, doc: dict) -> Subrep:
    """``{"vertex": [[row], ...], ...}``: spanning rows per vertex (missing vertices are zero)."""
    if not isinstance(doc, dict) or set(doc) - set(M.quiver.vertices):
        raise ParseError("a submodule is an object mapping vertices to lists of rows")
    parts = {}
    for v in M.quiver.vertices:
        rows = doc.get(v, [])
        n = M.dims[v]
        if not isinstance(rows, list) or any(not isinstance(r, list) or len(r) != n for r in rows):
            raise ParseError(f"vertex {v}: rows must have length {n}")
        try:
            parts[v] = Subspace.from_rows(np.array(rows, dtype=np.int64).reshape(len(rows), n) % M.p, n, M.p)
        except (DimensionMismatchError, ValueError) as exc:
            raise ParseError(str(exc)) from exc
    return Subrep(M, parts)


def subrep_to_dict(U: Subrep) -> dict:
    return {v: U.parts[v].basis.tolist() for v in U.parent.quiver.vertices}
