"""The polytope JSON exchange format.

A polytope is a document {"dim": n, "vertices": [[c, ...], ...]} where every
coordinate c is a string "p" or "p/q" of decimal integers (q positive, no
leading zeros).  The format is bit-exact by construction; floating-point
literals anywhere in the document are rejected outright.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Union

from .errors import ParseError
from .geometry import Polytope, from_vertices

_COORD = re.compile(r"-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?\Z")


def polytope_to_json_dict(P: Polytope) -> dict:
    return {
        "dim": P.ambient_dim,
        "vertices": [[str(c) for c in v] for v in P.vertices],
    }


def dumps_polytope(P: Polytope) -> str:
    return json.dumps(polytope_to_json_dict(P), indent=2)


def _reject_float(text: str) -> None:
    raise ParseError(f"floating-point literal {text!r} is not allowed")


def polytope_from_json_dict(obj: object, max_dim: Union[int, None] = None) -> Polytope:
    if not isinstance(obj, dict):
        raise ParseError("top level must be a JSON object")
    extra = set(obj) - {"dim", "vertices"}
    if extra:
        raise ParseError(f"unknown keys {sorted(extra)}")
    if "dim" not in obj or "vertices" not in obj:
        raise ParseError('both "dim" and "vertices" are required')
    dim = obj["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise ParseError('"dim" must be a positive integer')
    vertices = obj["vertices"]
    if not isinstance(vertices, list) or not vertices:
        raise ParseError('"vertices" must be a non-empty list')
    parsed = []
    for row, vertex in enumerate(vertices):
        if not isinstance(vertex, list) or len(vertex) != dim:
            raise ParseError(f"vertex {row} must be a list of {dim} coordinates")
        coords = []
        for col, coord in enumerate(vertex):
            if not isinstance(coord, str) or not _COORD.match(coord):
                raise ParseError(
                    f"vertex {row} coordinate {col}: {coord!r} is not a "
                    f'"p" or "p/q" integer string')
            coords.append(coord)
        parsed.append(coords)
    return from_vertices(parsed, max_dim=max_dim)


def loads_polytope(text: str, max_dim: Union[int, None] = None) -> Polytope:
    try:
        obj = json.loads(text, parse_float=_reject_float,
                         parse_constant=_reject_float)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    return polytope_from_json_dict(obj, max_dim=max_dim)


def load_polytope(path: Union[str, Path], max_dim: Union[int, None] = None) -> Polytope:
    return loads_polytope(Path(path).read_text(), max_dim=max_dim)
