"""Versioned JSON encodings for data exchanged by the CLI and the service.

Every emitted object carries a top-level "schema" tag so readers can detect
format drift.  Parsers tolerate a missing tag but reject a wrong one.
Lusztig data serialize sparsely (zero cells omitted); prime-field free data
serialize densely since their values are meaningful at every key.
"""

from __future__ import annotations

from typing import Any, Iterable

from .bz import FLAVORS, BZDatum, MVPolytopeGeometry, mv_vertices
from .crystal import LusztigDatum
from .maya import MayaDiagram, all_maya
from .quiver import Orientation, adapted_word, characterizing_root, orientation_from_maya
from .weyl import Move, pi_pairs

SCHEMA_LUSZTIG = "mvlab/lusztig-datum.v1"
SCHEMA_BZ = "mvlab/bz-datum.v1"
SCHEMA_ENUM = "mvlab/datum-list.v1"
SCHEMA_APPLY = "mvlab/apply-result.v1"
SCHEMA_POLYTOPE = "mvlab/mv-polytope.v1"
SCHEMA_QUIVER = "mvlab/quiver-data.v1"
SCHEMA_MOVES = "mvlab/braid-moves.v1"
SCHEMA_LAGRANGIAN = "mvlab/sampling-report.v1"
SCHEMA_VERIFY = "mvlab/verify-report.v1"
SCHEMA_ERROR = "mvlab/error.v1"

__all__ = [
    "SCHEMA_LUSZTIG",
    "SCHEMA_BZ",
    "SCHEMA_ENUM",
    "SCHEMA_APPLY",
    "SCHEMA_POLYTOPE",
    "SCHEMA_QUIVER",
    "SCHEMA_MOVES",
    "SCHEMA_LAGRANGIAN",
    "SCHEMA_VERIFY",
    "SCHEMA_ERROR",
    "datum_payload",
    "datum_to_json",
    "datum_from_json",
    "bz_payload",
    "bz_to_json",
    "bz_from_json",
    "orientation_payload",
    "quiver_to_json",
    "moves_payload",
    "polytope_to_json",
    "error_json",
]


def _check_schema(obj: dict, expected: str) -> None:
    tag = obj.get("schema")
    if tag is not None and tag != expected:
        raise ValueError(f"schema mismatch: expected {expected}, got {tag}")


def _require_int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{what} must be an integer, got {value!r}")
    return value


def _pair_key(i: int, j: int) -> str:
    return f"{i},{j}"


def _parse_pair(key: str) -> tuple[int, int]:
    parts = key.split(",")
    if len(parts) != 2:
        raise ValueError(f"cell key must look like 'i,j', got {key!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise ValueError(f"cell key must hold integers, got {key!r}") from exc


def datum_payload(a: LusztigDatum) -> dict:
    cells = {_pair_key(i, j): v for (i, j), v in a.nonzero().items()}
    return {"n": a.n, "a": cells}


def datum_to_json(a: LusztigDatum) -> dict:
    return {"schema": SCHEMA_LUSZTIG, **datum_payload(a)}


def datum_from_json(obj: Any) -> LusztigDatum:
    if not isinstance(obj, dict):
        raise ValueError("datum must be a JSON object")
    _check_schema(obj, SCHEMA_LUSZTIG)
    n = _require_int(obj.get("n"), "n")
    if n < 1:
        raise ValueError("n must be at least 1")
    cells_obj = obj.get("a", {})
    if not isinstance(cells_obj, dict):
        raise ValueError("field 'a' must be an object of cell entries")
    cells = {}
    for key, value in cells_obj.items():
        pair = _parse_pair(key)
        i, j = pair
        if not (1 <= i < j <= n + 1):
            raise ValueError(f"cell {key!r} out of range for n={n}")
        v = _require_int(value, f"cell {key!r}")
        if v < 0:
            raise ValueError(f"cell {key!r} must be nonnegative")
        cells[pair] = v
    return LusztigDatum.from_dict(n, cells)


def _members_key(members: Iterable[int]) -> str:
    return ",".join(str(m) for m in sorted(members))


def bz_payload(M: BZDatum) -> dict:
    values = {_members_key(K.members): M.get(K) for K in all_maya(M.n)}
    return {"n": M.n, "flavor": M.flavor, "M": values}


def bz_to_json(M: BZDatum) -> dict:
    return {"schema": SCHEMA_BZ, **bz_payload(M)}


def bz_from_json(obj: Any) -> BZDatum:
    if not isinstance(obj, dict):
        raise ValueError("prime-field free datum must be a JSON object")
    _check_schema(obj, SCHEMA_BZ)
    n = _require_int(obj.get("n"), "n")
    if n < 1:
        raise ValueError("n must be at least 1")
    flavor = obj.get("flavor")
    if flavor not in FLAVORS:
        raise ValueError(f"flavor must be one of {FLAVORS}, got {flavor!r}")
    values_obj = obj.get("M", {})
    if not isinstance(values_obj, dict):
        raise ValueError("field 'M' must be an object of component values")
    values = {}
    for key, value in values_obj.items():
        members = frozenset(int(part) for part in key.split(",") if part.strip())
        if not members or not members <= set(range(1, n + 2)):
            raise ValueError(f"component key {key!r} is not a Maya diagram for n={n}")
        if len(members) == n + 1:
            raise ValueError(f"component key {key!r} must be a proper subset")
        values[members] = _require_int(value, f"component {key!r}")
    return BZDatum.from_dict(n, flavor, values)


def orientation_payload(orient: Orientation) -> dict:
    return {"n": orient.n, "dirs": "".join(orient.dirs)}


def quiver_to_json(K: MayaDiagram) -> dict:
    orient = orientation_from_maya(K)
    root = characterizing_root(K)
    return {
        "schema": SCHEMA_QUIVER,
        "n": K.n,
        "maya": sorted(K.members),
        "orientation": orientation_payload(orient),
        "sources": list(orient.sources()),
        "sinks": list(orient.sinks()),
        "characterizing_root": list(root) if root is not None else None,
        "adapted_word": list(adapted_word(orient)),
    }


def moves_payload(path: Iterable[Move]) -> list[dict]:
    return [{"kind": move.kind, "pos": move.pos} for move in path]


def polytope_to_json(M: BZDatum, geometry: MVPolytopeGeometry | None = None) -> dict:
    if geometry is None:
        geometry = mv_vertices(M)
    return {
        "schema": SCHEMA_POLYTOPE,
        "n": M.n,
        "vertices": [
            {"w": list(w), "mu": list(mu)} for w, mu in geometry.vertices
        ],
        "halfspaces": [
            {"K": sorted(K.members), "bound": M.get(K)} for K in all_maya(M.n)
        ],
    }


def error_json(message: str, **detail: Any) -> dict:
    out = {"schema": SCHEMA_ERROR, "error": message}
    if detail:
        out["detail"] = detail
    return out


def roots_payload(pairs: Iterable[tuple[int, int]]) -> list[list[int]]:
    return [list(p) for p in pairs]


def datum_list_to_json(n: int, max_height: int, items: Iterable[LusztigDatum]) -> dict:
    return {
        "schema": SCHEMA_ENUM,
        "n": n,
        "max_height": max_height,
        "order": [list(p) for p in pi_pairs(n)],
        "items": [datum_payload(a) for a in items],
    }
