"""Space files (schema version 1) and canonical JSON.

A space file holds::

    {"schema_version": 1, "field": "real" | "complex", "n": .., "rank": ..,
     "dim": .., "basis": [[[entry, ..], ..], ..], "certificate": {..}}

Real entries are ``"p"`` or ``"p/q"``; complex spaces write every entry as
``{"re": .., "im": ..}``.  The certificate is optional and tagged by
``kind``: ``"square"``, ``"factor"`` (with ``p``) or ``"padding"`` (with
``removed`` and a nested ``inner`` space without ``schema_version``).

Anticommuting families use the same entry format as
``{"field": .., "m": .., "generators": [matrix, ..]}``.

Output is canonical: sorted keys, compact separators, reduced rationals, so
equal spaces serialize to identical bytes.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

from .exact_linalg import ExactMatrix, format_scalar, parse_scalar
from .families import AnticommutingFamily
from .rh_core import FIELDS
from .spaces import FactorIdentity, MatrixSpace, Padding, SquareIdentity

__all__ = ["SpaceFormatError", "space_to_dict", "space_from_dict", "dumps", "loads", "space_digest"]

SCHEMA_VERSION = 1


class SpaceFormatError(ValueError):
    """The document is not a well-formed space file."""


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _matrix_to_json(m: ExactMatrix, complex_form: bool) -> list:
    return [[format_scalar(x, complex_form) for x in row] for row in m.data]


def space_to_dict(space: MatrixSpace, top_level: bool = True) -> dict:
    complex_form = space.field == "complex"
    out: dict[str, Any] = {
        "field": space.field,
        "n": space.n,
        "rank": space.rank,
        "dim": space.dimension,
        "basis": [_matrix_to_json(g, complex_form) for g in space.basis],
    }
    cert = space.certificate
    if isinstance(cert, SquareIdentity):
        out["certificate"] = {"kind": "square"}
    elif isinstance(cert, FactorIdentity):
        out["certificate"] = {"kind": "factor", "p": cert.p}
    elif isinstance(cert, Padding):
        out["certificate"] = {
            "kind": "padding",
            "removed": cert.removed,
            "inner": space_to_dict(cert.inner, top_level=False),
        }
    if top_level:
        out["schema_version"] = SCHEMA_VERSION
    return out


def _int_field(obj: dict, key: str, minimum: int = 0) -> int:
    v = obj.get(key)
    if isinstance(v, bool) or not isinstance(v, int) or v < minimum:
        raise SpaceFormatError(f"{key!r} must be an integer >= {minimum}, got {v!r}")
    return v


def _certificate_from_dict(obj: Any, n: int) -> Any:
    if obj is None:
        return None
    if not isinstance(obj, dict) or "kind" not in obj:
        raise SpaceFormatError("certificate must be an object with a 'kind'")
    kind = obj["kind"]
    if kind == "square":
        return SquareIdentity()
    if kind == "factor":
        p = _int_field(obj, "p", 1)
        if p >= n:
            raise SpaceFormatError(f"factor block size p={p} must be below n={n}")
        return FactorIdentity(p)
    if kind == "padding":
        removed = _int_field(obj, "removed", 1)
        if "inner" not in obj:
            raise SpaceFormatError("padding certificate needs an inner space")
        inner = space_from_dict(obj["inner"], top_level=False)
        return Padding(removed, inner)
    raise SpaceFormatError(f"unknown certificate kind {kind!r}")


def _matrix_from_json(mat: Any, n: int, label: str) -> ExactMatrix:
    if not isinstance(mat, list) or len(mat) != n or any(not isinstance(r, list) or len(r) != n for r in mat):
        raise SpaceFormatError(f"{label} is not {n}x{n}")
    try:
        return ExactMatrix([[parse_scalar(x) for x in row] for row in mat])
    except (ValueError, ZeroDivisionError) as exc:
        raise SpaceFormatError(f"{label}: {exc}") from None


def space_from_dict(obj: Any, top_level: bool = True) -> MatrixSpace:
    if not isinstance(obj, dict):
        raise SpaceFormatError("space must be a JSON object")
    if top_level and obj.get("schema_version") != SCHEMA_VERSION:
        raise SpaceFormatError(f"unsupported schema_version {obj.get('schema_version')!r}")
    field = obj.get("field")
    if field not in FIELDS:
        raise SpaceFormatError(f"field must be one of {FIELDS}, got {field!r}")
    n = _int_field(obj, "n", 1)
    rank = _int_field(obj, "rank", 0)
    dim = _int_field(obj, "dim", 0)
    basis_json = obj.get("basis")
    if not isinstance(basis_json, list):
        raise SpaceFormatError("basis must be a list of matrices")
    if len(basis_json) != dim:
        raise SpaceFormatError(f"dim is {dim} but the basis has {len(basis_json)} matrices")
    basis = [_matrix_from_json(mat, n, f"basis matrix {idx}") for idx, mat in enumerate(basis_json)]
    cert = _certificate_from_dict(obj.get("certificate"), n)
    return MatrixSpace(field, n, rank, tuple(basis), cert)


def family_to_dict(family: AnticommutingFamily) -> dict:
    complex_form = family.field == "complex"
    return {
        "field": family.field,
        "m": family.m,
        "generators": [_matrix_to_json(g, complex_form) for g in family.generators],
    }


def family_from_dict(obj: Any) -> AnticommutingFamily:
    if not isinstance(obj, dict) or obj.get("field") not in FIELDS:
        raise SpaceFormatError("family must be an object with a known field")
    m = _int_field(obj, "m", 1)
    gens = obj.get("generators")
    if not isinstance(gens, list):
        raise SpaceFormatError("generators must be a list of matrices")
    return AnticommutingFamily(
        m, obj["field"], tuple(_matrix_from_json(g, m, f"generator {i}") for i, g in enumerate(gens))
    )


def dumps(space: MatrixSpace) -> str:
    return canonical_json(space_to_dict(space)) + "\n"


def loads(text: str) -> MatrixSpace:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpaceFormatError(f"invalid JSON: {exc}") from None
    return space_from_dict(obj)


def space_digest(space: MatrixSpace) -> str:
    return "sha256:" + hashlib.sha256(dumps(space).encode()).hexdigest()
