"""JSON input schemas.

Scalars are always strings ("-3/7"); a bare JSON integer is accepted on
input but a float never is. The field comes from the file's ``"field"``
key, from the caller, or defaults to the rationals; if both are present
they must agree.
"""

from __future__ import annotations

from typing import Mapping

from .errors import ParseError
from .field import QQ, FieldSpec, Scalar
from .linalg import Matrix, Vector

MATRIX_KEYS = ("A", "theta")
ARRAY_KEYS = ("d", "theta", "array")
LEONARD_KEYS = ("A", "theta", "Astar", "theta_star")
QRACAH_KEYS = ("q", "a", "b", "c", "d")


def resolve_field(obj: Mapping, override: FieldSpec | None = None) -> FieldSpec:
    declared = FieldSpec.from_json(obj["field"]) if "field" in obj else None
    if declared and override and declared != override:
        raise ParseError(f"field mismatch: file says {declared}, caller asked for {override}")
    return declared or override or QQ


def require(obj, keys, what: str) -> None:
    if not isinstance(obj, dict):
        raise ParseError(f"{what} must be a JSON object")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise ParseError(f"{what} is missing keys {missing}")


def scalar(x, field: FieldSpec) -> Scalar:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise ParseError(f"scalar must be a string or integer, got {x!r}")
    return field.parse(str(x))


def vector(obj, field: FieldSpec) -> Vector:
    if not isinstance(obj, list):
        raise ParseError("vector must be a JSON array")
    return Vector([scalar(x, field) for x in obj], field)


def matrix(obj, field: FieldSpec) -> Matrix:
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise ParseError("matrix must be an array of arrays")
    try:
        return Matrix([[scalar(x, field) for x in row] for row in obj], field)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def scalars(obj, field: FieldSpec) -> list[Scalar]:
    if not isinstance(obj, list):
        raise ParseError("scalar list must be a JSON array")
    return [scalar(x, field) for x in obj]
