"""Exact JSON conventions shared by the CLI and the file formats.

Rationals serialize as decimal-free strings "p/q"; integer values may appear
bare.  Parsing accepts both and round-trips exactly, so every number in a
report can be read back into the identical Fraction.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence, Union

from .errors import InvalidInput
from .polytope import LatticePolytope, RatVec, build

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(value: Union[int, str]) -> Fraction:
    """Parse a bare integer or a "p/q" string; decimals are rejected."""
    if isinstance(value, bool):
        raise InvalidInput(f"expected a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_RE.match(text):
            raise InvalidInput(f"not a decimal-free rational literal: {value!r}")
        num, _, den = text.partition("/")
        if den:
            if int(den) == 0:
                raise InvalidInput(f"zero denominator in {value!r}")
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    raise InvalidInput(f"expected int or 'p/q' string, got {type(value).__name__}")


def format_rational(value: Fraction) -> Union[int, str]:
    """Bare int when integral, "p/q" string otherwise."""
    q = Fraction(value)
    if q.denominator == 1:
        return int(q)
    return f"{q.numerator}/{q.denominator}"


def parse_ratvec(items: Sequence[Union[int, str]]) -> RatVec:
    if not isinstance(items, (list, tuple)):
        raise InvalidInput("a vector must be a JSON array")
    return RatVec(parse_rational(c) for c in items)


def format_ratvec(vec: RatVec) -> list[Union[int, str]]:
    return [format_rational(c) for c in vec]


def parse_vector_text(text: str) -> RatVec:
    """Comma-separated rationals from the command line, e.g. "-1,2" or "1/2,3"."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise InvalidInput(f"malformed vector literal: {text!r}")
    return RatVec(parse_rational(p) for p in parts)


def polytope_to_obj(P: LatticePolytope, name: str = "") -> dict[str, Any]:
    return {
        "name": name,
        "dim": P.dim,
        "vertices": [format_ratvec(v) for v in P.vertices],
    }


def polytope_from_obj(obj: Any) -> tuple[str, LatticePolytope]:
    if not isinstance(obj, dict):
        raise InvalidInput("polytope JSON must be an object")
    try:
        name = obj.get("name", "")
        dim = obj["dim"]
        raw_vertices = obj["vertices"]
    except KeyError as exc:
        raise InvalidInput(f"polytope JSON missing key {exc}") from exc
    if not isinstance(dim, int) or dim < 1:
        raise InvalidInput(f"dim must be a positive integer, got {dim!r}")
    if not isinstance(raw_vertices, list) or not raw_vertices:
        raise InvalidInput("vertices must be a nonempty array")
    vertices = []
    for row in raw_vertices:
        v = parse_ratvec(row)
        if len(v) != dim:
            raise InvalidInput(f"vertex {row} does not have {dim} coordinates")
        if not v.is_integral:
            raise InvalidInput(f"vertex {row} has non-integer coordinates")
        vertices.append(v)
    return str(name), build(vertices)


def polytope_from_json(text: str) -> tuple[str, LatticePolytope]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"invalid JSON: {exc}") from exc
    return polytope_from_obj(obj)


def format_optional(value: Optional[Fraction]) -> Union[int, str, None]:
    return None if value is None else format_rational(value)


def format_optional_vec(vec: Optional[RatVec]) -> Optional[list[Union[int, str]]]:
    return None if vec is None else format_ratvec(vec)


def to_json(obj: Any) -> str:
    """Canonical JSON text: two-space indent, stable key order, newline at end."""
    return json.dumps(obj, indent=2) + "\n"
