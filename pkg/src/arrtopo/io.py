"""Reading arrangement files and writing reports.

File format (UTF-8 JSON, rationals as strings)::

    {"ambient_dim": 2,
     "subspaces": [{"equations": [["1", "-1"]], "rhs": ["0"]},
                   {"point": ["0", "1"], "directions": [["1", "0"]]}]}
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .arrangement import Arrangement, IntersectionLattice, validate
from .exactlin import EMPTY, DimensionMismatch, canonicalize, from_point_directions
from .homology import HomologyProfile

_RATIONAL = re.compile(r"^\s*[+-]?\d+\s*(/\s*\d+\s*)?$")


class ParseError(ValueError):
    pass


class ValidationError(ValueError):
    pass


def parse_rational(value, field: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ParseError(f"{field}: expected a rational string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not _RATIONAL.match(value):
        raise ParseError(f"{field}: malformed rational {value!r}")
    num, _, den = value.replace(" ", "").partition("/")
    if den and int(den) == 0:
        raise ParseError(f"{field}: zero denominator in {value!r}")
    return Fraction(int(num), int(den) if den else 1)


def _vector(value, field: str) -> list[Fraction]:
    if not isinstance(value, list):
        raise ParseError(f"{field}: expected a list")
    return [parse_rational(v, f"{field}[{i}]") for i, v in enumerate(value)]


def _matrix(value, field: str) -> list[list[Fraction]]:
    if not isinstance(value, list):
        raise ParseError(f"{field}: expected a list of rows")
    return [_vector(row, f"{field}[{i}]") for i, row in enumerate(value)]


def arrangement_from_dict(data) -> Arrangement:
    """Parse (exit code 3 problems) and then validate (exit code 2 problems)."""
    if not isinstance(data, dict):
        raise ParseError("top level: expected an object")
    n = data.get("ambient_dim")
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ParseError(f"ambient_dim: expected a nonnegative integer, got {n!r}")
    subs = data.get("subspaces")
    if not isinstance(subs, list):
        raise ParseError("subspaces: expected a list")
    parsed = []
    for i, entry in enumerate(subs):
        field = f"subspaces[{i}]"
        if not isinstance(entry, dict):
            raise ParseError(f"{field}: expected an object")
        if "equations" in entry:
            eqs = _matrix(entry["equations"], f"{field}.equations")
            rhs = _vector(entry.get("rhs", []), f"{field}.rhs")
            parsed.append(("eq", field, eqs, rhs))
        elif "point" in entry:
            point = _vector(entry["point"], f"{field}.point")
            dirs = _matrix(entry.get("directions", []), f"{field}.directions")
            parsed.append(("pd", field, point, dirs))
        else:
            raise ParseError(f"{field}: needs either 'equations' or 'point'")

    out = []
    try:
        for kind, field, a, b in parsed:
            if kind == "eq":
                s = canonicalize(a, b, n)
                if s is EMPTY:
                    raise ValidationError(f"{field}: equations are inconsistent (empty subspace)")
            else:
                if len(a) != n:
                    raise DimensionMismatch(f"{field}.point has {len(a)} coordinates, expected {n}")
                s = from_point_directions(a, b)
            out.append(s)
        return validate(out, n)
    except ValidationError:
        raise
    except ValueError as exc:
        raise ValidationError(f"{type(exc).__name__}: {exc}") from exc


def load_arrangement(path) -> Arrangement:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    return arrangement_from_dict(data)


def arrangement_to_dict(arr: Arrangement) -> dict:
    return {"ambient_dim": arr.ambient_dim, "subspaces": [s.to_strings() for s in arr.subspaces]}


def lattice_report(lat: IntersectionLattice) -> list[dict]:
    covers = lat.covers()
    out = []
    for x in lat.poset.elements:
        entry = {
            "name": lat.name(x),
            "dim": lat.dim(x),
            "atoms": [lat.name(a) for a in sorted(lat.atoms_below(x))],
            "covered_by": [lat.name(y) for a, y in covers if a == x],
        }
        entry.update(lat.flat(x).to_strings())
        out.append(entry)
    return out


def profile_to_json(p: HomologyProfile) -> list:
    return p.records()


def profile_from_json(records) -> HomologyProfile:
    return HomologyProfile.from_records(records)
