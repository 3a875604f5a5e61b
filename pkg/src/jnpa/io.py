"""JSON serialization of algebras, verdicts and modules."""
from __future__ import annotations

import json
from typing import Any

from .algebra import LEFT, Algebra, StructureTensor
from .errors import InputError
from .field import Field
from .linalg import Matrix

FORMAT_VERSION = "1"


def _parse_scalar(field: Field, s) -> Any:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise InputError(f"scalars must be strings, got {s!r}")
    return field(str(s))


def _tensor_from_json(field: Field, n: int, entries, what: str) -> StructureTensor:
    if not isinstance(entries, list):
        raise InputError(f"'{what}' must be a list of [i,j,k,coeff] entries")
    seen = set()
    clean = []
    for e in entries:
        if not (isinstance(e, list) and len(e) == 4 and all(isinstance(x, int) and not isinstance(x, bool)
                                                            for x in e[:3])):
            raise InputError(f"malformed {what} entry {e!r}")
        key = tuple(e[:3])
        if key in seen:
            raise InputError(f"duplicate {what} entry {key}")
        seen.add(key)
        clean.append((*key, _parse_scalar(field, e[3])))
    return StructureTensor.from_entries(field, n, clean)


def _tensor_to_json(t: StructureTensor) -> list:
    return [[i, j, k, t.field.fmt(c)] for i, j, k, c in t.entries()]


def matrix_from_json(field: Field, n: int, rows, what: str = "matrix") -> Matrix:
    if not (isinstance(rows, list) and len(rows) == n and all(isinstance(r, list) and len(r) == n for r in rows)):
        raise InputError(f"{what} must be a {n}x{n} array")
    return Matrix(field, [[_parse_scalar(field, x) for x in r] for r in rows], n)


def algebra_to_dict(alg: Algebra) -> dict:
    d: dict[str, Any] = {
        "field": alg.field.to_json(),
        "dim": alg.dim,
        "unit": [alg.field.fmt(x) for x in alg.unit],
        "dot": _tensor_to_json(alg.dot),
    }
    if alg.circ is not None:
        d["circ"] = _tensor_to_json(alg.circ)
        d["circ_orientation"] = alg.orientation
    if alg.bracket is not None:
        d["bracket"] = _tensor_to_json(alg.bracket)
    if alg.form is not None:
        d["form"] = alg.form.to_strings()
    if alg.maps:
        d["maps"] = {k: m.to_strings() for k, m in alg.maps}
    return d


def algebra_from_dict(d: dict) -> Algebra:
    if not isinstance(d, dict):
        raise InputError("algebra description must be a JSON object")
    for key in ("field", "dim", "unit", "dot"):
        if key not in d:
            raise InputError(f"missing key {key!r}")
    field = Field.from_json(d["field"])
    n = d["dim"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError("'dim' must be a positive integer")
    unit = d["unit"]
    if not isinstance(unit, list) or len(unit) != n:
        raise InputError(f"'unit' must list {n} scalars")
    unit = tuple(_parse_scalar(field, x) for x in unit)
    dot = _tensor_from_json(field, n, d["dot"], "dot")
    circ = _tensor_from_json(field, n, d["circ"], "circ") if "circ" in d else None
    orientation = d.get("circ_orientation", LEFT)
    bracket = _tensor_from_json(field, n, d["bracket"], "bracket") if "bracket" in d else None
    form = matrix_from_json(field, n, d["form"], "form") if "form" in d else None
    maps = {}
    if "maps" in d:
        if not isinstance(d["maps"], dict):
            raise InputError("'maps' must be an object")
        maps = {k: matrix_from_json(field, n, v, f"map {k!r}") for k, v in d["maps"].items()}
    return Algebra(field, n, dot, unit, circ, orientation, bracket, form, maps)


def dumps(obj: Any) -> str:
    """Canonical JSON text (sorted keys, two-space indent, trailing newline)."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def algebra_to_json(alg: Algebra) -> str:
    return dumps(algebra_to_dict(alg))


def algebra_from_json(text: str) -> Algebra:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc.msg} at line {exc.lineno}") from None
    return algebra_from_dict(d)


def load_algebra(path: str) -> Algebra:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return algebra_from_json(text)


def save_algebra(alg: Algebra, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(algebra_to_json(alg))


def vector_to_json(field: Field, v) -> list[str]:
    return [field.fmt(x) for x in v]
