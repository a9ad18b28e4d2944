"""Deterministic JSON / TSV encoding shared by the CLI and test fixtures.

Conventions (chosen so golden files stay diff-friendly and overflow-proof):
integers become decimal strings; fractions the reduced "p/q" form; complex
numbers become [re, im] pairs of decimal strings (shortest round-trip
repr); integer and complex matrices become {"rows": n, "cols": m,
"entries": [[...], ...]} with numeric shape fields and string entries.
Dataclasses serialize by field name, with the trailing-underscore escape
for Python keywords stripped (``lambda_`` -> "lambda").
"""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction

from .errors import UsageError
from .intlinalg import IntMatrix


def _field_name(name: str) -> str:
    return name[:-1] if name.endswith("_") else name


class _Raw:
    """Wrapper marking a value as already being in final jsonable form."""

    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value


def to_jsonable(obj):
    """Recursively convert a value into json.dumps-ready primitives."""
    if isinstance(obj, _Raw):
        return obj.value
    if obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return repr(obj)
    if isinstance(obj, complex):
        return [repr(obj.real), repr(obj.imag)]
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, IntMatrix):
        return {
            "rows": obj.rows,
            "cols": obj.cols,
            "entries": [[str(v) for v in row] for row in obj.tolists()],
        }
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {
            _field_name(f.name): to_jsonable(getattr(obj, f.name))
            for f in dataclasses.fields(obj)
        }
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, frozenset, set)):
        items = list(obj)
        if isinstance(obj, (frozenset, set)):
            items = sorted(items, key=str)
        return [to_jsonable(v) for v in items]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def complex_matrix_jsonable(rows) -> _Raw:
    """Encode a rectangular complex matrix as {"rows", "cols", "entries"}
    with numeric shape fields and [re, im] decimal-string entries."""
    grid = [[complex(v) for v in row] for row in rows]
    ncols = len(grid[0]) if grid else 0
    return _Raw(
        {
            "rows": len(grid),
            "cols": ncols,
            "entries": [[to_jsonable(v) for v in row] for row in grid],
        }
    )


def encode_json(obj) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2) + "\n"


def tsv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, Fraction)):
        return str(v)
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, complex):
        return f"{v.real!r},{v.imag!r}"
    return str(v)


def tsv_table(header, rows) -> str:
    lines = ["\t".join(header)]
    for row in rows:
        lines.append("\t".join(tsv_cell(v) for v in row))
    return "\n".join(lines) + "\n"


def _to_int(v) -> int:
    if isinstance(v, bool):
        raise UsageError("matrix entries must be integers")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        return int(v, 10)
    raise UsageError(f"matrix entries must be integers, got {v!r}")


def parse_int_matrix(data) -> IntMatrix:
    """Decode an integer matrix from the JSON encoding (either the
    {"rows","cols","entries"} object or a bare list of rows)."""
    entries = data.get("entries") if isinstance(data, dict) else data
    if not isinstance(entries, list) or not entries:
        raise UsageError("expected a nonempty matrix")
    try:
        rows = [[_to_int(v) for v in row] for row in entries]
    except (TypeError, ValueError) as exc:
        raise UsageError(f"malformed integer matrix: {exc}") from exc
    if isinstance(data, dict):
        want = (data.get("rows"), data.get("cols"))
        have = (len(rows), len(rows[0]))
        if all(w is not None for w in want) and tuple(int(w) for w in want) != have:
            raise UsageError(f"matrix shape {have} does not match header {want}")
    return IntMatrix(rows)


def _to_complex(v) -> complex:
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return complex(float(v[0]), float(v[1]))
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, str):
        return complex(v)
    raise UsageError(f"cannot read complex value from {v!r}")


def parse_complex_matrix(data) -> tuple[tuple[complex, ...], ...]:
    """Decode a complex matrix: entries as [re, im] pairs of decimal
    strings (preferred) or bare numbers."""
    entries = data.get("entries") if isinstance(data, dict) else data
    if not isinstance(entries, list) or not entries:
        raise UsageError("expected a nonempty complex matrix")
    try:
        return tuple(tuple(_to_complex(v) for v in row) for row in entries)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"malformed complex matrix: {exc}") from exc


def parse_complex_pair(text: str) -> complex:
    """Decode "re,im" with decimal components."""
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"expected 're,im', got {text!r}")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise UsageError(f"malformed complex number {text!r}: {exc}") from exc
