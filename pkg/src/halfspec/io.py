"""CSV and JSON serialization of grid samples and twisted coefficients.

CSV: header ``j,re,im`` (grid) or ``k,re,im`` (coefficients).
JSON: ``{"N": int, "values": [[re, im], ...]}`` or ``{"K": int, "values": ...}``.
"""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import numpy as np

from .errors import ParseError
from .transform import GridSamples, ModeWindow, TwistedCoeffs


def _rows_to_csv(index_name: str, index, values) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([index_name, "re", "im"])
    for i, v in zip(index, values):
        writer.writerow([int(i), repr(float(v.real)), repr(float(v.imag))])
    return buf.getvalue()


def grid_to_csv(g: GridSamples) -> str:
    return _rows_to_csv("j", range(g.N), g.values)


def coeffs_to_csv(c: TwistedCoeffs) -> str:
    return _rows_to_csv("k", c.window.indices, c.values)


def grid_to_json(g: GridSamples) -> str:
    return json.dumps({"N": g.N, "values": [[v.real, v.imag] for v in g.values.tolist()]})


def coeffs_to_json(c: TwistedCoeffs) -> str:
    return json.dumps({"K": c.window.K, "values": [[v.real, v.imag] for v in c.values.tolist()]})


def _parse_csv(text: str, index_name: str) -> tuple[list[int], np.ndarray]:
    reader = csv.reader(io.StringIO(text))
    rows = list(reader)
    if not rows:
        raise ParseError("empty CSV input", 1)
    header = [h.strip() for h in rows[0]]
    if header != [index_name, "re", "im"]:
        raise ParseError(f"expected header '{index_name},re,im', got {','.join(header)!r}", 1)
    idx, vals = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 3:
            raise ParseError(f"expected 3 columns, got {len(row)}", lineno)
        try:
            idx.append(int(row[0]))
            vals.append(complex(float(row[1]), float(row[2])))
        except ValueError as exc:
            raise ParseError(f"bad number: {exc}", lineno) from None
    if not vals:
        raise ParseError("no data rows", 2)
    return idx, np.array(vals, dtype=complex)


def _parse_json(text: str, size_key: str) -> np.ndarray:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(obj, dict) or size_key not in obj or "values" not in obj:
        raise ParseError(f"JSON object must have keys {size_key!r} and 'values'")
    try:
        vals = np.array([complex(float(re), float(im)) for re, im in obj["values"]], dtype=complex)
        size = int(obj[size_key])
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed values: {exc}") from None
    expected = size if size_key == "N" else 2 * size
    if vals.size != expected:
        raise ParseError(f"{size_key}={size} implies {expected} values, found {vals.size}")
    return vals


def _detect_format(path: Path, fmt: str | None) -> str:
    if fmt:
        return fmt
    return "json" if path.suffix.lower() == ".json" else "csv"


def parse_grid(text: str, fmt: str = "csv") -> GridSamples:
    if fmt == "json":
        return GridSamples(_parse_json(text, "N"))
    idx, vals = _parse_csv(text, "j")
    if idx != list(range(len(idx))):
        raise ParseError("grid rows must be indexed j = 0..N-1 in order")
    return GridSamples(vals)


def parse_coeffs(text: str, fmt: str = "csv") -> TwistedCoeffs:
    if fmt == "json":
        vals = _parse_json(text, "K")
        return TwistedCoeffs(ModeWindow(vals.size // 2), vals)
    idx, vals = _parse_csv(text, "k")
    if len(idx) % 2:
        raise ParseError(f"coefficient count {len(idx)} is odd; windows hold 2K modes")
    w = ModeWindow(len(idx) // 2)
    if sorted(idx) != w.indices.tolist():
        raise ParseError(f"indices must cover -{w.K}..{w.K - 1} exactly once")
    order = np.argsort(idx)
    return TwistedCoeffs(w, vals[order])


def read_grid(path, fmt: str | None = None) -> GridSamples:
    path = Path(path)
    return parse_grid(path.read_text(), _detect_format(path, fmt))


def read_coeffs(path, fmt: str | None = None) -> TwistedCoeffs:
    path = Path(path)
    return parse_coeffs(path.read_text(), _detect_format(path, fmt))


def write_grid(g: GridSamples, path, fmt: str | None = None) -> None:
    path = Path(path)
    text = grid_to_json(g) if _detect_format(path, fmt) == "json" else grid_to_csv(g)
    path.write_text(text)


def write_coeffs(c: TwistedCoeffs, path, fmt: str | None = None) -> None:
    path = Path(path)
    text = coeffs_to_json(c) if _detect_format(path, fmt) == "json" else coeffs_to_csv(c)
    path.write_text(text)
