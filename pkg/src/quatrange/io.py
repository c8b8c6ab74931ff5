"""Matrix, region and sample files.

Matrices are read from JSON ``{"n": int, "entries": [[str | number, ...], ...]}``
or from a plain-text grid with one row per line (entries separated by
whitespace or commas, ``#`` starts a comment).  Numbers are written in
their shortest round-trip decimal form so that output is reproducible.
"""

from __future__ import annotations

import csv
import io
import json
import re
from pathlib import Path

import numpy as np

from .matrix import QMatrix
from .quaternion import Quaternion, format_quaternion, format_real, parse_quaternion
from .region import ConvexRegion, Kind


class MatrixFormatError(ValueError):
    """Malformed matrix file; ``line`` and ``column`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None, source: str = ""):
        self.line, self.column, self.source = line, column, source
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
        prefix = ":".join(p for p in (source, where) if p)
        super().__init__(f"{prefix}: {message}" if prefix else message)


def _locate(text: str, needle: str, start: int = 0) -> tuple[int | None, int | None]:
    pos = text.find(needle, start)
    if pos < 0:
        return None, None
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def _entry(value, text: str, row: int, col: int, source: str) -> Quaternion:
    try:
        if isinstance(value, bool):
            raise ValueError("booleans are not matrix entries")
        if isinstance(value, (int, float)):
            return Quaternion(float(value))
        if isinstance(value, str):
            return parse_quaternion(value)
        raise ValueError(f"unsupported entry type {type(value).__name__}")
    except ValueError as exc:
        line, column = _locate(text, json.dumps(value)) if isinstance(value, str) else (None, None)
        raise MatrixFormatError(f"entry [{row}][{col}] {value!r}: {exc}", line, column, source) from None


def parse_matrix_json(text: str, source: str = "") -> QMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(exc.msg, exc.lineno, exc.colno, source) from None
    if not isinstance(doc, dict) or "entries" not in doc:
        raise MatrixFormatError('expected an object with "n" and "entries"', 1, 1, source)
    rows = doc["entries"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise MatrixFormatError('"entries" must be a non-empty list of rows', *_locate(text, '"entries"'), source)
    n = doc.get("n", len(rows))
    if not isinstance(n, int) or n != len(rows):
        raise MatrixFormatError(f'"n" is {n!r} but there are {len(rows)} rows', *_locate(text, '"n"'), source)
    for r, row in enumerate(rows):
        if len(row) != n:
            raise MatrixFormatError(f"row {r} has {len(row)} entries, expected {n}", None, None, source)
    entries = [[_entry(v, text, r, c, source) for c, v in enumerate(row)] for r, row in enumerate(rows)]
    return QMatrix(entries)


_SPLIT = re.compile(r"[^\s,]+")


def parse_matrix_grid(text: str, source: str = "") -> QMatrix:
    rows: list[list[Quaternion]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = list(_SPLIT.finditer(line))
        if not tokens:
            continue
        row = []
        for m in tokens:
            try:
                row.append(parse_quaternion(m.group()))
            except ValueError as exc:
                raise MatrixFormatError(str(exc), lineno, m.start() + 1, source) from None
        if rows and len(row) != len(rows[0]):
            raise MatrixFormatError(f"row has {len(row)} entries, expected {len(rows[0])}", lineno, 1, source)
        rows.append(row)
    if not rows:
        raise MatrixFormatError("no matrix rows found", None, None, source)
    if len(rows) != len(rows[0]):
        raise MatrixFormatError(f"matrix is {len(rows)}x{len(rows[0])}, expected square", None, None, source)
    return QMatrix(rows)


def parse_matrix(text: str, source: str = "") -> QMatrix:
    if text.lstrip().startswith("{"):
        return parse_matrix_json(text, source)
    return parse_matrix_grid(text, source)


def load_matrix(path) -> QMatrix:
    path = Path(path)
    return parse_matrix(path.read_text(), str(path))


def matrix_to_json(A: QMatrix) -> str:
    entries = [[format_quaternion(A[r, c]) for c in range(A.n)] for r in range(A.n)]
    return json.dumps({"n": A.n, "entries": entries}) + "\n"


def matrix_to_grid(A: QMatrix) -> str:
    return "".join(" ".join(format_quaternion(A[r, c]) for c in range(A.n)) + "\n" for r in range(A.n))


def save_matrix(A: QMatrix, path) -> None:
    Path(path).write_text(matrix_to_json(A))


# ---------------------------------------------------------------------------


def region_to_csv(R: ConvexRegion) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["re", "im"])
    for z in R.vertices:
        writer.writerow([format_real(z.real), format_real(z.imag)])
    return buf.getvalue()


def region_descriptor(R: ConvexRegion) -> str:
    return json.dumps({"kind": R.kind.value, "tol": R.tol}) + "\n"


def region_from_csv(text: str, descriptor: str | None = None) -> ConvexRegion:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or [h.strip() for h in rows[0]] != ["re", "im"]:
        raise ValueError('region CSV must start with the header "re,im"')
    v = np.array([complex(float(a), float(b)) for a, b in rows[1:]])
    if descriptor is not None:
        meta = json.loads(descriptor)
        return ConvexRegion(Kind(meta["kind"]), v, float(meta["tol"]))
    kind = {1: Kind.POINT, 2: Kind.SEGMENT}.get(len(v), Kind.POLYGON)
    return ConvexRegion(kind, v)


def samples_to_csv(points: np.ndarray) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["a0", "a1", "a2", "a3"])
    for p in points:
        writer.writerow([format_real(x) for x in p])
    return buf.getvalue()


def samples_from_csv(text: str) -> np.ndarray:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != ["a0", "a1", "a2", "a3"]:
        raise ValueError('sample CSV must start with the header "a0,a1,a2,a3"')
    return np.array([[float(x) for x in row] for row in rows[1:]]).reshape(-1, 4)
