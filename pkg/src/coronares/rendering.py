"""Presentation of exact results: labels, fraction/decimal cells, and the
table/CSV/JSON serializers.

All arithmetic stays exact until this boundary. Decimal rendering rounds
half away from zero at a declared number of places; exact rendering is
bit-stable, so identical inputs serialize to identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Union

from .errors import CoronaresError
from .linalg import Matrix
from .service.schemas import (
    Document,
    GraphDocument,
    MatrixDocument,
    VerifyDocument,
)

FORMATS = ("table", "csv", "json")

Cell = Union[str, float]


def format_fraction(x: Fraction) -> str:
    """'p/q', or a bare integer when the denominator is 1."""
    return str(x)


def format_decimal(x: Fraction, decimals: int) -> str:
    """Fixed-point string with `decimals` places, rounding half away from zero."""
    p, q = abs(x.numerator), x.denominator
    scaled, rem = divmod(p * 10**decimals, q)
    if 2 * rem >= q:
        scaled += 1
    sign = "-" if x < 0 and scaled else ""
    if decimals == 0:
        return f"{sign}{scaled}"
    digits = str(scaled).rjust(decimals + 1, "0")
    return f"{sign}{digits[:-decimals]}.{digits[-decimals:]}"


def matrix_cells(m: Matrix, values: str, decimals: int) -> list[list[Cell]]:
    """Matrix entries as document cells: fraction strings or rounded floats."""
    if values == "exact":
        return [[format_fraction(x) for x in m.row(i)] for i in range(m.rows)]
    return [
        [float(format_decimal(x, decimals)) for x in m.row(i)] for i in range(m.rows)
    ]


def partition_labels(n1: int, n2: int) -> list[str]:
    """Row labels under the product ordering: v1..v_{n1}, then w<j>^<i>."""
    labels = [f"v{i}" for i in range(1, n1 + 1)]
    for j in range(1, n2 + 1):
        labels += [f"w{j}^{i}" for i in range(1, n1 + 1)]
    return labels


def plain_labels(n: int) -> list[str]:
    return [f"v{i}" for i in range(1, n + 1)]


def serialize(doc: Document, fmt: str) -> bytes:
    """Render a document as table, csv or json bytes."""
    if fmt == "json":
        payload = doc.model_dump(exclude_none=True)
        return (json.dumps(payload, indent=2) + "\n").encode()
    if fmt == "csv":
        return _to_csv(doc).encode()
    if fmt == "table":
        return _to_table(doc).encode()
    raise CoronaresError(f"unknown format {fmt!r}")


def _cell_text(cell: Cell, decimals: int | None) -> str:
    if isinstance(cell, str):
        return cell
    return f"{cell:.{decimals}f}" if decimals is not None else str(cell)


def _to_csv(doc: Document) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if isinstance(doc, MatrixDocument):
        writer.writerow(doc.labels)
        for row in doc.matrix:
            writer.writerow(_cell_text(c, doc.decimals) for c in row)
    elif isinstance(doc, GraphDocument):
        writer.writerow(["u", "v"])
        for a, b in doc.edges:
            writer.writerow([a, b])
    elif isinstance(doc, VerifyDocument):
        writer.writerow(["check", "result"])
        for name, ok in doc.checks.items():
            writer.writerow([name, "PASS" if ok else "FAIL"])
        writer.writerow(["overall", "PASS" if doc.verified else "FAIL"])
    return buf.getvalue()


def _header_lines(doc: Document) -> list[str]:
    lines = [f"operation: {doc.operation}"]
    lines += [f"{key}: {value}" for key, value in doc.inputs.items()]
    return lines


def _to_table(doc: Document) -> str:
    if isinstance(doc, MatrixDocument):
        return _matrix_table(doc)
    if isinstance(doc, GraphDocument):
        lines = _header_lines(doc)
        lines.append(f"vertices: {doc.n}")
        lines.append(f"edges: {doc.m}")
        lines.append("labels: " + " ".join(doc.labels))
        lines.append(
            "edge list: " + ",".join(f"{a}-{b}" for a, b in doc.edges)
        )
        lines.append(f"spec: {doc.graph_spec}")
        return "\n".join(lines) + "\n"
    lines = _header_lines(doc)
    for name, ok in doc.checks.items():
        lines.append(f"{name}: {'PASS' if ok else 'FAIL'}")
    lines.append(f"result: {'PASS' if doc.verified else 'FAIL'}")
    return "\n".join(lines) + "\n"


def _matrix_table(doc: MatrixDocument) -> str:
    lines = _header_lines(doc)
    if doc.verified is not None:
        lines.append(f"verified: {'PASS' if doc.verified else 'FAIL'}")
    lines.append("")
    cells = [[_cell_text(c, doc.decimals) for c in row] for row in doc.matrix]
    widths = [len(label) for label in doc.labels]
    for row in cells:
        for j, text in enumerate(row):
            widths[j] = max(widths[j], len(text))
    gutter = max(len(label) for label in doc.labels)
    header = " " * gutter + "  " + "  ".join(
        label.rjust(w) for label, w in zip(doc.labels, widths)
    )
    lines.append(header)
    for label, row in zip(doc.labels, cells):
        lines.append(
            label.ljust(gutter)
            + "  "
            + "  ".join(text.rjust(w) for text, w in zip(row, widths))
        )
    return "\n".join(lines) + "\n"
