"""Reading relations and writing/reading the border, cell and emergence documents."""

from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction
from pathlib import Path

from .borders import Border
from .cubes import EmergenceEntry
from .errors import ArityError, ConfigurationError, DataError
from .lattice import ALL, BOTTOM, Relation, Schema

FORMATS = ("json", "table", "csv")


def load_relation(path, measure: str | None = None, delimiter: str = ",") -> Relation:
    """Read a delimited file with a header row.

    Every column except ``measure`` is a dimension, in header order.  When
    ``measure`` is omitted the last column is used.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8-sig")
    except FileNotFoundError:
        raise ConfigurationError(f"no such file: {path}") from None
    except UnicodeDecodeError as exc:
        raise DataError(f"{path}: not valid UTF-8 ({exc})") from None
    return parse_relation(text, measure, delimiter, source=str(path))


def parse_relation(text: str, measure: str | None = None, delimiter: str = ",",
                   source: str = "<input>") -> Relation:
    reader = csv.reader(io.StringIO(text), delimiter=delimiter)
    try:
        header = [h.strip() for h in next(reader)]
    except StopIteration:
        raise DataError(f"{source}: empty file") from None
    if measure is None:
        measure = header[-1]
    if measure not in header:
        raise DataError(f"{source}: measure column {measure!r} not in header {header}")
    m = header.index(measure)
    dims = tuple(h for i, h in enumerate(header) if i != m)
    rows = []
    for lineno, record in enumerate(reader, start=2):
        if not record or all(not field.strip() for field in record):
            continue
        if len(record) != len(header):
            raise DataError(f"{source}:{lineno}: expected {len(header)} fields, got {len(record)}")
        record = [field.strip() for field in record]
        try:
            value = Fraction(record[m])
        except (ValueError, ZeroDivisionError):
            raise DataError(f"{source}:{lineno}: measure {record[m]!r} is not a number") from None
        if value <= 0:
            raise DataError(f"{source}:{lineno}: measure must be strictly positive, got {record[m]}")
        labels = tuple(f for i, f in enumerate(record) if i != m)
        if ALL in labels:
            raise DataError(f"{source}:{lineno}: label {ALL!r} is reserved")
        rows.append((labels, value))
    if not rows:
        raise DataError(f"{source}: no data rows")
    try:
        return Relation(Schema(dims, measure), tuple(rows))
    except DataError as exc:
        raise DataError(f"{source}: {exc}") from None


def parse_tuple(text: str, arity: int):
    """``ALL,Marseille,ALL`` -> tuple; ``BOTTOM`` -> the empty tuple."""
    if text.strip().upper() == "BOTTOM":
        return BOTTOM
    labels = tuple(next(csv.reader([text])))
    labels = tuple(label.strip() for label in labels)
    if len(labels) != arity:
        raise ArityError(f"tuple {text!r} has {len(labels)} labels, schema has {arity}")
    return labels


def fraction_text(x) -> str:
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return str(Fraction(x))


def parse_rate(text: str):
    return math.inf if text == "inf" else Fraction(text)


def tuple_doc(t):
    return None if t is BOTTOM else list(t)


def doc_tuple(d):
    return BOTTOM if d is None else tuple(d)


def border_doc(border: Border, dimensions=None, constraint=None) -> dict:
    doc = {}
    if dimensions is not None:
        doc["dimensions"] = list(dimensions)
    if constraint is not None:
        doc["constraint"] = str(constraint)
    doc["G"] = [tuple_doc(t) for t in border.G]
    doc["S"] = [tuple_doc(t) for t in border.S]
    return doc


def border_from_doc(doc: dict) -> Border:
    try:
        return Border([doc_tuple(t) for t in doc["G"]], [doc_tuple(t) for t in doc["S"]])
    except (KeyError, TypeError) as exc:
        raise DataError(f"malformed border document: {exc}") from None


def cells_doc(cells) -> list:
    return [{"tuple": tuple_doc(c.tuple), "value": fraction_text(c.value)} for c in cells]


def report_doc(entries) -> list:
    return [{"tuple": tuple_doc(e.tuple), "rate": fraction_text(e.rate)} for e in entries]


def report_from_doc(doc: list) -> list:
    return [EmergenceEntry(doc_tuple(e["tuple"]), parse_rate(e["rate"])) for e in doc]


def _compact(value) -> str:
    return json.dumps(value, ensure_ascii=False)


def _block(items, indent) -> str:
    if not items:
        return "[]"
    pad = " " * indent
    inner = (",\n" + pad + "  ").join(_compact(x) for x in items)
    return "[\n" + pad + "  " + inner + "\n" + pad + "]"


def dumps(doc) -> str:
    """JSON with one tuple (or record) per line; stable for golden files."""
    if isinstance(doc, list):
        return _block(doc, 0) + "\n"
    lines = []
    for key, value in doc.items():
        rendered = _block(value, 2) if isinstance(value, list) and key != "dimensions" \
            else _compact(value)
        lines.append(f"  {_compact(key)}: {rendered}")
    return "{\n" + ",\n".join(lines) + "\n}\n"


def load_border(path):
    """Border and dimension names (``None`` if absent) from a saved document."""
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise DataError(f"cannot read border document {path}: {exc}") from None
    return border_from_doc(doc), doc.get("dimensions")


def aligned(header, rows) -> str:
    """Plain aligned table; every column left-justified to its widest cell."""
    rows = [[str(c) for c in row] for row in rows]
    widths = [len(h) for h in header]
    for row in rows:
        for i, c in enumerate(row):
            widths[i] = max(widths[i], len(c))
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows)
    return "\n".join(lines) + "\n"


def tuple_cells(t, arity):
    if t is BOTTOM:
        return ["⟨∅⟩"] + [""] * (arity - 1)
    return list(t)


def border_table(border: Border, dimensions) -> str:
    arity = len(dimensions)
    rows = [["G"] + tuple_cells(t, arity) for t in border.G]
    rows += [["S"] + tuple_cells(t, arity) for t in border.S]
    return aligned(["border"] + list(dimensions), rows)


def border_csv(border: Border, dimensions) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["border"] + list(dimensions))
    arity = len(dimensions)
    for name, side in (("G", border.G), ("S", border.S)):
        for t in side:
            w.writerow([name] + (["BOTTOM"] + [""] * (arity - 1) if t is BOTTOM else list(t)))
    return buf.getvalue()


def rows_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cells_rows(cells, arity):
    return [tuple_cells(c.tuple, arity) + [fraction_text(c.value)] for c in cells]


def report_rows(entries, arity):
    return [tuple_cells(e.tuple, arity) + [fraction_text(e.rate)] for e in entries]
