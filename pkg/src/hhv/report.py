"""CSV / JSON rendering of report rows.

CSV prints floats with 12 significant digits; JSON keeps the shortest
round-trip representation of every double and carries ``"schema": 1``.
"""
from __future__ import annotations

import csv
import io
import json
import math
from enum import Enum
from typing import Dict, List, Sequence

SCHEMA_VERSION = 1


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.12g}"
    if isinstance(v, Enum):
        return str(v.value)
    return str(v)


def _json_cell(v):
    if isinstance(v, Enum):
        return v.value
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def render(rows: List[Dict], columns: Sequence[str], fmt: str = "csv", command: str = "") -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([_csv_cell(r.get(c)) for c in columns])
        return buf.getvalue()
    if fmt == "json":
        doc = {
            "schema": SCHEMA_VERSION,
            "command": command,
            "columns": list(columns),
            "rows": [{c: _json_cell(r.get(c)) for c in columns} for r in rows],
        }
        return json.dumps(doc, indent=2, allow_nan=False) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
