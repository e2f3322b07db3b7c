from __future__ import annotations

import json
from typing import Any, Dict, List, Sequence

from ..io.csvio import csv_text
from ..model.cases import VerificationCase
from ..model.errors import UsageError

FORMATS = ("json", "csv", "table")


def _fmt(v: Any) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "pass" if v else "FAIL"
    if isinstance(v, float):
        return f"{v:.10g}"
    return str(v)


def to_json(payload: Any) -> str:
    # key order is part of the report schema; never sort
    return json.dumps(payload, indent=2, allow_nan=True) + "\n"


def _line(vals: Sequence[str], widths: Sequence[int]) -> str:
    return "  ".join(v.ljust(w) for v, w in zip(vals, widths)).rstrip()


def text_table(columns: List[str], rows: List[List[Any]]) -> str:
    cells = [[_fmt(v) for v in r] for r in rows]
    widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(columns)]
    out = [_line(columns, widths), _line(["-" * w for w in widths], widths)]
    out.extend(_line(r, widths) for r in cells)
    return "\n".join(out) + "\n"


def render_cases(cases: Sequence[VerificationCase], fmt: str, metadata: Dict[str, Any] | None = None) -> str:
    if fmt == "json":
        payload: Any = [c.to_json_dict() for c in cases]
        if len(cases) == 1 and metadata is None:
            payload = payload[0]
        elif metadata is not None:
            payload = {"metadata": metadata, "cases": payload}
        return to_json(payload)
    if fmt == "csv":
        rows: List[dict] = []
        for c in cases:
            rows.extend(c.rows())
        return csv_text(rows, VerificationCase.csv_header())
    if fmt == "table":
        columns = ["case", "quantity", "expected", "got", "tol", "result"]
        rows_t: List[List[Any]] = []
        for c in cases:
            for q in c.quantities:
                rows_t.append([c.id, q.name, q.expected, q.got, q.tol, q.passed])
            if c.error:
                rows_t.append([c.id, "(case error)", None, None, None, c.error])
        passed = sum(1 for c in cases if c.passed)
        return text_table(columns, rows_t) + f"\n{passed}/{len(cases)} cases passed\n"
    raise UsageError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
