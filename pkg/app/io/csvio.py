from __future__ import annotations

import csv
import io
import re
import sys
from pathlib import Path
from typing import List, Optional, TextIO, Tuple

from ..model.errors import UsageError

_SPLIT = re.compile(r"[,\s;]+")


def read_samples(path: Path) -> Tuple[List[float], List[float]]:
    """
    Two-column x, V table. Comma or whitespace separated; '#' comments, blank lines and a
    non-numeric header row are skipped.
    """
    if not path.exists():
        raise UsageError(f"potential table not found: {path}")
    xs: List[float] = []
    vs: List[float] = []
    with path.open("r", encoding="utf-8", errors="replace") as f:
        for lineno, raw in enumerate(f, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            cols = [c for c in _SPLIT.split(line) if c]
            try:
                x, v = float(cols[0]), float(cols[1])
            except (ValueError, IndexError):
                if not xs:
                    continue  # header
                raise UsageError(f"{path}:{lineno}: expected two numeric columns, got {raw.strip()!r}") from None
            xs.append(x)
            vs.append(v)
    return xs, vs


def _clean(rows: List[dict], header: List[str]) -> List[dict]:
    return [{k: (r.get(k, "") if r.get(k, "") is not None else "") for k in header} for r in rows]


def write_csv_stream(stream: TextIO, rows: List[dict], header: List[str]) -> None:
    w = csv.DictWriter(stream, fieldnames=header, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for r in _clean(rows, header):
        w.writerow(r)


def csv_text(rows: List[dict], header: List[str]) -> str:
    buf = io.StringIO()
    write_csv_stream(buf, rows, header)
    return buf.getvalue()


def emit(text: str, out: Optional[Path]) -> None:
    """Write text to `out`, or to stdout when no path is given."""
    if out is None:
        sys.stdout.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
