from __future__ import annotations

import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from pathlib import Path
from typing import List, Optional, Sequence

from .. import __version__
from ..config import Settings
from ..io.csvio import emit
from ..model.cases import VerificationCase
from ..model.errors import UsageError
from ..report.render import FORMATS, render_cases
from .cases import build_case, default_case_ids
from .tolerances import TABLE_VERSION

logger = logging.getLogger(__name__)


def run_case(case_id: str, settings: Optional[Settings] = None) -> VerificationCase:
    """Run one case; any failure is recorded on the case, unknown ids raise UsageError."""
    settings = settings or Settings()
    try:
        return build_case(case_id, settings)
    except UsageError:
        raise
    except Exception as e:
        logger.error("case %s failed: %s", case_id, e)
        return VerificationCase(id=case_id, error=f"{type(e).__name__}: {e}")


def run_cases(case_ids: Sequence[str], settings: Settings, jobs: int = 1) -> List[VerificationCase]:
    """Results come back in the order of case_ids regardless of jobs."""
    if jobs <= 1 or len(case_ids) <= 1:
        return [run_case(cid, settings) for cid in case_ids]
    with ProcessPoolExecutor(max_workers=min(jobs, len(case_ids))) as pool:
        return list(pool.map(run_case, case_ids, [settings] * len(case_ids)))


def run_all(
    *,
    case: Optional[str] = None,
    fmt: str = "json",
    out: Optional[Path] = None,
    settings: Optional[Settings] = None,
    metadata: bool = False,
    quiet: bool = False,
) -> int:
    """Run the selected case (or all), write the report, and return 0 iff every case passed."""
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    settings = settings or Settings()
    ids = [case] if case else default_case_ids(settings)
    # validate ids before spending time on the others
    for cid in ids:
        if cid.partition(":")[0] not in {"airy", "sho", "sho_shifted", "quartic", "box", "powerlaw", "general"}:
            raise UsageError(f"unknown case {cid!r}")

    cases = run_cases(ids, settings, settings.jobs)
    envelope = None
    if metadata:
        envelope = {
            "version": __version__,
            "tolerance_table": TABLE_VERSION,
            "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        }
    emit(render_cases(cases, fmt, envelope), out)

    failed = [c for c in cases if not c.passed]
    for c in failed:
        reason = c.error or ", ".join(q.name for q in c.failures())
        print(f"FAIL {c.id}: {reason}", file=sys.stderr)
    if out is not None and not quiet:
        print(f"Wrote verification report: {out} ({len(cases) - len(failed)}/{len(cases)} cases passed)")
    return 0 if not failed else 1
