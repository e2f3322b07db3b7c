# confsum/cli.py

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional

from . import __version__
from .config import Settings, load_settings
from .io.specstring import parse_potential
from .model.errors import DomainError, SumRuleError, UsageError
from .model.potentials import PotentialSpec
from .report.pipeline import run_airy_zeros, run_closed_form, run_greens, run_spectrum, run_sum_report
from .verify.pipeline import run_all

_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--quiet",
        action="store_true",
        help="Suppress progress output (errors still printed).",
    )
    p.add_argument("--log-level", choices=_LEVELS, default=None, help="Logging level on stderr (default INFO, WARNING with --quiet)")
    p.add_argument("--config", default=None, help="key = value settings file; command-line flags win")


def _add_out(p: argparse.ArgumentParser, what: str) -> None:
    p.add_argument("--out", default=None, help=f"File to write the {what} to (defaults to stdout)")


def _configure_logging(args: argparse.Namespace) -> None:
    level = args.log_level or ("WARNING" if args.quiet else "INFO")
    logging.basicConfig(
        level=getattr(logging, level),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _settings(args: argparse.Namespace, **overrides) -> Settings:
    path = Path(args.config).resolve() if args.config else None
    return load_settings(path).merged(**overrides)


def _out(args: argparse.Namespace) -> Optional[Path]:
    return Path(args.out).resolve() if args.out else None


def _powerlaw_or_potential(args: argparse.Namespace, settings: Settings) -> PotentialSpec:
    if getattr(args, "potential", None):
        return parse_potential(args.potential)
    return PotentialSpec.power_law(settings.N, settings.gamma)


# -----------------------
# command implementations
# -----------------------

def _cmd_closed_form(args: argparse.Namespace) -> int:
    settings = _settings(args, N=args.N, gamma=args.gamma)
    return run_closed_form(N=settings.N, gamma=settings.gamma, out=_out(args), quiet=args.quiet)


def _cmd_spectrum(args: argparse.Namespace) -> int:
    settings = _settings(args)
    return run_spectrum(
        spec=parse_potential(args.potential),
        parity=args.parity,
        count=args.count,
        settings=settings,
        out=_out(args),
        quiet=args.quiet,
    )


def _cmd_report(args: argparse.Namespace) -> int:
    settings = _settings(args, N=args.N, gamma=args.gamma, terms=args.terms, order=args.order)
    return run_sum_report(
        spec=_powerlaw_or_potential(args, settings),
        terms=settings.terms,
        order=settings.order,
        settings=settings,
        out=_out(args),
        quiet=args.quiet,
    )


def _cmd_greens(args: argparse.Namespace) -> int:
    settings = _settings(args, greens_points=args.points)
    return run_greens(
        spec=parse_potential(args.potential),
        settings=settings,
        second_order=args.second_order,
        out=_out(args),
        quiet=args.quiet,
    )


def _cmd_airy_zeros(args: argparse.Namespace) -> int:
    return run_airy_zeros(count=args.count, out=_out(args), quiet=args.quiet)


def _cmd_verify(args: argparse.Namespace) -> int:
    settings = _settings(args, jobs=args.jobs)
    return run_all(
        case=args.case,
        fmt=args.format,
        out=_out(args),
        settings=settings,
        metadata=args.metadata,
        quiet=args.quiet,
    )


# -----------------------
# parser wiring
# -----------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="confsum",
        description="Spectral sum rules for confining potentials: closed forms, spectra, Green's functions, verification",
    )
    p.add_argument("--version", action="store_true", help="Print version and exit.")

    sub = p.add_subparsers(dest="cmd")

    # closed-form
    pc = sub.add_parser("closed-form", help="Closed-form S, S1, S2 for V = gamma |x|^N (JSON).")
    pc.add_argument("--N", type=float, default=None, help="Power-law exponent (default from config, else 3)")
    pc.add_argument("--gamma", type=float, default=None, help="Potential strength (default 1)")
    _add_out(pc, "JSON")
    _add_common_flags(pc)
    pc.set_defaults(_fn=_cmd_closed_form)

    # spectrum
    ps = sub.add_parser("spectrum", help="Eigenvalues by Numerov shooting (CSV).")
    ps.add_argument("--potential", required=True, help="powerlaw:N=<real>[,gamma=<real>] | sho_shifted | box:half_width=<real> | file:<path>")
    ps.add_argument("--parity", choices=("even", "odd", "both"), default="both", help="Parity ladder(s) to solve (default both)")
    ps.add_argument("--count", type=int, default=10, help="Eigenvalues per parity (default 10)")
    _add_out(ps, "CSV")
    _add_common_flags(ps)
    ps.set_defaults(_fn=_cmd_spectrum)

    # report
    pr = sub.add_parser("report", help="Partial sums plus tails against the closed form (JSON).")
    pr.add_argument("--N", type=float, default=None, help="Power-law exponent (default from config, else 3)")
    pr.add_argument("--gamma", type=float, default=None, help="Potential strength (default 1)")
    pr.add_argument("--potential", default=None, help="Any potential spec-string; overrides --N/--gamma")
    pr.add_argument("--terms", type=int, default=None, help="Highest exact index k per ladder (default 10)")
    pr.add_argument("--order", type=int, default=None, help="Inverse power p of the eigenvalues (default 1)")
    _add_out(pr, "JSON")
    _add_common_flags(pr)
    pr.set_defaults(_fn=_cmd_report)

    # greens
    pg = sub.add_parser("greens", help="Zero-energy Green's function diagonal (CSV) and its integrals.")
    pg.add_argument("--potential", required=True, help="Potential spec-string")
    pg.add_argument("--second-order", action="store_true", help="Also evaluate the sums of 1/lambda^2 per parity")
    pg.add_argument("--points", type=int, default=None, help="Grid points (odd; default 4001)")
    _add_out(pg, "CSV")
    _add_common_flags(pg)
    pg.set_defaults(_fn=_cmd_greens)

    # airy-zeros
    pa = sub.add_parser("airy-zeros", help="Zeros of Ai and Ai' (CSV).")
    pa.add_argument("--count", type=int, default=10, help="Zeros of each function (default 10)")
    _add_out(pa, "CSV")
    _add_common_flags(pa)
    pa.set_defaults(_fn=_cmd_airy_zeros)

    # verify
    pv = sub.add_parser("verify", help="Run verification cases; exit 0 iff all pass.")
    pv.add_argument("--case", default=None, help="airy | sho | sho_shifted | quartic | box | powerlaw:<N> | general:<spec> (default all)")
    pv.add_argument("--format", choices=("json", "csv", "table"), default="json", help="Report format (default json)")
    pv.add_argument("--jobs", type=int, default=None, help="Run cases in this many worker processes")
    pv.add_argument("--metadata", action="store_true", help="Wrap the JSON report in an envelope with version and timestamp")
    _add_out(pv, "report")
    _add_common_flags(pv)
    pv.set_defaults(_fn=_cmd_verify)

    return p


# -----------------------
# entrypoint
# -----------------------

def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.version:
        print(__version__)
        return 0

    if not getattr(args, "cmd", None):
        parser.print_help(sys.stderr)
        return 2

    fn = getattr(args, "_fn", None)
    if fn is None:
        parser.print_help(sys.stderr)
        return 2

    _configure_logging(args)
    try:
        return int(fn(args))
    except (UsageError, DomainError) as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return 2
    except SumRuleError as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        print("Interrupted.", file=sys.stderr)
        return 130
