"""Command-line harness: run verification suites and write JSON or CSV reports.

Exit codes: 0 when every check passes, 1 when any check fails, 2 on a
configuration or I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import __version__
from .cg import cg_dqa, cg_suq2
from .errors import ConfigError, EmptyReport
from .qfunc import QParams
from .report import CheckReport
from .suites import SUITES, SuiteConfig, colour_string, r_matrix_dump, run_suites

__all__ = ["main", "build_parser", "config_from_args", "build_document", "dumps_canonical",
           "emit_report", "load_report", "reports_from_document", "stable_view"]

SCHEMA_VERSION = "1"


# --- serialization ------------------------------------------------------------

def _float_text(x: float) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    if x == int(x) and abs(x) < 1e16:
        return f"{x:.1f}"
    return format(x, ".17g")


def dumps_canonical(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON text with sorted keys and floats written with 17 significant digits."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _float_text(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps_canonical(obj[k], indent, _level + 1)}"
                 for k in sorted(obj, key=str)]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(dumps_canonical(v) for v in obj) + "]"
        items = [pad + dumps_canonical(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if hasattr(obj, "item"):  # numpy scalars
        return dumps_canonical(obj.item(), indent, _level)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def build_document(reports: list[CheckReport], cfg: SuiteConfig, matrices: list | None = None) -> dict:
    if not reports:
        raise EmptyReport("no checks to report")
    doc = {
        "version": SCHEMA_VERSION,
        "config": cfg.to_dict(),
        "checks": [r.to_dict() for r in reports],
        "summary": {
            "total": len(reports),
            "passed": sum(r.passed for r in reports),
            "maxResidual": max(float(r.residual) for r in reports),
        },
    }
    if matrices is not None:
        doc["matrices"] = matrices
    return doc


_CSV_COLUMNS = ["suite", "name", "q", "N", "colours", "residual", "threshold", "pass", "elapsedMicros", "params"]


def _csv_text(reports: list[CheckReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(_CSV_COLUMNS)
    for r in reports:
        pr = dict(r.params)
        q = pr.pop("q", "")
        Ns = " ".join(str(n) for n in pr.pop("N", []))
        cols = colour_string(pr.pop("colours", []))
        w.writerow([r.suite, r.name, _float_text(q) if q != "" else "", Ns, cols,
                    _float_text(r.residual), _float_text(r.threshold), int(r.passed),
                    r.elapsed_micros, dumps_canonical(pr, indent=0).replace("\n", "")])
    return buf.getvalue()


def emit_report(reports: list[CheckReport], cfg: SuiteConfig, matrices: list | None = None,
                stream=None) -> str:
    """Serialize ``reports`` per ``cfg.format`` and write to ``cfg.out`` (stdout when unset or "-")."""
    if not reports:
        raise EmptyReport("no checks to report")
    if cfg.format == "json":
        text = dumps_canonical(build_document(reports, cfg, matrices)) + "\n"
    else:
        text = _csv_text(reports)
    if cfg.out in (None, "-"):
        (stream or sys.stdout).write(text)
    else:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


def load_report(text: str) -> dict:
    return json.loads(text)


def reports_from_document(doc: dict) -> list[CheckReport]:
    out = []
    for d in doc["checks"]:
        r = CheckReport.from_dict(d)
        r.suite = d.get("suite", "")
        out.append(r)
    return out


def stable_view(text: str) -> str:
    """Canonical JSON with every elapsedMicros field removed, for determinism comparisons."""
    doc = load_report(text)
    for c in doc.get("checks", []):
        c.pop("elapsedMicros", None)
    return dumps_canonical(doc)


# --- argument handling --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="colourhopf",
        description="Verify the su_q(2) / A_q^+(1) representation identities over a parameter grid.")
    ap.add_argument("--q", action="append", type=float, dest="q_values", metavar="Q",
                    help="deformation parameter in (0, 1); repeatable (default 0.5 and 0.8)")
    ap.add_argument("--n-max", type=int, default=3, help="largest irrep label N (default 3)")
    ap.add_argument("--tol", type=float, default=1e-9, help="base tolerance (default 1e-9)")
    ap.add_argument("--suite", action="append", choices=SUITES, dest="suites",
                    help="suite to run; repeatable (default: all)")
    ap.add_argument("--colours", action="append", default=[], metavar="PATTERN",
                    help="keep only colour tuples matching this glob over '+'/'-' strings, "
                         "e.g. '++*'; repeatable")
    ap.add_argument("--out", default="-", help="output path, '-' for stdout (default)")
    ap.add_argument("--format", choices=("json", "csv"), default="json")
    ap.add_argument("--dump-matrices", action="store_true", help="include dense R-matrices in JSON output")
    ap.add_argument("--perturb", type=float, default=0.0, metavar="EPS",
                    help="negative control: add EPS to one J0 matrix entry of every irrep")
    ap.add_argument("--no-timing", action="store_true", help="write elapsedMicros as 0")
    ap.add_argument("--workers", type=int, default=4, help="thread pool size (default 4)")
    ap.add_argument("--cg-table", nargs=2, type=int, metavar=("N1", "N2"),
                    help="write the Wigner-coefficient table for N1 x N2 instead of running suites")
    ap.add_argument("--cg-colours", default=None, metavar="ZED",
                    help="colours (zeta, eta, delta) for --cg-table as e.g. '+-+'; omit for su_q(2)")
    ap.add_argument("--quiet", action="store_true", help="suppress the summary line on stderr")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return ap


def config_from_args(args: argparse.Namespace) -> SuiteConfig:
    return SuiteConfig(
        q_values=tuple(args.q_values) if args.q_values else (0.5, 0.8),
        n_max=args.n_max, colour_filter=tuple(args.colours), tol=args.tol,
        suites=tuple(args.suites) if args.suites else SUITES, out=args.out, format=args.format,
        dump_matrices=args.dump_matrices, perturb=args.perturb, timing=not args.no_timing,
        workers=args.workers,
    )


def _parse_colours(s: str) -> tuple[int, int, int]:
    if len(s) != 3 or set(s) - {"+", "-"}:
        raise ConfigError(f"--cg-colours needs three of '+'/'-', got {s!r}")
    return tuple(1 if c == "+" else -1 for c in s)


def _write_cg_table(args, cfg: SuiteConfig) -> int:
    N1, N2 = args.cg_table
    if N1 < 0 or N2 < 0:
        raise ConfigError("--cg-table labels must be nonnegative")
    p = QParams(cfg.q_values[0], cfg.tol)
    if args.cg_colours:
        table = cg_dqa(N1, N2, *_parse_colours(args.cg_colours), p)
    else:
        table = cg_suq2(N1, N2, p)
    text = table.to_csv() if cfg.format == "csv" else dumps_canonical(table.to_dict()) + "\n"
    if cfg.out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        if args.cg_table:
            return _write_cg_table(args, cfg)
        reports = run_suites(cfg)
        matrices = r_matrix_dump(cfg) if cfg.dump_matrices and cfg.format == "json" else None
        emit_report(reports, cfg, matrices)
    except (ConfigError, EmptyReport, OSError) as exc:
        print(f"colourhopf: error: {exc}", file=sys.stderr)
        return 2
    passed = sum(r.passed for r in reports)
    if not args.quiet:
        worst = max(r.residual for r in reports)
        print(f"colourhopf: {passed}/{len(reports)} checks passed, max residual {worst:.3e}", file=sys.stderr)
    return 0 if passed == len(reports) else 1


if __name__ == "__main__":
    sys.exit(main())
