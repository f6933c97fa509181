"""Command-line front end: list the identity catalog, run verifications,
emit machine-readable reports, and run the acceptance self-test suite.

Exit codes for ``verify``: 0 pass, 1 verdict fail, 2 parameter validation
failure, 3 numeric-path failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from pathlib import Path

from . import acceptance, engine
from .core import DomainError, ParameterSet, Tolerances
from .quad import QmcSpec

_PARAM_NAMES = ("k", "a", "m", "u", "v", "mu", "nu")
_COMPLEX_RE = re.compile(
    r"^(?P<re>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"(?:(?P<im>[+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i)?$"
)


def parse_complex(text: str) -> complex:
    """Parse ``re``, ``re+imi`` or ``re-imi`` literals (no expressions)."""
    s = text.strip().replace(" ", "")
    match = _COMPLEX_RE.match(s)
    if not match:
        raise DomainError(
            f"cannot parse complex literal {text!r}; use forms like 0.5, -2, 0.3+0.4i, 1e-3-2.5i"
        )
    re_part = float(match.group("re"))
    im_part = float(match.group("im")) if match.group("im") else 0.0
    return complex(re_part, im_part)


def _read_config(path: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise DomainError(f"config line not of the form key = value: {raw!r}")
        key, _, value = line.partition("=")
        out[key.strip().replace("-", "_")] = value.strip()
    return out


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sixfold",
        description="Multi-path verification of the six-fold log-kernel Legendre "
        "integral family and its Lerch-zeta closed forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="list the identity catalog")
    p_list.add_argument("--case", default=None, help="show only this case tag")
    p_list.add_argument("--format", choices=("text", "json"), default="text")

    p_verify = sub.add_parser("verify", help="verify one identity case")
    p_verify.add_argument("--case", required=False, default=None, help="case tag (default theorem)")
    for name in _PARAM_NAMES:
        p_verify.add_argument(f"--{name}", default=None, help=f"parameter {name} (complex literal)")
    p_verify.add_argument("--n", default=None, help="second exponent for difference cases")
    p_verify.add_argument("--paths", default=None, help="comma-separated path subset")
    p_verify.add_argument("--tol", default=None, help="relative tolerance (default 1e-8)")
    p_verify.add_argument("--abs-tol", default=None, help="absolute tolerance (default 1e-12)")
    p_verify.add_argument("--qmc-count", default=None, help="Sobol points per replicate (power of two)")
    p_verify.add_argument("--seed", default=None, help="digital-shift seed")
    p_verify.add_argument("--format", choices=("text", "json", "csv"), default=None)
    p_verify.add_argument("--output", default=None, help="write the report here instead of stdout")
    p_verify.add_argument("--config", default=None, help="key = value file mirroring the flags")
    p_verify.add_argument("--timings", action="store_true", help="include wall times in the report")

    p_self = sub.add_parser("selftest", help="run the acceptance suite")
    p_self.add_argument("--only", default=None, help="run only criteria whose name contains this")
    return parser


def _merge_config(args: argparse.Namespace) -> argparse.Namespace:
    if getattr(args, "config", None):
        cfg = _read_config(args.config)
        for key, value in cfg.items():
            if not hasattr(args, key):
                raise DomainError(f"unknown config key {key!r}")
            if getattr(args, key) is None:
                setattr(args, key, value)
    return args


def _cmd_list(args: argparse.Namespace) -> int:
    cases = engine.CATALOG
    if args.case:
        cases = tuple(c for c in cases if c.tag == args.case)
        if not cases:
            print(f"unknown case {args.case!r}", file=sys.stderr)
            return 2
    if args.format == "json":
        payload = [
            {
                "tag": c.tag,
                "label": c.label,
                "constraints": c.constraints,
                "paths": list(c.paths),
            }
            for c in cases
        ]
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for c in cases:
            print(f"{c.tag:20s} {c.label}")
            print(f"{'':20s}   constraints: {c.constraints}")
            print(f"{'':20s}   paths: {', '.join(c.paths)}")
    return 0


def _render_text(report) -> str:
    lines = [f"case: {report.case}   verdict: {report.verdict}"]
    ps = report.params
    lines.append(
        "params: "
        + ", ".join(f"{n}={getattr(ps, n):.6g}" for n in _PARAM_NAMES)
        + ("" if report.second_exponent is None else f", n={report.second_exponent:.6g}")
    )
    if report.violations:
        lines.append("violations: " + "; ".join(report.violations))
    for warning in report.warnings:
        lines.append(f"warning: {warning}")
    for name, res in report.paths.items():
        if res.status == "ok":
            err = "" if res.err is None else f"  (err est {res.err:.2e})"
            lines.append(f"  {name:8s} {res.value:.15g}{err}   [{res.seconds:.3f}s]")
        else:
            lines.append(f"  {name:8s} {res.status}: {res.detail}")
    for pair, d in report.diffs.items():
        lines.append(f"  diff {pair}: abs {d['abs']:.3e}  rel {d['rel']:.3e}")
    return "\n".join(lines)


def _write_output(text: str, args: argparse.Namespace) -> None:
    if args.output:
        path = Path(args.output)
        if not path.is_absolute():
            base = os.environ.get("SIXFOLD_OUTPUT_DIR")
            if base:
                path = Path(base) / path
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n")
    else:
        print(text)


def _cmd_verify(args: argparse.Namespace) -> int:
    args = _merge_config(args)
    if args.case is None:
        args.case = "theorem"
    if args.format is None:
        args.format = "text"
    params: dict[str, complex] = {}
    for name in _PARAM_NAMES:
        value = getattr(args, name)
        if value is not None:
            params[name] = parse_complex(str(value))
    ps = ParameterSet(**params)
    second = parse_complex(str(args.n)) if args.n is not None else None
    rel = float(args.tol) if args.tol is not None else 1e-8
    abs_tol = float(args.abs_tol) if args.abs_tol is not None else 1e-12
    paths = tuple(p.strip() for p in args.paths.split(",")) if args.paths else None
    qmc_spec = None
    if args.qmc_count is not None or args.seed is not None:
        qmc_spec = QmcSpec(
            count=int(args.qmc_count) if args.qmc_count is not None else 1 << 16,
            shift_seed=int(args.seed) if args.seed is not None else 0,
        )

    report = engine.verify(
        args.case,
        ps,
        tol=Tolerances(abs_tol=abs_tol, rel_tol=rel),
        paths=paths,
        second=second,
        qmc_spec=qmc_spec,
    )

    if args.format == "json":
        text = json.dumps(
            engine.report_to_dict(report, include_times=args.timings),
            indent=2,
            sort_keys=True,
        )
    elif args.format == "csv":
        buffer = io.StringIO()
        rows = engine.report_to_csv_rows(report)
        writer = csv.DictWriter(buffer, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)
        text = buffer.getvalue().rstrip("\n")
    else:
        text = _render_text(report)
    _write_output(text, args)

    if report.verdict == "invalid_parameters":
        return 2
    if any(r.status == "error" for r in report.paths.values()):
        return 3
    return 0 if report.verdict == "pass" else 1


def _cmd_selftest(args: argparse.Namespace) -> int:
    results = acceptance.run_suite(only=args.only)
    if not results:
        print(f"no criteria match {args.only!r}", file=sys.stderr)
        return 2
    all_ok = True
    for res in results:
        mark = "PASS" if res.passed else "FAIL"
        all_ok = all_ok and res.passed
        print(f"{mark}  {res.name}  [{res.seconds:.1f}s]")
        print(f"      {res.detail}")
    return 0 if all_ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "list":
            return _cmd_list(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "selftest":
            return _cmd_selftest(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
