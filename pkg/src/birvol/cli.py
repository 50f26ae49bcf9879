"""Command-line front end: ``birvol verify-paper``, ``birvol run``, ``birvol list``.

Exit status is 0 when every check passes, 1 when some check fails and 2 on
a usage, parse or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Iterable, Sequence, TextIO

from . import __version__
from .dsl import DslSyntaxError, DslValidationError, parse, print_program, run_program
from .scenario import CheckResult, get_scenario, list_scenarios, run_scenario

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2

# field order of a JSON-lines record; "diagnostic" only appears on failures
JSON_FIELDS = ("scenario", "check", "pass", "citation", "millis", "diagnostic")


def record(r: CheckResult, timing: bool = True) -> dict:
    out = {
        "scenario": r.scenario,
        "check": r.check,
        "pass": r.passed,
        "citation": r.citation,
        "millis": round(r.millis, 3) if timing else 0.0,
    }
    if r.diagnostic and not r.passed:
        out["diagnostic"] = r.diagnostic
    return out


def emit(results: Iterable[CheckResult], out: TextIO, *, as_json: bool, timing: bool) -> int:
    results = list(results)
    failed = 0
    for r in results:
        failed += not r.passed
        if as_json:
            out.write(json.dumps(record(r, timing), ensure_ascii=False) + "\n")
            continue
        mark = "PASS" if r.passed else "FAIL"
        line = f"{mark}  {r.scenario} :: {r.check}"
        if timing:
            line += f"  ({r.millis:.1f} ms)"
        out.write(line + "\n")
        if not r.passed:
            out.write(f"      {r.diagnostic}\n      cited: {r.citation}\n")
    if not as_json:
        scenarios = len({r.scenario for r in results})
        out.write(f"{len(results)} checks in {scenarios} scenario(s): "
                  f"{len(results) - failed} passed, {failed} failed\n")
    return EXIT_FAIL if failed else EXIT_OK


def _seed(text: str) -> int:
    try:
        v = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}") from None
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return v


def _common(top: bool) -> argparse.ArgumentParser:
    # subcommands repeat the flags without defaults, so `birvol --json run f`
    # and `birvol run f --json` mean the same thing
    d = (lambda v: v) if top else (lambda v: argparse.SUPPRESS)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--scenario", metavar="ID", action="append", default=d(None),
                   help="run only this built-in scenario (repeatable)")
    p.add_argument("--json", action="store_true", default=d(False),
                   help="emit one JSON object per check")
    p.add_argument("--seed", type=_seed, default=d(42), help="random seed (default 42)")
    p.add_argument("--no-timing", action="store_true", default=d(False),
                   help="omit timings so that reports are byte-stable")
    p.add_argument("--list", action="store_true", default=d(False),
                   help="list the built-in scenarios and exit")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common(False)
    ap = argparse.ArgumentParser(prog="birvol", parents=[_common(True)],
                                 description="Exact checks for volume-preserving birational maps.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command")
    sub.add_parser("verify-paper", parents=[common], help="run every built-in scenario")
    run = sub.add_parser("run", parents=[common], help="run a .cbk scenario file or built-in scenarios")
    run.add_argument("file", nargs="?", help="scenario file")
    sub.add_parser("list", parents=[common], help="list the built-in scenarios")
    fmt = sub.add_parser("fmt", help="print a scenario file in canonical form")
    fmt.add_argument("file")
    return ap


def _list(out: TextIO, as_json: bool) -> int:
    for sid, s in sorted(list_scenarios().items()):
        if as_json:
            out.write(json.dumps({"scenario": sid, "description": s.description,
                                  "checks": len(s.checks)}) + "\n")
        else:
            out.write(f"{sid:18} {len(s.checks):3} checks  {s.description}\n")
    return EXIT_OK


def _builtin(ids: Sequence[str] | None, seed: int, err: TextIO) -> list[CheckResult] | None:
    catalog = list_scenarios()
    ids = sorted(set(ids)) if ids else sorted(catalog)
    unknown = [i for i in ids if i not in catalog]
    if unknown:
        err.write(f"birvol: unknown scenario(s): {', '.join(unknown)}; try --list\n")
        return None
    results: list[CheckResult] = []
    for sid in ids:
        results.extend(run_scenario(get_scenario(sid), seed).results)
    return results


def _read(path: str, err: TextIO) -> str | None:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        err.write(f"birvol: cannot read {path}: {exc}\n")
        return None


def _file(path: str, seed: int, err: TextIO) -> list[CheckResult] | None:
    src = _read(path, err)
    if src is None:
        return None
    try:
        program = parse(src)
        return run_program(program, seed=seed, source_name=Path(path).name)
    except DslSyntaxError as exc:
        err.write(f"{path}:{exc}\n")
    except DslValidationError as exc:
        err.write(f"{path}:{exc}\n")
    return None


def main(argv: Sequence[str] | None = None, out: TextIO | None = None,
         err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    if args.list or args.command == "list":
        return _list(out, args.json)
    if args.command == "fmt":
        src = _read(args.file, err)
        if src is None:
            return EXIT_INVALID
        try:
            out.write(print_program(parse(src)))
        except DslSyntaxError as exc:
            err.write(f"{args.file}:{exc}\n")
            return EXIT_INVALID
        return EXIT_OK
    if args.command == "verify-paper" or (args.command == "run" and args.file is None):
        if args.command == "run" and not args.scenario:
            err.write("birvol run: give a scenario file or --scenario ID\n")
            return EXIT_INVALID
        results = _builtin(args.scenario, args.seed, err)
    elif args.command == "run":
        if args.scenario:
            err.write("birvol run: --scenario selects built-in scenarios; drop the file argument\n")
            return EXIT_INVALID
        results = _file(args.file, args.seed, err)
    else:
        ap.print_help(err)
        return EXIT_INVALID
    if results is None:
        return EXIT_INVALID
    return emit(results, out, as_json=args.json, timing=not args.no_timing)


if __name__ == "__main__":
    raise SystemExit(main())
