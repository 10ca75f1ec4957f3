"""Command-line interface.

Exit codes: 0 all verdicts true, 1 some verdict false, 2 input error,
3 a resource limit was hit (and nothing was false).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .errors import InputError
from .fuzz import PROFILES, fuzz, instance_texts
from .instance import load_instance
from .limits import Limits
from .report import build_report, dumps
from .resolution import BettiTable
from .runner import COMMANDS, Options, run_command

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


def _t_values(text):
    try:
        vals = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--t expects integers, got {text!r}") from None
    if any(v < 1 for v in vals):
        raise argparse.ArgumentTypeError("--t values must be positive")
    return vals


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="oideal", description="Graded resolutions and instance checks.")
    ap.add_argument("--version", action="version", version=f"oideal {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="write the JSON report to stdout")
    common.add_argument("--out", type=Path, help="write the JSON report to PATH")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--degree-cap", type=int, default=Limits().degree_cap)
    common.add_argument("--max-len", type=int, default=None)
    common.add_argument("--t", type=_t_values, default=None, help="exponent(s) for monomial tests, e.g. 2 or 1,2,3")
    sub = ap.add_subparsers(dest="command", required=True)
    for cmd in COMMANDS:
        p = sub.add_parser(cmd, parents=[common])
        p.add_argument("files", nargs="+", type=Path)
    p = sub.add_parser("fuzz", parents=[common])
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--profile", choices=sorted(PROFILES), default="default")
    return ap


def _human(doc, out):
    for c in doc["checks"]:
        tag = "PASS" if c["verdict"] else ("FAIL" if c["forced"] else "FALSE")
        print(f"{tag} {c['claim_id']} {c['instance_id']}", file=out)
        if doc["command"] == "betti" and c["claim_id"] == "resolution-suite":
            table = BettiTable({(i, j): v for i, j, v in c["witness"]["betti"]})
            print(table.format(), file=out)
    for s in doc["skipped"]:
        print(f"SKIP {s['op']} {s['instance_id']} ({s['kind']}: {s['reason']})", file=out)
    for w in doc["warnings"]:
        print(f"warning: {w}", file=out)
    sm = doc["summary"]
    print(f"{sm['total'] - len(sm['failed'])}/{sm['total']} true, {sm['skipped']} skipped", file=out)


def _exit_code(doc) -> int:
    sm = doc["summary"]
    if not sm["verdict"]:
        return EXIT_FALSE
    if sm["resource_limited"]:
        return EXIT_LIMIT
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.jobs < 1 or args.degree_cap < 1 or (args.max_len is not None and args.max_len < 1):
        print("oideal: --jobs, --degree-cap and --max-len must be positive", file=sys.stderr)
        return EXIT_INPUT
    limits = Limits(degree_cap=args.degree_cap)
    opts = Options(seed=args.seed, max_len=args.max_len, jobs=args.jobs, limits=limits,
                   t_values=args.t or (1, 2, 3), t_override=args.t is not None)
    try:
        if args.command == "fuzz":
            if args.count < 0:
                raise InputError("--count must be non-negative")
            specs, checks, skipped = fuzz(args.seed, args.count, args.profile, opts)
            doc = build_report("fuzz", [f"fuzz-{args.seed}"], checks, skipped, seed=args.seed, limits=limits,
                               extra={"profile": args.profile, "count": args.count,
                                      "generated": instance_texts(specs)})
        else:
            checks, skipped, warnings, ids = [], [], [], []
            for path in args.files:
                spec = load_instance(path)
                ids.append(spec.instance_id)
                warnings += [f"{spec.instance_id}: {w}" for w in spec.warnings]
                res = run_command(spec, args.command, opts)
                checks += res.reports
                skipped += res.skipped
            doc = build_report(args.command, ids, checks, skipped, seed=args.seed, limits=limits, warnings=warnings)
    except InputError as e:
        print(f"oideal: input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    text = dumps(doc)
    if args.out:
        args.out.write_text(text, encoding="utf-8")
    if args.json:
        sys.stdout.write(text)
    else:
        _human(doc, sys.stdout)
    return _exit_code(doc)


if __name__ == "__main__":
    sys.exit(main())
