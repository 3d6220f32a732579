"""Command line entry point ``ew-kernel``.

    ew-kernel generate --seed 0 --profile small -o inst.json
    ew-kernel run --suite all --instance inst.json --report out.json
    ew-kernel six --seed 0
    ew-kernel --field fp:5 main-thm --instance inst.json

The exit code is 0 iff every check passes (expected-negative checks pass
when the negative is confirmed).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .cosmos import CosmosError, Field
from .harness import PROFILES, SUITES, generate, run_suite
from .serialize import dumps_instance, dumps_report, loads_instance


def _field(text: str) -> Field:
    try:
        return Field.parse(text)
    except (CosmosError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ew-kernel", description="Exact checks for module categories over commutative algebras.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("--field", type=_field, default=None, help="q (default) or fp:P")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a seeded instance file")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--profile", choices=sorted(PROFILES), default="small")
    g.add_argument("-o", "--output", type=Path, help="output file (default: stdout)")

    def add_run_args(p):
        p.add_argument("--instance", type=Path, help="instance file; generated from --seed when absent")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--profile", choices=sorted(PROFILES), default="small")
        p.add_argument("--report", type=Path, help="write the JSON report here")
        p.add_argument("--no-timing", action="store_true", help="omit timing from the report")
        p.add_argument("-v", "--verbose", action="store_true", help="print every check")

    r = sub.add_parser("run", help="run a suite")
    r.add_argument("--suite", choices=SUITES + ("all",), default="all")
    add_run_args(r)
    for name, help_text in (
        ("six", "extension, restriction and the projection formula"),
        ("main-thm", "algebras under b⊗b' versus lax tensor functors"),
        ("day", "Day convolution of bimodule functors"),
    ):
        add_run_args(sub.add_parser(name, help=help_text))
    return ap


def _load_instance(args, field: Field | None):
    if args.instance is not None:
        inst = loads_instance(args.instance.read_text())
        if field is not None and field != inst.field:
            raise CosmosError(f"--field {field.tag} does not match the instance field {inst.field.tag}")
        return inst
    return generate(args.seed or 0, args.profile, field or Field())


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "generate":
            inst = generate(args.seed, args.profile, args.field or Field())
            text = dumps_instance(inst)
            if args.output:
                args.output.write_text(text)
            else:
                sys.stdout.write(text)
            return 0
        suite = args.suite if args.command == "run" else args.command
        inst = _load_instance(args, args.field)
        report = run_suite(suite, inst, args.seed)
    except CosmosError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.report:
        args.report.write_text(dumps_report(report, timing=not args.no_timing))
    for c in report.checks:
        if args.verbose or c["status"] != "pass":
            kind = " [EXPECTED-NEGATIVE]" if c.get("kind") else ""
            wit = f"  witness={c['witness']}" if "witness" in c and (args.verbose or c["status"] != "pass") else ""
            print(f"{c['status'].upper():4} {c['id']}{kind}{wit}")
    s = report.summary()
    print(
        f"suite {suite}: {s['passed']}/{s['total']} passed"
        f" ({s['expected_negative']} expected-negative) in {report.seconds:.2f}s"
    )
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
