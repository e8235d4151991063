"""Command line: ``heckeduality {verify,nf,hecke-class,list-systems}``.

Exit codes: 0 everything passed, 1 a check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .coxeter import DEFAULT_MAX_GROUP_ORDER, CoxeterError
from .garside import format_braid_word, nf_from_word, parse_braid_word
from .hecke import InvalidGenerator, eval_braid, render
from .verify import DEFAULT_ROSTER, SUITES, SuiteConfig, resolve_system, run

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_parabolics(text: str):
    """``all`` or ``;``-separated 1-based subsets, e.g. ``{1,2};{3};{}``."""
    if text.strip() == "all":
        return "all"
    subsets = []
    for part in text.split(";"):
        part = part.strip().strip("{}").strip()
        try:
            idx = [int(t) - 1 for t in part.replace(",", " ").split()]
        except ValueError:
            raise UsageError(f"cannot parse parabolic subset {part!r}") from None
        if any(i < 0 for i in idx):
            raise UsageError("generators are numbered from 1")
        subsets.append(frozenset(idx))
    return subsets


def _split_list(text: str) -> list[str]:
    return [t for t in text.replace(",", " ").split() if t]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heckeduality",
        description="Exact checks of relative Serre duality for Hecke algebras and braid groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites and write a report")
    v.add_argument("--systems", default=" ".join(DEFAULT_ROSTER),
                   help="type names or JSON datum files, comma/space separated")
    v.add_argument("--with-f4", action="store_true", help="append F4 to the roster")
    v.add_argument("--parabolics", default="all", help="'all' or e.g. '{1,2};{3};{}'")
    v.add_argument("--suites", default="all", help=f"any of {', '.join(SUITES)}, or all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--format", choices=("json", "markdown"), default="json")
    v.add_argument("--output", help="report path (default: stdout)")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--max-group-order", type=int, default=DEFAULT_MAX_GROUP_ORDER)

    for name, helptext in (("nf", "Garside normal form of a braid word"),
                           ("hecke-class", "Hecke algebra class of a braid word")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("system", help="type name or JSON datum file")
        p.add_argument("word", help="1-based signed generators, e.g. '1 2 -1'")
        p.add_argument("--max-group-order", type=int, default=DEFAULT_MAX_GROUP_ORDER)

    sub.add_parser("list-systems", help="show the default roster")
    return parser


def cmd_verify(args) -> int:
    systems = _split_list(args.systems)
    if args.with_f4 and "F4" not in systems:
        systems.append("F4")
    suites = _split_list(args.suites)
    unknown = [s for s in suites if s not in SUITES + ("all",)]
    if unknown or not suites:
        raise UsageError(f"unknown suite(s): {', '.join(unknown) or '(none given)'}")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    config = SuiteConfig(
        systems=systems,
        parabolics=parse_parabolics(args.parabolics),
        suites=suites,
        seed=args.seed,
        jobs=args.jobs,
        max_group_order=args.max_group_order,
    )
    start = time.perf_counter()
    try:
        report = run(config)
    except (CoxeterError, ValueError, OSError) as exc:
        raise UsageError(str(exc)) from None
    text = report.to_json() if args.format == "json" else report.to_markdown()
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    print(
        f"{len(report.entries)} checks, {len(report.failures)} failures "
        f"({time.perf_counter() - start:.1f}s)",
        file=sys.stderr,
    )
    return EXIT_FAIL if report.failures else EXIT_OK


def _word_command(args, fn) -> int:
    try:
        system = resolve_system(args.system, args.max_group_order)
        word = parse_braid_word(args.word)
        print(fn(system, word))
    except (CoxeterError, InvalidGenerator, OSError) as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def cmd_list_systems(args) -> int:
    for name in DEFAULT_ROSTER + ("F4",):
        system = resolve_system(name)
        extra = "  (opt-in: --with-f4)" if name == "F4" else ""
        print(f"{name:6} rank {system.rank}  |W| = {system.order:5}  l(w0) = {system.longest.length}{extra}")
    print("Also accepted: A<n>, B<n>, C<n>, D<n>, E6-E8, F4, G2, products like A2xA1, "
          "or a JSON file {\"name\": ..., \"bond_matrix\": [[...], ...]}.")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "nf":
            return _word_command(args, lambda s, w: str(nf_from_word(s, w)))
        if args.command == "hecke-class":
            return _word_command(args, lambda s, w: render(eval_braid(s, w)))
        return cmd_list_systems(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


__all__ = ["main", "build_parser", "parse_parabolics", "format_braid_word"]
