"""Command line entry point.

Exit codes: 0 success, 1 usage, 2 parse error, 3 precondition failure
(e.g. action not coprime, prime does not divide ``|G|``), 4 cross-validation
discrepancy.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from .errors import GroupError
from .fileio import read_action, read_group
from .groups import is_prime
from .lattice import all_subgroups
from .reports import (
    CENSUS_SCHEMA,
    CHECK_SCHEMA,
    lattice_rows,
    render_census_text,
    render_check_text,
    run_census,
    triple_report,
)
from .action import trivial_action

log = logging.getLogger("schmidtcheck")

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_PRECONDITION, EXIT_DISCREPANCY = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _primes_arg(text: str):
    if text == "all":
        return None
    try:
        primes = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'all' or a comma-separated list of primes, got {text!r}")
    bad = [p for p in primes if not is_prime(p)]
    if bad or not primes:
        raise argparse.ArgumentTypeError(f"not primes: {bad or text!r}")
    return primes


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="schmidtcheck", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="decide the hypothesis and classify one (G, A, p) triple")
    p.add_argument("-g", "--group", required=True, help=".grp file")
    p.add_argument("-a", "--action", help=".aut file (default: trivial action)")
    p.add_argument("-p", "--prime", required=True, type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings (breaks byte-identical output)")

    p = sub.add_parser("census", help="cross-validate the built-in corpus")
    p.add_argument("--max-order", type=int, default=192)
    p.add_argument("--primes", type=_primes_arg, default=None, metavar="all|p1,p2")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true")

    p = sub.add_parser("lattice", help="list every subgroup")
    p.add_argument("-g", "--group", required=True)
    p.add_argument("-a", "--action")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("validate", help="validate an action file against a group")
    p.add_argument("-g", "--group", required=True)
    p.add_argument("-a", "--action", required=True)

    p = sub.add_parser("schema", help="print the JSON schema of a report kind")
    p.add_argument("kind", choices=["check", "census"])
    return parser


def _load(args):
    group = read_group(args.group)
    act = read_action(args.action, group) if getattr(args, "action", None) else trivial_action(group)
    return group, act


def cmd_check(args) -> int:
    t0 = time.perf_counter()
    group, act = _load(args)
    t1 = time.perf_counter()
    lat = all_subgroups(group)
    t2 = time.perf_counter()
    rep = triple_report(group, lat, act, args.prime, "" if act.is_trivial() else "from file")
    t3 = time.perf_counter()
    if args.timings:
        rep["timings"] = {"load": t1 - t0, "lattice": t2 - t1, "decide": t3 - t2}
    print(json.dumps(rep, indent=2) if args.json else render_check_text(rep))
    return EXIT_OK if rep["consistent"] else EXIT_DISCREPANCY


def cmd_census(args) -> int:
    t0 = time.perf_counter()
    rep = run_census(max(args.max_order, 0), args.primes, jobs=max(args.jobs, 1))
    if args.timings:
        rep["timings"] = {"total": time.perf_counter() - t0}
    print(json.dumps(rep, indent=2) if args.json else render_census_text(rep))
    return EXIT_OK if rep["summary"]["all_passed"] else EXIT_DISCREPANCY


def cmd_lattice(args) -> int:
    group, act = _load(args)
    lat = all_subgroups(group)
    rows = lattice_rows(group, lat, act if args.action else None)
    if args.json:
        print(json.dumps({"schema": 1, "kind": "lattice", "order": group.order, "subgroups": rows}, indent=2))
        return EXIT_OK
    for r in rows:
        flags = ["normal" if r["normal"] else ""]
        if "invariant" in r:
            flags.append("invariant" if r["invariant"] else "")
            flags.append("max-invariant" if r["maximal_invariant"] else "")
        gens = ", ".join(r["generators"]) or "()"
        print(f"{r['index']:4} order {r['order']:4}  {' '.join(f for f in flags if f):30} <{gens}>")
    return EXIT_OK


def cmd_validate(args) -> int:
    group, act = _load(args)
    print(f"group order {group.order}; action of order {act.order} "
          f"from {len(act.generators)} nontrivial automorphism(s); coprime: yes")
    return EXIT_OK


def cmd_schema(args) -> int:
    print(json.dumps(CHECK_SCHEMA if args.kind == "check" else CENSUS_SCHEMA, indent=2))
    return EXIT_OK


COMMANDS = {"check": cmd_check, "census": cmd_census, "lattice": cmd_lattice, "validate": cmd_validate, "schema": cmd_schema}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args)
    except GroupError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PARSE if exc.category == "parse" else EXIT_PRECONDITION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
