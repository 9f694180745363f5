"""Command line frontend and batch verification harness.

Every subcommand prints one JSON report to stdout and signals through
the exit code: 0 for success or agreement, 1 when a criterion and its
oracle disagree (the statements are proved, so this means a bug), 2 for
usage errors, 3 when a capacity limit blocks the computation.  Reports
carry the schema tag "hallmark-report/1"; with --no-timings two runs on
identical inputs produce byte-identical output.
"""

import argparse
import dataclasses
import json
import os
import sys
import time

from . import __version__
from . import catalog, chartab, criteria, lieorders, subgroups
from .classdata import ClassTable
from .config import DEGREE_CAP, Caps, default_caps
from .errors import CapacityError, MalformedInputError, PreconditionError

REPORT_SCHEMA = "hallmark-report/1"

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

_TABLES_DIR = os.path.join(os.path.dirname(__file__), "data", "tables")

# Catalog entries whose character table ships with the package; theorem C
# runs with the block condition wired in for exactly these.
TABLE_BACKED = ("a5", "c6", "d4", "psl2_7", "psl2_31", "s4")

THEOREMS = ("A", "B", "C", "t4.1", "t4.2", "t4.3")


def _caps_for(args) -> Caps:
    caps = default_caps()
    if getattr(args, "extended", False):
        caps = dataclasses.replace(
            caps,
            elements=max(caps.elements, 10_000_000),
            subgroup_search_order=max(caps.subgroup_search_order, 200_000),
        )
    return caps


def _load_group(source: str, extended: bool):
    if source.startswith("catalog:"):
        name = source[len("catalog:"):]
        entry = catalog.get_entry(name)
        if "sporadic-stretch" in entry.tags and not extended:
            raise CapacityError(
                "catalog entry %s is gated behind --extended "
                "(expect minutes, not seconds)" % name,
                cap_name="extended",
                cap_value=0,
            )
        return name, entry.build()
    return catalog.load_group_file(source)


def _shipped_table_path(name: str) -> str:
    path = os.path.join(_TABLES_DIR, name + ".json")
    if not os.path.exists(path):
        raise MalformedInputError(
            "no shipped character table named %r (have: %s)"
            % (name, ", ".join(TABLE_BACKED))
        )
    return path


def _load_table(source: str):
    if source.startswith("catalog:"):
        return chartab.load_table(_shipped_table_path(source[len("catalog:"):]))
    return chartab.load_table(source)


def _parse_pi(text: str):
    parts = [p for p in text.split(",") if p]
    if not parts:
        raise MalformedInputError("--pi needs at least one prime")
    try:
        primes = [int(p) for p in parts]
    except ValueError:
        raise MalformedInputError("--pi must be comma-separated integers, got %r" % text)
    if len(set(primes)) != len(primes):
        raise MalformedInputError("--pi lists a prime twice: %r" % text)
    if any(p < 2 for p in primes):
        raise MalformedInputError("--pi entries must be at least 2")
    return primes


def _group_blurb(name: str, group) -> dict:
    return {"name": name, "order": group.order, "degree": group.degree}


def _sub_json(sub) -> dict:
    return {
        "order": sub.order,
        "generators": [g.cycle_string() or "()" for g in sub.generators],
    }


def _emit(args, command: str, inputs: dict, payload: dict, started: float,
          caps: Caps = None, exit_code: int = EXIT_OK) -> int:
    report = {
        "schema": REPORT_SCHEMA,
        "tool": {"name": "hallmark", "version": __version__},
        "command": command,
        "inputs": inputs,
    }
    if caps is not None:
        report["caps"] = {"degree_cap": DEGREE_CAP, **dataclasses.asdict(caps)}
    report.update(payload)
    report["exit"] = exit_code
    if not args.no_timings:
        report["timings"] = {"total_s": round(time.monotonic() - started, 3)}
    sys.stdout.write(json.dumps(report, indent=2) + "\n")
    return exit_code


def _tally(checks) -> dict:
    out = {"checks": len(checks), "agree": 0, "disagree": 0,
           "skipped": 0, "undetermined": 0}
    for c in checks:
        if c.agree is True:
            out["agree"] += 1
        elif c.agree is False:
            out["disagree"] += 1
        elif c.note == "precondition failed":
            out["skipped"] += 1
        else:
            out["undetermined"] += 1
    return out


def _exit_for(tally: dict) -> int:
    if tally["disagree"]:
        return EXIT_DISAGREE
    if tally["undetermined"]:
        return EXIT_CAPACITY
    return EXIT_OK


def _cmd_catalog(args) -> int:
    started = time.monotonic()
    groups = [
        {
            "name": e.name,
            "order": e.order,
            "degree": e.degree,
            "tags": sorted(e.tags),
            "summary": e.summary,
        }
        for e in sorted(catalog.entries(), key=lambda e: (e.order, e.name))
    ]
    return _emit(args, "catalog", {}, {"groups": groups}, started)


def _cmd_classes(args) -> int:
    started = time.monotonic()
    name, group = _load_group(args.group, args.extended)
    caps = _caps_for(args)
    table = ClassTable(group, caps)
    degree = group.degree
    classes = [
        {
            "rep": ci.representative(degree).cycle_string() or "()",
            "size": ci.size,
            "element_order": ci.element_order,
            "centralizer_order": ci.centralizer_order,
        }
        for ci in table.classes
    ]
    payload = {
        "group": _group_blurb(name, group),
        "class_count": len(classes),
        "classes": classes,
    }
    return _emit(args, "classes", {"group": args.group}, payload, started, caps)


def _cmd_hall(args) -> int:
    started = time.monotonic()
    name, group = _load_group(args.group, args.extended)
    caps = _caps_for(args)
    pi = _parse_pi(args.pi)
    result = subgroups.hall_subgroup(group, pi, caps)
    payload = {
        "group": _group_blurb(name, group),
        "pi": sorted(pi),
        "status": result.status,
        "reason": result.reason,
    }
    if result.subgroup is not None:
        sub = result.subgroup
        payload["subgroup"] = _sub_json(sub)
        payload["subgroup"]["index"] = group.order // sub.order
        payload["nilpotent"] = subgroups.is_nilpotent(sub, caps)
        payload["abelian"] = subgroups.is_abelian(sub)
    else:
        payload["subgroup"] = None
    code = EXIT_CAPACITY if result.status == "inconclusive" else EXIT_OK
    inputs = {"group": args.group, "pi": sorted(pi)}
    return _emit(args, "hall", inputs, payload, started, caps, code)


def _block_hook(group_source: str, name: str, table_flag):
    """Principal-block data for theorem C: an explicit --table wins, a
    catalog entry with a shipped table is wired automatically, and file
    groups without --table run with the block side undetermined."""
    if table_flag:
        return chartab.principal_block_clear(_load_table(table_flag))
    if group_source.startswith("catalog:") and name in TABLE_BACKED:
        return chartab.principal_block_clear(
            chartab.load_table(_shipped_table_path(name))
        )
    return None


def _cmd_check(args) -> int:
    started = time.monotonic()
    name, group = _load_group(args.group, args.extended)
    caps = _caps_for(args)
    theorem = args.theorem
    hook = _block_hook(args.group, name, args.table) if theorem == "C" else None
    pi = _parse_pi(args.pi) if args.pi else None
    if pi is None:
        checks = criteria.check_group(group, theorem, caps, principal_block_clear=hook)
    else:
        if theorem in ("A", "t4.1", "t4.2") and len(pi) != 2:
            raise MalformedInputError(
                "--theorem %s takes exactly two primes, got %r" % (theorem, args.pi)
            )
        if theorem == "t4.3" and len(pi) != 1:
            raise MalformedInputError("--theorem t4.3 takes one odd prime")
        if theorem == "A":
            checks = [criteria.check_theorem_a(group, pi[0], pi[1], caps)]
        elif theorem == "B":
            checks = [criteria.check_theorem_b(group, pi, caps)]
        elif theorem == "C":
            checks = [criteria.check_theorem_c(group, pi, caps, principal_block_clear=hook)]
        elif theorem == "t4.1":
            checks = [criteria.check_sylow_normalization(group, pi[0], pi[1], caps)]
        elif theorem == "t4.2":
            checks = [criteria.check_core_characterization(group, pi[0], pi[1], caps)]
        else:
            checks = [criteria.check_odd_sizes_solvability(group, pi[0], caps)]
    tally = _tally(checks)
    payload = {
        "group": _group_blurb(name, group),
        "theorem": theorem,
        "checks": [c.to_json() for c in checks],
        "summary": tally,
    }
    inputs = {"group": args.group, "theorem": theorem, "pi": pi}
    if args.table:
        inputs["table"] = args.table
    return _emit(args, "check", inputs, payload, started, caps, _exit_for(tally))


def _cmd_ct_analyze(args) -> int:
    started = time.monotonic()
    table = _load_table(args.table)
    pi = _parse_pi(args.pi)
    if args.theorem == "B":
        verdict = chartab.table_criterion_b(table, pi)
    else:
        verdict = chartab.table_criterion_c(table, pi)
    payload = {
        "table": {"name": table.name, "order": table.order,
                  "irreducibles": len(table.rows)},
        "theorem": args.theorem,
        "pi": sorted(pi),
        "criterion": verdict.to_json(),
    }
    code = EXIT_CAPACITY if verdict.is_undetermined else EXIT_OK
    inputs = {"table": args.table, "pi": sorted(pi), "theorem": args.theorem}
    return _emit(args, "ct-analyze", inputs, payload, started, exit_code=code)


def _cmd_ct_blocks(args) -> int:
    started = time.monotonic()
    table = _load_table(args.table)
    partition = chartab.block_partition(table, args.prime)
    payload = {
        "table": {"name": table.name, "order": table.order,
                  "irreducibles": len(table.rows)},
        "partition": partition.to_json(table),
    }
    inputs = {"table": args.table, "p": args.prime}
    return _emit(args, "ct-blocks", inputs, payload, started)


def _cmd_lie_verify(args) -> int:
    started = time.monotonic()
    report = lieorders.verify_pair(args.family, args.n, args.q, args.r, args.s)
    code = EXIT_OK if report["consistent"] else EXIT_DISAGREE
    inputs = {"family": args.family, "n": args.n, "q": args.q,
              "r": args.r, "s": args.s}
    return _emit(args, "lie-verify", inputs, {"pair": report}, started, exit_code=code)


def _cmd_lie_grid(args) -> int:
    started = time.monotonic()
    manifest = lieorders.load_grid_manifest(args.manifest)
    report = lieorders.run_grid(manifest)
    if args.no_timings:
        del report["elapsed"]
    code = EXIT_OK if report["ok"] else EXIT_DISAGREE
    inputs = {"manifest": args.manifest or "shipped"}
    return _emit(args, "lie-grid", inputs, {"grid": report}, started, exit_code=code)


def _cmd_suite(args) -> int:
    started = time.monotonic()
    caps = _caps_for(args)
    entries = sorted(
        catalog.entries(include_stretch=args.extended),
        key=lambda e: (e.order, e.name),
    )
    groups_payload = []
    totals = {"checks": 0, "agree": 0, "disagree": 0, "skipped": 0, "undetermined": 0}
    for entry in entries:
        group_started = time.monotonic()
        group = entry.build()
        hook = None
        if entry.name in TABLE_BACKED:
            hook = chartab.principal_block_clear(
                chartab.load_table(_shipped_table_path(entry.name))
            )
        checks = []
        for theorem in ("A", "B"):
            checks.extend(criteria.check_group(group, theorem, caps))
        if hook is not None:
            checks.extend(
                criteria.check_group(group, "C", caps, principal_block_clear=hook)
            )
        for theorem in ("t4.1", "t4.2", "t4.3"):
            checks.extend(criteria.check_group(group, theorem, caps))
        tally = _tally(checks)
        for key in totals:
            totals[key] += tally[key]
        item = {
            "name": entry.name,
            "order": entry.order,
            "summary": tally,
            "disagreements": [c.to_json() for c in checks if c.agree is False],
        }
        if not args.no_timings:
            item["elapsed_s"] = round(time.monotonic() - group_started, 3)
        groups_payload.append(item)
    grid = lieorders.run_grid(lieorders.load_grid_manifest())
    if args.no_timings:
        del grid["elapsed"]
    payload = {
        "groups": groups_payload,
        "grid": grid,
        "summary": {**totals, "groups": len(entries), "grid_ok": grid["ok"]},
    }
    if totals["disagree"] or not grid["ok"]:
        code = EXIT_DISAGREE
    elif totals["undetermined"]:
        code = EXIT_CAPACITY
    else:
        code = EXIT_OK
    inputs = {"extended": bool(args.extended)}
    return _emit(args, "suite", inputs, payload, started, caps, code)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--no-timings", action="store_true",
        help="omit wall-clock sections so reruns are byte-identical",
    )
    common.add_argument(
        "--extended", action="store_true",
        help="unlock the sporadic stretch entry and raise caps",
    )

    parser = argparse.ArgumentParser(
        prog="hallmark",
        description="Class-size criteria for nilpotent and abelian Hall "
        "subgroups, checked against brute-force group oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", parents=[common], help="list the shipped groups")
    p.add_argument("action", nargs="?", default="list", choices=["list"])
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("classes", parents=[common], help="conjugacy class table")
    p.add_argument("group", help="catalog:NAME or a group JSON file")
    p.set_defaults(func=_cmd_classes)

    p = sub.add_parser("hall", parents=[common], help="search for a Hall subgroup")
    p.add_argument("group", help="catalog:NAME or a group JSON file")
    p.add_argument("--pi", required=True, help="comma-separated primes, e.g. 3,5")
    p.set_defaults(func=_cmd_hall)

    p = sub.add_parser("check", parents=[common],
                       help="criterion against oracle for one statement")
    p.add_argument("--theorem", required=True, choices=THEOREMS)
    p.add_argument("--group", required=True, help="catalog:NAME or a group JSON file")
    p.add_argument("--pi", help="primes to test; default tries all relevant sets")
    p.add_argument("--table", help="character table JSON for the theorem C block side")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("ct-analyze", parents=[common],
                       help="run a table-side criterion")
    p.add_argument("table", help="table JSON file or catalog:NAME")
    p.add_argument("--pi", required=True, help="comma-separated primes")
    p.add_argument("--theorem", choices=["B", "C"], default="C")
    p.set_defaults(func=_cmd_ct_analyze)

    p = sub.add_parser("ct-blocks", parents=[common],
                       help="partition irreducibles into p-blocks")
    p.add_argument("table", help="table JSON file or catalog:NAME")
    p.add_argument("-p", "--prime", required=True, type=int)
    p.set_defaults(func=_cmd_ct_blocks)

    p = sub.add_parser("lie-verify", parents=[common],
                       help="class-size divisibility for one classical-group point")
    p.add_argument("--family", required=True, choices=list(lieorders.FAMILIES))
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--q", required=True, type=int)
    p.add_argument("--r", required=True, type=int)
    p.add_argument("--s", required=True, type=int)
    p.set_defaults(func=_cmd_lie_verify)

    p = sub.add_parser("lie-grid", parents=[common],
                       help="replay the divisibility grid from a manifest")
    p.add_argument("manifest", nargs="?", default=None,
                   help="manifest JSON; the shipped grid when omitted")
    p.set_defaults(func=_cmd_lie_grid)

    p = sub.add_parser("suite", parents=[common],
                       help="full criterion-versus-oracle battery over the catalog")
    p.set_defaults(func=_cmd_suite)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CapacityError as exc:
        print("capacity: %s" % exc, file=sys.stderr)
        return EXIT_CAPACITY
    except (MalformedInputError, PreconditionError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
