"""Command line entry point: ``ospwind {enumerate,hstar,verify}``.

Exit codes: 0 success, 1 a verification mismatch or failed check, 2 usage
error (argparse convention, message on stderr, nothing on stdout).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .partitions import (
    FamilySpec,
    InvalidFamily,
    Kind,
    enumerate_partitions,
    grading_histogram,
    trim,
    winding_vector,
)
from .verify import InvalidRange, SweepRange, default_jobs, ehrhart_side, sweep

SCHEMA_VERSION = "1"
ENUMERATE_COLUMNS = ["partition", "positions", "winding_vector", "level", "winding_number"]


def _vec(v) -> str:
    return "(" + ",".join(map(str, v)) + ")"


def _cell(v) -> str:
    return " ".join(map(str, v))


def _add_family_flags(p, sweep_flags=False):
    p.add_argument("--family", required=True, choices=[k.value for k in Kind])
    for name in ("a", "b", "r", "n", "s"):
        p.add_argument(f"--{name}", type=int)
    if sweep_flags:
        p.add_argument("--min-n", type=int)
        p.add_argument("--max-n", type=int)
        p.add_argument("--min-r", type=int)
        p.add_argument("--max-r", type=int)
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ospwind", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list admissible decorated ordered set partitions")
    _add_family_flags(p)
    p.add_argument("--with-winding", action="store_true")
    p.set_defaults(subparser=p)

    p = sub.add_parser("hstar", help="h*-vector from winding numbers and/or lattice counts")
    _add_family_flags(p)
    p.add_argument("--method", choices=["winding", "ehrhart", "both"], default="both")
    p.set_defaults(subparser=p)

    p = sub.add_parser("verify", help="verify the histogram/h* agreement over a range")
    _add_family_flags(p, sweep_flags=True)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--timing", action="store_true", help="include wall time (output no longer reproducible)")
    p.set_defaults(subparser=p)
    return parser


def _family(args, parser) -> FamilySpec:
    need = {"hypersimplex": ("a", "b"), "simplex": ("r", "n"), "slice": ("r", "n", "s")}[args.family]
    missing = [f"--{k}" for k in need if getattr(args, k) is None]
    if missing:
        parser.error(f"--family {args.family} requires {' '.join(missing)}")
    try:
        return FamilySpec.from_params(args.family, **{k: getattr(args, k) for k in need})
    except InvalidFamily as exc:
        parser.error(str(exc))


def _sweep_range(args, parser) -> SweepRange:
    def bounds(single, lo, hi, default_lo, name):
        if single is not None:
            return single, single
        if hi is None:
            parser.error(f"give --{name} or --max-{name}")
        return (lo if lo is not None else default_lo), hi

    kind = Kind(args.family)
    if kind is Kind.HYPERSIMPLEX:
        if args.b is not None and args.a is not None:
            n_min = n_max = args.a + args.b
        else:
            n_min, n_max = bounds(args.n, args.min_n, args.max_n, 2, "n")
        rng = SweepRange(kind, n_min, n_max, a=args.a)
    else:
        n_min, n_max = bounds(args.n, args.min_n, args.max_n, 2 if kind is Kind.SIMPLEX else 1, "n")
        r_min, r_max = bounds(args.r, args.min_r, args.max_r, 1, "r")
        rng = SweepRange(kind, n_min, n_max, r_min, r_max, s=args.s if kind is Kind.SLICE else None)
    try:
        rng.instances()
    except InvalidRange as exc:
        parser.error(str(exc))
    return rng


def _family_record(family: FamilySpec) -> dict:
    return {"kind": family.kind.value, **family.params}


def cmd_enumerate(args, parser, out) -> int:
    family = _family(args, parser)
    rows = (
        (p, winding_vector(p, family)) for p in enumerate_partitions(family)
    )
    if args.format == "json":
        items = []
        for p, wd in rows:
            item = {"partition": p.to_text()}
            if args.with_winding:
                item.update(
                    positions=list(wd.positions),
                    winding_vector=list(wd.winding_vector),
                    level=wd.level,
                    winding_number=wd.winding_number,
                )
            items.append(item)
        doc = {"schema_version": SCHEMA_VERSION, "command": "enumerate",
               "family": _family_record(family), "partitions": items}
        json.dump(doc, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(ENUMERATE_COLUMNS)
        for p, wd in rows:
            writer.writerow([p.to_text(), _cell(wd.positions), _cell(wd.winding_vector),
                             wd.level, wd.winding_number])
    else:
        for p, wd in rows:
            if args.with_winding:
                out.write(f"{p.to_text()}\tp={_vec(wd.positions)}\tw={_vec(wd.winding_vector)}"
                          f"\tlevel={wd.level}\twinding={wd.winding_number}\n")
            else:
                out.write(p.to_text() + "\n")
    return 0


def cmd_hstar(args, parser, out) -> int:
    family = _family(args, parser)
    vectors = {}
    if args.method in ("winding", "both"):
        vectors["winding"] = trim(grading_histogram(family))
    if args.method in ("ehrhart", "both"):
        vectors["ehrhart"] = trim(ehrhart_side(family))
    match = vectors["winding"] == vectors["ehrhart"] if args.method == "both" else None
    if args.format == "json":
        doc = {"schema_version": SCHEMA_VERSION, "command": "hstar", "family": _family_record(family),
               "method": args.method, **{k: list(v) for k, v in vectors.items()}}
        if match is not None:
            doc["match"] = match
        json.dump(doc, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["method", "hstar"])
        for k, v in vectors.items():
            writer.writerow([k, _cell(v)])
    else:
        out.write(family.label() + "\n")
        for k, v in vectors.items():
            out.write(f"{k}: {_vec(v)}\n")
        if match is not None:
            out.write(f"match: {str(match).lower()}\n")
    return 0


def cmd_verify(args, parser, out) -> int:
    rng = _sweep_range(args, parser)
    jobs = args.jobs if args.jobs is not None else default_jobs()
    if jobs < 1:
        parser.error("--jobs must be positive")
    reports = sweep(rng, workers=jobs)
    ok = all(r.passed for r in reports)
    if args.format == "json":
        doc = {"schema_version": SCHEMA_VERSION, "command": "verify", "family": args.family,
               "reports": [r.to_dict(timing=args.timing) for r in reports], "all_passed": ok}
        json.dump(doc, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        header = ["family", "histogram", "hstar", "match", "total_count", "expected_count", "failed_checks"]
        writer.writerow(header + (["elapsed"] if args.timing else []))
        for r in reports:
            row = [r.family.label(), _cell(r.histogram), _cell(r.hstar), str(r.match).lower(),
                   r.total_count, "" if r.expected_count is None else r.expected_count,
                   " ".join(c.name for c in r.checks if not c.passed)]
            writer.writerow(row + ([f"{r.elapsed:.6f}"] if args.timing else []))
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status} {r.family.label()} winding={_vec(r.histogram)} ehrhart={_vec(r.hstar)} total={r.total_count}"
            failed = [c.name for c in r.checks if not c.passed]
            if failed:
                line += " failed=" + ",".join(failed)
            if args.timing:
                line += f" elapsed={r.elapsed:.3f}s"
            out.write(line + "\n")
            for cls, parts in sorted(r.diagnostics.items()):
                out.write(f"  winding {cls}: " + " ".join(parts) + "\n")
        out.write(f"{len(reports)} instances, {'all passed' if ok else 'FAILURES'}\n")
    return 0 if ok else 1


COMMANDS = {"enumerate": cmd_enumerate, "hstar": cmd_hstar, "verify": cmd_verify}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    return COMMANDS[args.command](args, args.subparser, out)


if __name__ == "__main__":
    sys.exit(main())
