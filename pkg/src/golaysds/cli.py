"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .conditions import classify_length, open_candidates
from .core import check_square_decomposition, sequence_from_subset
from .correlation import psd_test
from .errors import FixtureError, GolayError, ParseError, PlanError
from .fixtures import fixture_from_blocks, iter_fixture_lines, serialize_fixtures
from .hadamard import build_hadamard, format_matrix, format_matrix_csv, is_hadamard
from .orbits import close_subgroup, orbit_partition
from .sds import is_sds, verify_periodic_golay_pair
from .search.pipeline import default_jobs, run_pipeline
from .search.plan import load_plan

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc.strerror or exc}", file=sys.stderr)
        return None


def check_fixture(spec):
    """Run every check on one fixture. Returns ``(pair, matrix, summary)``."""
    x, y = spec.blocks()
    pair = verify_periodic_golay_pair(x, y)
    if not is_sds(spec.v, [x, y], spec.params.lam):
        raise GolayError(f"not an SDS with lambda={spec.params.lam}")
    a, b = check_square_decomposition(spec.params)
    if not (psd_test(sequence_from_subset(x)) and psd_test(sequence_from_subset(y))):
        raise GolayError("PSD test failed")
    m = build_hadamard(pair)
    if not is_hadamard(m):
        raise GolayError("block matrix is not Hadamard")
    return pair, m, f"params={spec.params} a={a} b={b} hadamard={m.order}"


def cmd_verify(args) -> int:
    text = _read(args.fixtures)
    if text is None:
        return EXIT_IO
    items = list(iter_fixture_lines(text))
    failed = syntax = False
    n_pass = 0
    for lineno, item in items:
        if isinstance(item, FixtureError):
            print(f"FAIL line {lineno}: {item}")
            failed = True
            syntax = syntax or isinstance(item, ParseError)
            continue
        try:
            _, _, summary = check_fixture(item)
        except GolayError as exc:
            print(f"FAIL line {lineno} v={item.v}: {exc}")
            failed = True
            continue
        n_pass += 1
        print(f"PASS line {lineno} v={item.v} {summary}")
    print(f"{n_pass}/{len(items)} fixtures verified")
    if syntax:
        return EXIT_USAGE
    return EXIT_FAIL if failed else EXIT_OK


def cmd_hadamard(args) -> int:
    text = _read(args.fixtures)
    if text is None:
        return EXIT_IO
    out = Path(args.out)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        print(f"error: cannot create {out}: {exc}", file=sys.stderr)
        return EXIT_IO
    status = EXIT_OK
    for lineno, item in list(iter_fixture_lines(text)):
        if isinstance(item, FixtureError):
            print(f"FAIL line {lineno}: {item}")
            status = EXIT_USAGE if isinstance(item, ParseError) else max(status, EXIT_FAIL)
            continue
        try:
            _, m, _ = check_fixture(item)
        except GolayError as exc:
            print(f"FAIL line {lineno} v={item.v}: {exc}")
            status = max(status, EXIT_FAIL)
            continue
        suffix = "csv" if args.csv else "txt"
        path = out / f"hadamard_v{item.v}_line{lineno}.{suffix}"
        try:
            path.write_text(format_matrix_csv(m) if args.csv else format_matrix(m), newline="\n")
        except OSError as exc:
            print(f"error: cannot write {path}: {exc}", file=sys.stderr)
            return EXIT_IO
        print(f"PASS line {lineno} v={item.v} order={m.order} -> {path}")
    return status


def cmd_conditions(args) -> int:
    if args.range_end < 1:
        print("error: N must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    if args.open_only:
        for v in open_candidates(args.range_end):
            print(v)
        return EXIT_OK
    print("v even two_squares eks_golay_possible arasu_xiang status failures")
    for v in range(1, args.range_end + 1):
        d = classify_length(v)
        ax = "-" if d.arasu_xiang_pass is None else int(d.arasu_xiang_pass)
        fails = ",".join(d.failures) or "-"
        print(f"{v} {int(d.even)} {int(d.two_squares)} {int(d.eks_golay_possible)} {ax} "
              f"{d.known_status.value} {fails}")
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        plan = load_plan(args.plan)
    except OSError as exc:
        print(f"error: cannot read {args.plan}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    except PlanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        for f in exc.fields:
            print(f"  offending field: {f}", file=sys.stderr)
        return EXIT_USAGE
    jobs = args.jobs or default_jobs()
    out = Path(args.out) if args.out else None
    workdir = None
    if out is not None:
        workdir = out / "work"
        try:
            workdir.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            print(f"error: cannot create {workdir}: {exc}", file=sys.stderr)
            return EXIT_IO
    try:
        report = run_pipeline(plan, workdir=workdir, jobs=jobs)
    except GolayError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = report.to_text()
    sys.stdout.write(text)
    if out is not None:
        table = plan.table()
        specs = [fixture_from_blocks(table, j, k) for j, k in report.verified_pairs]
        (out / "report.txt").write_text(text, newline="\n")
        (out / "solutions.txt").write_text(
            serialize_fixtures(specs, header=f"search output, v={plan.v}"), newline="\n")
    return EXIT_OK


def cmd_orbits(args) -> int:
    try:
        gens = [int(g) for g in args.gens.split(",") if g]
        table = orbit_partition(close_subgroup(args.v, gens))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(table.describe())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="golaysds",
                                description="Periodic Golay pairs via supplementary difference sets")
    p.add_argument("-v", "--verbose", action="store_true", help="log stage progress")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="verify fixtures in compact J/K notation")
    s.add_argument("fixtures")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="run the orbit-union search described by a JSON plan")
    s.add_argument("plan")
    s.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: available CPUs)")
    s.add_argument("--out", help="directory for report.txt, solutions.txt and candidate files")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("conditions", help="necessary conditions for lengths 1..N")
    s.add_argument("range_end", type=int, metavar="N")
    s.add_argument("--open-only", action="store_true", help="print only the open lengths")
    s.set_defaults(func=cmd_conditions)

    s = sub.add_parser("hadamard", help="export Hadamard matrices built from fixtures")
    s.add_argument("fixtures")
    s.add_argument("--out", required=True)
    s.add_argument("--csv", action="store_true", help="write +-1 CSV instead of +/- rows")
    s.set_defaults(func=cmd_hadamard)

    s = sub.add_parser("orbits", help="print the orbit table of a unit subgroup")
    s.add_argument("--v", type=int, required=True)
    s.add_argument("--gens", required=True, help="comma-separated generators")
    s.set_defaults(func=cmd_orbits)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
