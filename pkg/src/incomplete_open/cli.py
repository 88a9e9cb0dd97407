"""Command-line entry point.

    incomplete-open enumerate --solid cube --histogram h.csv --reps reps.txt
    incomplete-open burnside --solid icosahedron
    incomplete-open verify --solid octahedron
    incomplete-open dump-group --solid cube
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import _backend
from .artifacts import write_histogram, write_representatives, write_wireframe
from .counting import burnside_orbit_count
from .enumeration import FILTER_NAMES, FilterConfig, sweep
from .solids import SolidError, resolve_solid
from .symmetry import GroupError, close_group, cycle_notation

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="incomplete-open", description="Enumerate incomplete open polyhedra.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, sweeps: bool = True) -> None:
        p.add_argument("--solid", required=True, help="built-in name or path to a solid-spec JSON file")
        if sweeps:
            p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
            p.add_argument("--backend", choices=["pure", "compiled"], default=None)

    p_enum = sub.add_parser("enumerate", help="run the sweep and write artifacts")
    common(p_enum)
    p_enum.add_argument("--filters", default=",".join(FILTER_NAMES), help="comma list of " + ",".join(FILTER_NAMES))
    p_enum.add_argument("--no-filter", action="store_true", help="disable every filter")
    p_enum.add_argument("--histogram", type=Path)
    p_enum.add_argument("--reps", type=Path)
    p_enum.add_argument("--no-reps", action="store_true", help="never write representatives")
    p_enum.add_argument("--obj", type=Path, help="directory for one OBJ wireframe per representative")

    common(sub.add_parser("burnside", help="print the unfiltered orbit count"), sweeps=False)
    common(sub.add_parser("verify", help="check the unfiltered sweep against Burnside"))
    common(sub.add_parser("dump-group", help="print group elements in cycle notation"), sweeps=False)
    return parser


def _enumerate(args, solid) -> int:
    try:
        config = FilterConfig.none() if args.no_filter else FilterConfig.from_names(args.filters)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    result = sweep(solid, config=config, workers=args.workers, backend=args.backend)
    print(f"solid={result.solid_name} filters={config} total={result.total} seconds={result.seconds:.3f}")
    if args.histogram:
        write_histogram(result.histogram, args.histogram)
    if args.reps and not args.no_reps:
        write_representatives(result.representatives, args.reps)
    if args.obj:
        args.obj.mkdir(parents=True, exist_ok=True)
        for m in result.representatives:
            write_wireframe(solid, int(m), args.obj / f"{solid.name}_{int(m):08x}.obj")
    return EXIT_OK


def _verify(args, solid) -> int:
    group = close_group(solid)
    expected = burnside_orbit_count(group)
    got = sweep(solid, group, FilterConfig.none(), workers=args.workers, backend=args.backend).total
    ok = got == expected
    print(f"solid={solid.name} sweep={got} burnside={expected} {'OK' if ok else 'MISMATCH'}")
    return EXIT_OK if ok else EXIT_FAILED


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    if getattr(args, "workers", 1) < 1:
        print("error: --workers must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        if getattr(args, "backend", None):
            _backend.get(args.backend)
        solid = resolve_solid(args.solid)
        if args.command == "enumerate":
            return _enumerate(args, solid)
        if args.command == "verify":
            return _verify(args, solid)
        group = close_group(solid)
        if args.command == "burnside":
            print(burnside_orbit_count(group))
        else:
            print(f"# {solid.name}: rotation group of order {group.order} acting on {solid.edge_count} edges")
            for i, g in enumerate(group.elements):
                print(f"{i}: {cycle_notation(g)}")
        return EXIT_OK
    except (SolidError, GroupError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
