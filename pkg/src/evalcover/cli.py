"""Command-line interface.

Exit codes: 0 success / condition holds, 1 condition fails or a verification
mismatch, 2 unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time

from .condition import check_condition1, local_dictators, union_graph
from .errors import ParamInvalid, ProfileError, SelfLoop, TooLarge
from .formats import emit_decomposition, emit_report, parse_edge_list, parse_profile, serialize_profile
from .gen import GENERATOR_VERSION, GenParams, random_connected_graph, random_profile
from .graph import biconnected_components
from .oracle import DEFAULT_MAX_VERTICES
from .profile import MODES, STRICT
from .verify import Tally, random_profiles, verify_profile

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load_profile(path: str, mode: str):
    try:
        return parse_profile(_read(path), mode)
    except ProfileError as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_check(args) -> int:
    p = _load_profile(args.file, args.mode)
    r = check_condition1(p, args.mode)
    sys.stdout.write(emit_report(r, fmt=args.format, profile=p))
    return EXIT_OK if r.holds else EXIT_FAIL


def cmd_dictators(args) -> int:
    p = _load_profile(args.file, args.mode)
    r = check_condition1(p, args.mode)
    d = local_dictators(p, r) if r.holds else None
    sys.stdout.write(emit_report(r, d, fmt=args.format, profile=p))
    return EXIT_OK if r.holds else EXIT_FAIL


def cmd_decompose(args) -> int:
    if (args.file is None) == (args.graph is None):
        raise InputError("give exactly one of a profile file or --graph EDGE_FILE")
    if args.graph is not None:
        try:
            g = parse_edge_list(_read(args.graph))
        except (ProfileError, SelfLoop) as exc:
            raise InputError(f"{args.graph}: {exc}") from None
    else:
        g = union_graph(_load_profile(args.file, args.mode))
    sys.stdout.write(emit_decomposition(biconnected_components(g), args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    tally = Tally()
    if args.random is not None:
        if args.file is not None:
            raise InputError("give either a profile file or --random, not both")
        profiles = random_profiles(args.random, args.seed, args.max_vertices)
    elif args.file is not None:
        profiles = [_load_profile(args.file, args.mode)]
    else:
        raise InputError("give a profile file or --random COUNT")
    try:
        for p in profiles:
            verify_profile(p, tally, args.max_vertices)
    except TooLarge as exc:
        raise InputError(str(exc)) from None

    print(f"profiles: {tally.profiles} (condition holds on {tally.passing})")
    for name, count in tally.checked.items():
        bad = tally.mismatched[name]
        print(f"{name}: {count - bad}/{count} agree")
    for name, p in tally.examples:
        print(f"mismatch in {name}:\n{serialize_profile(p)}", end="")
    print("verdict: " + ("agreement" if tally.ok else "MISMATCH"))
    return EXIT_OK if tally.ok else EXIT_FAIL


def cmd_gen(args) -> int:
    params = GenParams(args.alternatives, args.voters, args.min, args.max, args.bias, args.seed)
    p = random_profile(params)
    sys.stdout.write(f"# generator v{GENERATOR_VERSION} seed {args.seed}\n")
    sys.stdout.write(serialize_profile(p))
    return EXIT_OK


def cmd_bench(args) -> int:
    g = random_connected_graph(args.vertices, args.edges, args.seed)
    biconnected_components(g)  # compile and warm up
    times = []
    for _ in range(args.repeat):
        t0 = time.perf_counter()
        d = biconnected_components(g)
        times.append(time.perf_counter() - t0)
    result = {
        "vertices": args.vertices,
        "edges": g.edge_count,
        "seed": args.seed,
        "repeat": args.repeat,
        "components": len(d),
        "median_seconds": statistics.median(times),
        "min_seconds": min(times),
        "max_seconds": max(times),
        "seconds": times,
    }
    if args.format == "json":
        print(json.dumps(result, indent=2))
    else:
        print(
            f"{result['vertices']} vertices, {result['edges']} edges, {result['components']} components: "
            f"median {result['median_seconds']:.4f}s (min {result['min_seconds']:.4f}s, "
            f"max {result['max_seconds']:.4f}s) over {args.repeat} runs"
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evalcover",
        description="Check whether every cycle of the evaluation graph lies within one voter's evaluation set.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, file_required=True):
        if file_required:
            sp.add_argument("file", help="profile document ('-' for stdin)")
        sp.add_argument("--mode", choices=MODES, default=STRICT)
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("check", help="test the condition on a profile")
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("dictators", help="condition report plus local dictator assignment")
    common(sp)
    sp.set_defaults(func=cmd_dictators)

    sp = sub.add_parser("decompose", help="biconnected components of a profile's union graph or an edge list")
    sp.add_argument("file", nargs="?", help="profile document")
    sp.add_argument("--graph", metavar="EDGE_FILE", help="edge-list document instead of a profile")
    common(sp, file_required=False)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("verify", help="compare production results with brute-force oracles")
    sp.add_argument("file", nargs="?", help="profile document")
    sp.add_argument("--random", type=int, metavar="COUNT", help="check COUNT random profiles instead")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    sp.add_argument("--mode", choices=MODES, default=STRICT)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gen", help="emit a random profile document")
    sp.add_argument("--alternatives", type=int, required=True)
    sp.add_argument("--voters", type=int, required=True)
    sp.add_argument("--min", type=int, default=2)
    sp.add_argument("--max", type=int, default=3)
    sp.add_argument("--bias", type=float, default=0.0)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("bench", help="time the decomposition on a random connected graph")
    sp.add_argument("--vertices", type=int, required=True)
    sp.add_argument("--edges", type=int, required=True)
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--repeat", type=int, default=5)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ParamInvalid) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
