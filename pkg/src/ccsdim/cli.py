"""Command line: ``ccsdim {gen,verify,solve,certify,crosscheck}``.

Exit codes: 0 success / resolving, 1 negative verdict or failed
certificate, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import formats
from .ccs import DEFAULT_MAX_N, CcsGraph, GenerationGuardError, generate_ccs
from .certify import DEFAULT_CERT_MAX_N, certify_all, reports_to_json, reports_to_text
from .graph import GraphError, all_pairs, is_connected, random_connected_graph
from .solver import (
    EDGE,
    VARIANTS,
    GuardError,
    UnresolvablePairError,
    brute_force_min,
    build_matrix,
    solve_exact,
    solve_greedy,
    verify,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def parse_landmarks(text: str) -> list[int]:
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise UsageError(f"malformed landmark list: {text!r}") from None


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", nargs="?", help="graph file (format from suffix unless --format)")
    p.add_argument("--ccs", type=_positive, metavar="N", help="use the generated CCS(N) instead of a file")
    p.add_argument("--format", choices=formats.FORMATS, help="input format")


def _load_graph(args):
    if args.ccs is not None:
        if args.graph:
            raise UsageError("give either a graph file or --ccs, not both")
        return generate_ccs(args.ccs)
    if not args.graph:
        raise UsageError("a graph file or --ccs N is required")
    try:
        return formats.load(args.graph, args.format)
    except OSError as exc:
        raise UsageError(f"cannot read {args.graph}: {exc}") from exc


def _plain(g):
    return g.graph if isinstance(g, CcsGraph) else g


def _write(text: str, output: str | None) -> None:
    if output in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        Path(output).write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {output}: {exc}") from exc


def cmd_gen(args) -> int:
    g = generate_ccs(args.n, max_n=args.max_n)
    _write(formats.dumps(g, args.format), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _plain(_load_graph(args))
    if args.landmarks is not None:
        K = parse_landmarks(args.landmarks)
    elif args.landmarks_file:
        try:
            K = parse_landmarks(Path(args.landmarks_file).read_text())
        except OSError as exc:
            raise UsageError(f"cannot read {args.landmarks_file}: {exc}") from exc
    else:
        raise UsageError("--landmarks or --landmarks-file is required")
    oracle = all_pairs(g)
    verdict = verify(oracle, g, args.variant, K)
    if args.json:
        doc = {
            "variant": args.variant,
            "landmarks": K,
            "resolving": verdict.resolving,
            "witness": [list(w) if isinstance(w, tuple) else w for w in verdict.witness] if verdict.witness else None,
            "representation": list(verdict.representation) if verdict.representation else None,
        }
        print(json.dumps(doc))
    elif verdict.resolving:
        print(f"resolving: {len(K)} landmarks resolve every {args.variant}")
    else:
        a, b = verdict.witness
        print(f"not resolving: {a} and {b} share representation {verdict.representation}")
    return EXIT_OK if verdict.resolving else EXIT_NEGATIVE


def cmd_solve(args) -> int:
    g = _plain(_load_graph(args))
    if not is_connected(g):
        raise UsageError("solving needs a connected graph")
    oracle = all_pairs(g)
    matrix = build_matrix(oracle, g, args.variant)
    if args.export_matrix:
        _write(matrix.to_dimacs(), args.export_matrix)
    if args.greedy:
        landmarks = solve_greedy(matrix)
        optimal, nodes = False, 0
    else:
        res = solve_exact(matrix, node_budget=args.node_budget, time_budget=args.time_budget)
        landmarks, optimal, nodes = res.landmarks, res.optimal, res.nodes_explored
    verified = verify(oracle, g, args.variant, landmarks).resolving
    if args.json:
        print(json.dumps({
            "variant": args.variant,
            "method": "greedy" if args.greedy else "exact",
            "landmarks": landmarks,
            "size": len(landmarks),
            "optimal": optimal,
            "nodes_explored": nodes,
            "verified": verified,
        }))
    else:
        print(f"variant: {args.variant}")
        print(f"method: {'greedy' if args.greedy else 'exact'}")
        print(f"size: {len(landmarks)}")
        print(f"optimal: {str(optimal).lower()}")
        print(f"verified: {str(verified).lower()}")
        print("landmarks: " + " ".join(map(str, landmarks)))
    return EXIT_OK if verified else EXIT_NEGATIVE


def cmd_certify(args) -> int:
    reports = certify_all(args.n_max)
    text = reports_to_json(reports, timings=args.timings) if args.json else reports_to_text(reports)
    _write(text, args.output)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_NEGATIVE


def cmd_crosscheck(args) -> int:
    """Exact solver vs brute force on seeded random connected graphs."""
    failures = 0
    for i in range(args.count):
        seed = args.seed * 100003 + i
        size = args.min_vertices + seed % (args.max_vertices - args.min_vertices + 1)
        g = random_connected_graph(size, args.density, seed)
        oracle = all_pairs(g)
        for variant in VARIANTS:
            matrix = build_matrix(oracle, g, variant)
            exact = solve_exact(matrix)
            brute = brute_force_min(oracle, g, variant)
            greedy_ok = verify(oracle, g, variant, solve_greedy(matrix)).resolving
            ok = exact.optimal and exact.size == len(brute) and greedy_ok
            failures += not ok
            if not ok or args.verbose:
                print(f"graph {i} (V={size}, E={g.edge_count}) {variant}: exact={exact.size} "
                      f"brute={len(brute)} greedy_ok={greedy_ok} {'ok' if ok else 'MISMATCH'}")
    print(f"{2 * args.count - failures}/{2 * args.count} instance checks agree")
    return EXIT_OK if failures == 0 else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ccsdim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write CCS(n)")
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("--format", choices=formats.FORMATS, default="json")
    p.add_argument("-o", "--output")
    p.add_argument("--max-n", type=_positive, default=DEFAULT_MAX_N,
                   help=f"generation guard (default {DEFAULT_MAX_N})")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check whether a landmark set resolves a graph")
    _add_graph_source(p)
    p.add_argument("--landmarks", help="comma or space separated vertex ids")
    p.add_argument("--landmarks-file")
    p.add_argument("--variant", choices=VARIANTS, default=EDGE)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="find a minimum (or greedy) resolving set")
    _add_graph_source(p)
    p.add_argument("--variant", choices=VARIANTS, default=EDGE)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--greedy", action="store_true")
    p.add_argument("--node-budget", type=_positive)
    p.add_argument("--time-budget", type=float, metavar="SECONDS")
    p.add_argument("--export-matrix", metavar="PATH", help="write the hitting-set rows")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("certify", help="run every certificate up to --n-max")
    p.add_argument("--n-max", type=_positive, default=2)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true", help="include runtimes in JSON output")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("crosscheck", help="exact solver vs brute force on random graphs")
    p.add_argument("--count", type=_positive, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--min-vertices", type=_positive, default=5)
    p.add_argument("--max-vertices", type=_positive, default=12)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_crosscheck)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "certify" and args.n_max > DEFAULT_CERT_MAX_N:
        parser.error(f"--n-max is limited to {DEFAULT_CERT_MAX_N}")
    try:
        return args.func(args)
    except (UsageError, GraphError, GuardError, GenerationGuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnresolvablePairError as exc:
        print(f"unresolvable: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
