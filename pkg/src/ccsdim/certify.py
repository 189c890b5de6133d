"""Machine checks of the CCS(n) resolvability results.

Each ``certify_*`` function returns a :class:`CertReport` whose ``details``
are plain JSON data; ``status`` is ``"pass"`` only if every sub-check held.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .ccs import (
    ATTACH_LOCAL,
    expected_counts,
    generate_ccs,
    measured_counts,
    canonical_landmarks,
    unit_cube_labeling,
)
from .graph import all_pairs
from .resolve import (
    representation_groups,
    collision_groups,
    edge_representation,
    edge_representations,
    is_edge_resolving,
    is_vertex_resolving,
)
from .solver import EDGE, VERTEX, brute_force_min, build_matrix, solve_exact

SCHEMA = "ccsdim.cert/1"
DEFAULT_CERT_MAX_N = 4

# Edge table for R_E = {r1, r2, r3} on the unit cube, indexed by edge number.
THEOREM1_TABLE = {
    1: (0, 0, 1), 2: (1, 0, 0), 3: (1, 1, 0), 4: (0, 1, 1),
    5: (1, 2, 1), 6: (1, 2, 2), 7: (0, 1, 2), 8: (1, 1, 2),
    9: (2, 2, 1), 10: (1, 0, 1), 11: (2, 1, 0), 12: (2, 1, 1),
}


@dataclass
class CertReport:
    claim: str
    status: str
    details: dict[str, Any] = field(default_factory=dict)
    runtime: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timings: bool = False) -> dict[str, Any]:
        d = {"claim": self.claim, "status": self.status, "details": self.details}
        if timings:
            d["runtime_s"] = round(self.runtime, 6)
        return d


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def _edge(e) -> list[int]:
    return [int(e[0]), int(e[1])]


def certify_theorem1() -> CertReport:
    t0 = time.perf_counter()
    g = generate_ccs(1)
    oracle = all_pairs(g.graph)
    lab = unit_cube_labeling()
    edges = g.graph.edges
    K = [lab.r(1), lab.r(2), lab.r(3)]

    rows = {}
    table_ok = True
    for i, expected in THEOREM1_TABLE.items():
        got = edge_representation(oracle, lab.e(i), K)
        rows[f"e{i}"] = {"edge": _edge(lab.e(i)), "representation": list(got), "expected": list(expected)}
        table_ok &= got == expected
    unique = is_edge_resolving(oracle, edges, K).resolving

    small_failures = 0
    small_total = 0
    for size in (1, 2):
        for S in itertools.combinations(range(8), size):
            small_total += 1
            small_failures += not is_edge_resolving(oracle, edges, S).resolving

    # The three printed two-vertex counterexamples; the diagonal case uses
    # r3 and its true antipode since only that pair lies on a main diagonal.
    printed = [
        ("face diagonal", [lab.r(1), lab.r(3)], (1, 4), (0, 1)),
        ("face edge", [lab.r(2), lab.r(3)], (4, 12), (1, 1)),
        ("main diagonal", [lab.r(3), lab.antipode(lab.r(3))], (4, 5), (1, 1)),
    ]
    cases = []
    cases_ok = True
    for name, S, (a, b), vec in printed:
        ea, eb = lab.e(a), lab.e(b)
        groups = collision_groups(oracle, list(edges), S)
        found = any(ea in grp and eb in grp for grp in groups)
        rep_a = edge_representation(oracle, ea, S)
        rep_b = edge_representation(oracle, eb, S)
        ok = found and rep_a == rep_b == vec
        cases_ok &= ok
        verdict = is_edge_resolving(oracle, edges, S)
        cases.append({
            "case": name,
            "landmarks": S,
            "pair": [f"e{a}", f"e{b}"],
            "edges": [_edge(ea), _edge(eb)],
            "representation": list(rep_a),
            "recovered": ok,
            "smallest_witness": [_edge(w) for w in verdict.witness] if verdict.witness else None,
        })

    minima = {}
    minima_ok = True
    for variant in (EDGE, VERTEX):
        res = solve_exact(build_matrix(oracle, g.graph, variant))
        brute = brute_force_min(oracle, g.graph, variant)
        minima[variant] = {"exact": res.size, "optimal": res.optimal, "brute_force": len(brute),
                           "landmarks": res.landmarks}
        minima_ok &= res.optimal and res.size == 3 and len(brute) == 3

    ok = table_ok and unique and small_failures == small_total and cases_ok and minima_ok
    return CertReport(
        "theorem1",
        _status(ok),
        {
            "labeling": {f"r{i + 1}": v for i, v in enumerate(lab.vertices)},
            "table": rows,
            "table_matches": table_ok,
            "table_unique": unique,
            "small_sets_checked": small_total,
            "small_sets_failing": small_failures,
            "printed_cases": cases,
            "minimum": minima,
        },
        time.perf_counter() - t0,
    )


def certify_counts(n: int) -> CertReport:
    t0 = time.perf_counter()
    g = generate_ccs(n, max_n=max(n, DEFAULT_CERT_MAX_N))
    got = measured_counts(g)
    want = expected_counts(n)

    degree_ok = True
    for cube in g.cubes:
        degs = [len(g.graph.adjacency[v]) for v in cube.vertices]
        if n == 1:
            expected = [3] * 8
        elif cube.role == "outermost":
            expected = [4 if loc == ATTACH_LOCAL else 3 for loc in range(8)]
        else:
            expected = [4] * 8
        degree_ok &= degs == expected
    hist: dict[int, int] = {}
    for a in g.graph.adjacency:
        hist[len(a)] = hist.get(len(a), 0) + 1

    return CertReport(
        f"counts(n={n})",
        _status(got == want and degree_ok),
        {
            "n": n,
            "measured": got.__dict__,
            "expected": want.__dict__,
            "degree_histogram": {str(k): hist[k] for k in sorted(hist)},
            "degrees_match_roles": degree_ok,
        },
        time.perf_counter() - t0,
    )


def certify_upper_bound(n: int, drop_landmark: int | None = None) -> CertReport:
    """The constructed landmark set edge- and vertex-resolves CCS(n).

    ``drop_landmark`` removes one landmark (by position) to exercise the
    failure path.
    """
    if n < 2:
        raise ValueError("upper-bound certificate needs n >= 2")
    t0 = time.perf_counter()
    g = generate_ccs(n, max_n=max(n, DEFAULT_CERT_MAX_N))
    oracle = all_pairs(g.graph)
    K = canonical_landmarks(g)
    if drop_landmark is not None:
        K = K[:drop_landmark] + K[drop_landmark + 1:]
    target = 16 * 7 ** (n - 2)
    m = g.graph.edge_count

    edge_v = is_edge_resolving(oracle, g.graph.edges, K)
    vert_v = is_vertex_resolving(oracle, K)
    details = {
        "n": n,
        "landmark_count": len(K),
        "formula": target,
        "edges": m,
        "edge_pairs_compared": m * (m - 1) // 2,
        "vertices": g.graph.vertex_count,
        "edge_resolving": edge_v.resolving,
        "vertex_resolving": vert_v.resolving,
        "landmarks": K,
    }
    if drop_landmark is not None:
        details["dropped_position"] = drop_landmark
    if edge_v.witness:
        details["edge_witness"] = [_edge(e) for e in edge_v.witness]
        details["edge_witness_representation"] = list(edge_v.representation)
    if vert_v.witness:
        details["vertex_witness"] = list(vert_v.witness)
    ok = len(K) == target and edge_v.resolving and vert_v.resolving
    return CertReport(f"upper_bound(n={n})", _status(ok), details, time.perf_counter() - t0)


def _in_cube_witness(oracle, cube_edges, W) -> tuple | None:
    reps = edge_representations(oracle, cube_edges, W)
    groups = representation_groups(reps)
    if not groups:
        return None
    i, j = groups[0][:2]
    return cube_edges[i], cube_edges[j]


def certify_lower_bound(n: int) -> CertReport:
    """Every edge metric generator keeps at least two vertices of each outermost cube.

    For each outermost cube C and each v in C (or none), the set of all
    vertices outside C plus v must fail to resolve the edges of C.  Any
    generator with fewer than two vertices in C is a subset of one of these
    sets, so it fails too.
    """
    if n < 2:
        raise ValueError("lower-bound certificate needs n >= 2")
    t0 = time.perf_counter()
    g = generate_ccs(n, max_n=max(n, DEFAULT_CERT_MAX_N))
    oracle = all_pairs(g.graph)
    all_vertices = np.arange(g.graph.vertex_count)
    edges = list(g.graph.edges)

    checks = 0
    failing = 0
    in_cube = 0
    catalog_ok = True
    cube_rows = []
    for cube in g.outermost:
        cube_edges = g.cube_edges(cube.cube_id)
        outside = all_vertices[(all_vertices < cube.vertices.start) | (all_vertices >= cube.vertices.stop)]
        per_kept = []
        for kept in [None, *cube.vertices]:
            W = outside.tolist() if kept is None else sorted([*outside.tolist(), kept])
            checks += 1
            witness = _in_cube_witness(oracle, cube_edges, W)
            # An in-cube collision already rules W out; otherwise look everywhere.
            failing += witness is not None or not is_edge_resolving(oracle, edges, W).resolving
            in_cube += witness is not None
            entry = {
                "kept": kept,
                "kept_local": None if kept is None else kept - cube.vertices.start,
                "witness": [_edge(e) for e in witness] if witness else None,
            }
            if kept is None or kept == cube.attachment_vertex:
                # Both colliding edges must meet at the attachment vertex.
                entry["catalog_pattern"] = bool(witness) and all(cube.attachment_vertex in e for e in witness)
                catalog_ok &= entry["catalog_pattern"]
            per_kept.append(entry)
        cube_rows.append({"cube": cube.cube_id, "attachment_vertex": cube.attachment_vertex, "checks": per_kept})

    outer = len(g.outermost)
    ok = failing == checks and in_cube == checks and catalog_ok and checks == 9 * outer
    return CertReport(
        f"lower_bound(n={n})",
        _status(ok),
        {
            "n": n,
            "outermost_cubes": outer,
            "superset_checks": checks,
            "failing": failing,
            "with_in_cube_witness": in_cube,
            "catalog_pattern_ok": catalog_ok,
            "implied_lower_bound": 2 * outer,
            "formula": 16 * 7 ** (n - 2),
            "cubes": cube_rows,
        },
        time.perf_counter() - t0,
    )


def certify_all(n_max: int) -> list[CertReport]:
    """Theorem-1 checks, counts for every level, then both bounds for n >= 2."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if n_max > DEFAULT_CERT_MAX_N:
        raise ValueError(f"n_max={n_max} exceeds the certification guard {DEFAULT_CERT_MAX_N}")
    reports = [certify_theorem1()]
    reports.extend(certify_counts(n) for n in range(1, n_max + 1))
    for n in range(2, n_max + 1):
        reports.append(certify_upper_bound(n))
        reports.append(certify_lower_bound(n))
    return reports


def reports_to_json(reports: list[CertReport], timings: bool = False) -> str:
    doc = {
        "schema": SCHEMA,
        "status": _status(all(r.passed for r in reports)),
        "reports": [r.to_dict(timings) for r in reports],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def reports_to_text(reports: list[CertReport]) -> str:
    width = max(len(r.claim) for r in reports)
    lines = [f"{r.claim:<{width}}  {r.status.upper():<4}  {r.runtime:8.3f}s  {_summary(r)}" for r in reports]
    overall = "PASS" if all(r.passed for r in reports) else "FAIL"
    lines.append(f"overall: {overall} ({sum(r.passed for r in reports)}/{len(reports)})")
    return "\n".join(lines) + "\n"


def _summary(r: CertReport) -> str:
    d = r.details
    if r.claim == "theorem1":
        return (f"table={'ok' if d['table_matches'] else 'MISMATCH'} "
                f"small-sets failing {d['small_sets_failing']}/{d['small_sets_checked']} "
                f"edim={d['minimum']['edge']['exact']} dim={d['minimum']['vertex']['exact']}")
    if r.claim.startswith("counts"):
        m = d["measured"]
        return f"cubes={m['cubes']} vertices={m['vertices']} edges={m['edges']} degree3={m['degree3_vertices']}"
    if r.claim.startswith("upper"):
        s = f"|K|={d['landmark_count']} (formula {d['formula']}) edges={d['edges']} resolving={d['edge_resolving']}"
        if "edge_witness" in d:
            s += f" witness={d['edge_witness']}"
        return s
    return (f"{d['failing']}/{d['superset_checks']} supersets fail, "
            f"edim >= {d['implied_lower_bound']}")
