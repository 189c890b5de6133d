"""Crystal cubic carbon graphs CCS(n) and their cube-level metadata.

Every cube occupies eight consecutive vertex ids (``cube_id * 8 + local``),
where ``local`` is a 3-bit corner coordinate and two corners are adjacent
when their coordinates differ in one bit.  A non-central cube hangs off
its parent through local corner 0 (the attachment vertex).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .graph import Edge, Graph, build_graph, canonical_edge

CUBE_EDGES: tuple[Edge, ...] = tuple(
    (v, v ^ (1 << k)) for v in range(8) for k in range(3) if v < v ^ (1 << k)
)
ATTACH_LOCAL = 0
LANDMARK_LOCALS = (1, 2)

DEFAULT_MAX_N = 6

CENTRAL = "central"
INTERMEDIATE = "intermediate"
OUTERMOST = "outermost"


class GenerationGuardError(ValueError):
    """Requested level exceeds the configured size guard."""


@dataclass(frozen=True)
class CubeRecord:
    cube_id: int
    level: int
    role: str
    attachment_vertex: int | None = None
    parent_cube: int | None = None
    bridge_edge: Edge | None = None

    @property
    def vertices(self) -> range:
        return range(self.cube_id * 8, self.cube_id * 8 + 8)

    def to_dict(self) -> dict[str, Any]:
        return {
            "cube_id": self.cube_id,
            "level": self.level,
            "role": self.role,
            "attachment_vertex": self.attachment_vertex,
            "parent_cube": self.parent_cube,
            "bridge_edge": list(self.bridge_edge) if self.bridge_edge else None,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "CubeRecord":
        bridge = d.get("bridge_edge")
        return cls(
            cube_id=d["cube_id"],
            level=d["level"],
            role=d["role"],
            attachment_vertex=d.get("attachment_vertex"),
            parent_cube=d.get("parent_cube"),
            bridge_edge=tuple(bridge) if bridge else None,
        )


@dataclass(frozen=True)
class CcsGraph:
    graph: Graph
    n: int
    cubes: tuple[CubeRecord, ...]

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    def vertex_to_cube(self, v: int) -> tuple[int, int]:
        """``(cube_id, local corner)`` of vertex ``v``."""
        if not 0 <= v < self.graph.vertex_count:
            raise IndexError(v)
        return divmod(v, 8)

    def cubes_with_role(self, role: str) -> list[CubeRecord]:
        return [c for c in self.cubes if c.role == role]

    @property
    def outermost(self) -> list[CubeRecord]:
        if self.n == 1:
            return list(self.cubes)
        return self.cubes_with_role(OUTERMOST)

    @property
    def bridge_edges(self) -> list[Edge]:
        return [c.bridge_edge for c in self.cubes if c.bridge_edge is not None]

    def cube_edges(self, cube_id: int) -> list[Edge]:
        """The 12 edges inside one cube, in canonical order."""
        base = cube_id * 8
        return sorted((base + a, base + b) for a, b in CUBE_EDGES)

    def children(self, cube_id: int) -> list[int]:
        return [c.cube_id for c in self.cubes if c.parent_cube == cube_id]

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "vertex_count": self.graph.vertex_count,
            "edges": [list(e) for e in self.graph.edges],
            "cubes": [c.to_dict() for c in self.cubes],
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "CcsGraph":
        graph = build_graph(d["vertex_count"], d["edges"])
        return cls(graph, d["n"], tuple(CubeRecord.from_dict(c) for c in d["cubes"]))


@dataclass(frozen=True)
class CountReport:
    cubes: int
    vertices: int
    edges: int
    bridge_edges: int
    outermost_cubes: int
    degree3_vertices: int


@dataclass(frozen=True)
class CubeLabeling:
    """Corner names r1..r8 and edge names e1..e12 on a single cube.

    ``vertices[i]`` is the vertex id of r_{i+1}; ``edges[i]`` is the
    canonical endpoint pair of e_{i+1}.
    """

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def r(self, i: int) -> int:
        return self.vertices[i - 1]

    def e(self, i: int) -> Edge:
        return self.edges[i - 1]

    def edge_name(self, edge: Edge) -> str:
        return f"e{self.edges.index(canonical_edge(*edge)) + 1}"

    def antipode(self, v: int) -> int:
        return v ^ 0b111


# Bottom face r1 r2 r3 r4, top face r5 r6 r7 r8, with r_i above r_{i+4}.
_R_LOCAL = (0b000, 0b001, 0b011, 0b010, 0b100, 0b101, 0b111, 0b110)
_E_BY_R = (
    (1, 2), (2, 3), (3, 4), (4, 1), (4, 8), (5, 8),
    (1, 5), (5, 6), (7, 8), (2, 6), (3, 7), (6, 7),
)


def unit_cube_labeling() -> CubeLabeling:
    """Corner/edge naming of CCS(1) that reproduces the 12-row edge table for {r1, r2, r3}."""
    edges = tuple(canonical_edge(_R_LOCAL[a - 1], _R_LOCAL[b - 1]) for a, b in _E_BY_R)
    return CubeLabeling(_R_LOCAL, edges)


def _check_n(n: int, max_n: int | None) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    limit = DEFAULT_MAX_N if max_n is None else max_n
    if n > limit:
        raise GenerationGuardError(f"n={n} exceeds the generation guard n <= {limit}")


def generate_ccs(n: int, max_n: int | None = None) -> CcsGraph:
    """Build CCS(n).

    Level 1 is a single cube.  Each further level bridges a fresh cube
    onto every degree-3 vertex of the previous structure: all eight
    corners of the central cube, then the seven free corners of each
    newest cube.  Cube ids follow breadth-first order with siblings
    sorted by the parent vertex they hang from.

    ``max_n`` overrides the default size guard.
    """
    _check_n(n, max_n)
    cubes = [CubeRecord(0, 1, CENTRAL)]
    frontier = [0]
    bridges: list[Edge] = []
    for level in range(2, n + 1):
        role = OUTERMOST if level == n else INTERMEDIATE
        new_frontier = []
        for parent in frontier:
            free = range(8) if parent == 0 else range(1, 8)
            for local in free:
                cid = len(cubes)
                attach = cid * 8 + ATTACH_LOCAL
                bridge = canonical_edge(parent * 8 + local, attach)
                cubes.append(CubeRecord(cid, level, role, attach, parent, bridge))
                bridges.append(bridge)
                new_frontier.append(cid)
        frontier = new_frontier

    edges = [(c * 8 + a, c * 8 + b) for c in range(len(cubes)) for a, b in CUBE_EDGES]
    edges.extend(bridges)
    return CcsGraph(build_graph(8 * len(cubes), edges), n, tuple(cubes))


def expected_counts(n: int) -> CountReport:
    """Closed-form counts for CCS(n), without building it."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if n == 1:
        return CountReport(1, 8, 12, 0, 1, 8)
    outer = 8 * 7 ** (n - 2)
    cubes = 1 + sum(8 * 7 ** (k - 2) for k in range(2, n + 1))
    return CountReport(
        cubes=cubes,
        vertices=8 * cubes,
        edges=12 * cubes + cubes - 1,
        bridge_edges=cubes - 1,
        outermost_cubes=outer,
        degree3_vertices=7 * outer,
    )


def measured_counts(g: CcsGraph) -> CountReport:
    degs = [len(a) for a in g.graph.adjacency]
    return CountReport(
        cubes=len(g.cubes),
        vertices=g.graph.vertex_count,
        edges=g.graph.edge_count,
        bridge_edges=len(g.bridge_edges),
        outermost_cubes=len(g.outermost),
        degree3_vertices=sum(1 for d in degs if d == 3),
    )


def canonical_landmarks(g: CcsGraph) -> list[int]:
    """The landmark set whose size matches the proven edge metric dimension.

    For n = 1 this is (r1, r2, r3); otherwise two neighbours of the
    attachment vertex in every outermost cube.
    """
    if g.n == 1:
        lab = unit_cube_labeling()
        return [lab.r(1), lab.r(2), lab.r(3)]
    return [c.cube_id * 8 + loc for c in g.outermost for loc in LANDMARK_LOCALS]
