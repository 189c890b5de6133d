"""Immutable simple graphs and exact unweighted distances."""

from __future__ import annotations

import random
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

Edge = tuple[int, int]

DIST_DTYPE = np.uint16
UNREACHABLE = int(np.iinfo(DIST_DTYPE).max)


class GraphError(ValueError):
    """Base class for malformed graph input."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError, IndexError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..vertex_count-1``.

    ``edges`` is kept in canonical order (sorted ``(min, max)`` pairs), so
    an edge's position in the list is a stable index.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u] if 0 <= u < self.vertex_count else False

    def edge_index(self, edge: Edge) -> int:
        """Position of ``edge`` in the canonical edge list."""
        try:
            return self._edge_lookup()[canonical_edge(*edge)]
        except KeyError:
            raise GraphError(f"{edge} is not an edge of the graph") from None

    def _edge_lookup(self) -> dict[Edge, int]:
        lookup = self.__dict__.get("_lookup")
        if lookup is None:
            lookup = {e: i for i, e in enumerate(self.edges)}
            object.__setattr__(self, "_lookup", lookup)
        return lookup


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


def build_graph(vertex_count: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate an edge list and return the canonical :class:`Graph`.

    Raises :class:`SelfLoopError`, :class:`DuplicateEdgeError` or
    :class:`VertexRangeError` for the corresponding defects.
    """
    if vertex_count < 0:
        raise GraphError(f"negative vertex count {vertex_count}")
    seen: set[Edge] = set()
    for pair in edges:
        u, v = (int(x) for x in pair)
        for x in (u, v):
            if not 0 <= x < vertex_count:
                raise VertexRangeError(f"endpoint {x} outside 0..{vertex_count - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        e = canonical_edge(u, v)
        if e in seen:
            raise DuplicateEdgeError(f"duplicate edge {e}")
        seen.add(e)

    canon = tuple(sorted(seen))
    adj: list[list[int]] = [[] for _ in range(vertex_count)]
    for u, v in canon:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(vertex_count, canon, tuple(tuple(sorted(a)) for a in adj))


def degree(g: Graph, v: int) -> int:
    return len(g.adjacency[v])


def is_connected(g: Graph) -> bool:
    if g.vertex_count <= 1:
        return True
    return UNREACHABLE not in bfs_distances(g, 0)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get ``UNREACHABLE``."""
    if not 0 <= source < g.vertex_count:
        raise VertexRangeError(f"source {source} outside 0..{g.vertex_count - 1}")
    dist = [UNREACHABLE] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return dist


@dataclass(frozen=True)
class DistanceOracle:
    """All-pairs hop distances as a read-only ``uint16`` matrix."""

    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.matrix.setflags(write=False)

    @property
    def vertex_count(self) -> int:
        return self.matrix.shape[0]

    def __call__(self, u: int, v: int) -> int:
        return int(self.matrix[u, v])

    def edge_profile(self, edges: Sequence[Edge]) -> np.ndarray:
        """Edge-to-vertex distance for every edge (rows) and vertex (columns)."""
        if len(edges) == 0:
            return np.zeros((0, self.vertex_count), dtype=DIST_DTYPE)
        ends = np.asarray(edges, dtype=np.intp)
        return np.minimum(self.matrix[ends[:, 0]], self.matrix[ends[:, 1]])


def all_pairs(g: Graph, workers: int | None = None) -> DistanceOracle:
    """Run :func:`bfs_distances` from every vertex.

    With ``workers > 1`` sources are spread over a thread pool; each row is
    written by exactly one task, so the result does not depend on the
    schedule.
    """
    n = g.vertex_count
    mat = np.empty((n, n), dtype=DIST_DTYPE)
    if workers and workers > 1 and n > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for s, row in zip(range(n), pool.map(lambda s: bfs_distances(g, s), range(n))):
                mat[s] = row
    else:
        for s in range(n):
            mat[s] = bfs_distances(g, s)
    return DistanceOracle(mat)


def edge_vertex_distance(oracle: DistanceOracle, e: Edge, h: int) -> int:
    a, b = e
    return min(oracle(a, h), oracle(b, h))


def hypercube(dim: int = 3) -> Graph:
    """Q_dim with vertices as bit vectors; adjacency is Hamming distance 1."""
    n = 1 << dim
    return build_graph(n, [(v, v ^ (1 << k)) for v in range(n) for k in range(dim) if v < v ^ (1 << k)])


def path_graph(k: int) -> Graph:
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    return build_graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_connected_graph(vertex_count: int, extra_edge_prob: float, seed: int) -> Graph:
    """Random spanning tree plus independent extra edges, fully determined by ``seed``."""
    rng = random.Random(seed)
    order = list(range(vertex_count))
    rng.shuffle(order)
    edges = {canonical_edge(order[i], order[rng.randrange(i)]) for i in range(1, vertex_count)}
    for u in range(vertex_count):
        for v in range(u + 1, vertex_count):
            if (u, v) not in edges and rng.random() < extra_edge_prob:
                edges.add((u, v))
    return build_graph(vertex_count, edges)
