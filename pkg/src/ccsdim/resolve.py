"""Distance representations with respect to landmark sets, and resolvability checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import DistanceOracle, Edge, GraphError, VertexRangeError


@dataclass(frozen=True)
class ResolveVerdict:
    """Outcome of a resolvability check.

    ``witness`` holds the lexicographically smallest pair of items (vertex
    ids, or edges as endpoint pairs) sharing ``representation``; both are
    ``None`` when the set resolves.
    """

    resolving: bool
    witness: tuple | None = None
    representation: tuple[int, ...] | None = None


def check_landmarks(oracle: DistanceOracle, landmarks: Sequence[int]) -> list[int]:
    K = [int(v) for v in landmarks]
    n = oracle.vertex_count
    for v in K:
        if not 0 <= v < n:
            raise VertexRangeError(f"landmark {v} outside 0..{n - 1}")
    if len(set(K)) != len(K):
        raise GraphError(f"duplicate landmark in {K}")
    return K


def vertex_representation(oracle: DistanceOracle, u: int, landmarks: Sequence[int]) -> tuple[int, ...]:
    K = check_landmarks(oracle, landmarks)
    if not 0 <= u < oracle.vertex_count:
        raise VertexRangeError(f"vertex {u} outside 0..{oracle.vertex_count - 1}")
    return tuple(int(x) for x in oracle.matrix[u, K])


def edge_representation(oracle: DistanceOracle, e: Edge, landmarks: Sequence[int]) -> tuple[int, ...]:
    a, b = e
    if oracle(a, b) != 1:
        raise GraphError(f"{e} is not an edge")
    K = check_landmarks(oracle, landmarks)
    return tuple(int(x) for x in np.minimum(oracle.matrix[a, K], oracle.matrix[b, K]))


def vertex_representations(oracle: DistanceOracle, landmarks: Sequence[int]) -> np.ndarray:
    """Row u is r(u | K)."""
    return oracle.matrix[:, check_landmarks(oracle, landmarks)]


def edge_representations(oracle: DistanceOracle, edges: Sequence[Edge], landmarks: Sequence[int]) -> np.ndarray:
    """Row i is r(edges[i] | K)."""
    K = check_landmarks(oracle, landmarks)
    if len(edges) == 0:
        return np.zeros((0, len(K)), dtype=oracle.matrix.dtype)
    ends = np.asarray(edges, dtype=np.intp)
    return np.minimum(oracle.matrix[ends[:, 0]][:, K], oracle.matrix[ends[:, 1]][:, K])


def representation_groups(reps: np.ndarray) -> list[list[int]]:
    """Row indices sharing identical rows; groups of size >= 2 ordered by smallest member."""
    m = reps.shape[0]
    if m < 2:
        return []
    if reps.shape[1] == 0:
        return [list(range(m))]
    _, inverse, counts = np.unique(reps, axis=0, return_inverse=True, return_counts=True)
    inverse = inverse.reshape(-1)
    buckets: dict[int, list[int]] = {}
    for idx in np.flatnonzero(counts[inverse] > 1):
        buckets.setdefault(int(inverse[idx]), []).append(int(idx))
    return sorted(buckets.values())


def _verdict(reps: np.ndarray, names: Sequence) -> ResolveVerdict:
    groups = representation_groups(reps)
    if not groups:
        return ResolveVerdict(True)
    i, j = groups[0][:2]
    return ResolveVerdict(False, (names[i], names[j]), tuple(int(x) for x in reps[i]))


def is_vertex_resolving(oracle: DistanceOracle, landmarks: Sequence[int]) -> ResolveVerdict:
    return _verdict(vertex_representations(oracle, landmarks), range(oracle.vertex_count))


def is_edge_resolving(oracle: DistanceOracle, edges: Sequence[Edge], landmarks: Sequence[int]) -> ResolveVerdict:
    """Every pair of edges is compared (via grouping by representation)."""
    edges = [tuple(e) for e in edges]
    return _verdict(edge_representations(oracle, edges, landmarks), edges)


def collision_groups(oracle: DistanceOracle, items: Sequence, landmarks: Sequence[int]) -> list[list]:
    """Groups of two or more items with equal representations.

    ``items`` is either a sequence of vertex ids or of edges (pairs); groups
    are listed in the order of their first member, members in input order.
    """
    items = list(items)
    if items and isinstance(items[0], (tuple, list)):
        items = [tuple(e) for e in items]
        reps = edge_representations(oracle, items, landmarks)
    else:
        reps = oracle.matrix[np.asarray(items, dtype=np.intp)][:, check_landmarks(oracle, landmarks)]
    return [[items[i] for i in grp] for grp in representation_groups(reps)]
