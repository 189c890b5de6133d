"""Minimum resolving sets as minimum hitting sets over vertex bitsets.

A pair of items (two vertices, or two edges) is *distinguished* by a
vertex whose distances to the two items differ.  A landmark set resolves
the graph exactly when it hits the distinguishing set of every pair.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .graph import DistanceOracle, Graph
from .resolve import is_edge_resolving, is_vertex_resolving

VERTEX = "vertex"
EDGE = "edge"
VARIANTS = (VERTEX, EDGE)

EXACT_GUARD = 64
BRUTE_FORCE_GUARD = 16


class UnresolvablePairError(ValueError):
    """Two items are twins: no vertex distinguishes them."""

    def __init__(self, pair):
        super().__init__(f"no vertex distinguishes {pair[0]} from {pair[1]}")
        self.pair = pair


class GuardError(ValueError):
    """Instance too large for the requested solver."""


def _items(g: Graph, variant: str) -> list:
    if variant == VERTEX:
        return list(range(g.vertex_count))
    if variant == EDGE:
        return list(g.edges)
    raise ValueError(f"unknown variant {variant!r}")


def _profiles(oracle: DistanceOracle, g: Graph, variant: str) -> np.ndarray:
    if variant == VERTEX:
        return oracle.matrix
    return oracle.edge_profile(g.edges)


def _bits(mask: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


def _members(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


@dataclass(frozen=True)
class DistinguishingMatrix:
    """One row per unordered item pair; ``rows[k]`` has bit v set iff v distinguishes ``pairs[k]``."""

    variant: str
    items: tuple
    pairs: tuple[tuple[int, int], ...]
    rows: tuple[int, ...]
    columns: int

    def zero_rows(self) -> list[int]:
        return [k for k, r in enumerate(self.rows) if r == 0]

    def hits_all(self, landmarks: Iterable[int]) -> bool:
        mask = 0
        for v in landmarks:
            mask |= 1 << v
        return all(r & mask for r in self.rows)

    def item_pair(self, k: int) -> tuple:
        i, j = self.pairs[k]
        return self.items[i], self.items[j]

    def to_dimacs(self) -> str:
        """``p hittingset <pairs> <vertices>`` followed by one line of vertex ids per row."""
        lines = [f"p hittingset {len(self.rows)} {self.columns}"]
        lines.extend(" ".join(map(str, _members(r))) for r in self.rows)
        return "\n".join(lines) + "\n"


def build_matrix(oracle: DistanceOracle, g: Graph, variant: str) -> DistinguishingMatrix:
    items = _items(g, variant)
    prof = _profiles(oracle, g, variant)
    pairs, rows = [], []
    for i in range(len(items)):
        diff = prof[i + 1:] != prof[i]
        for off, mask in enumerate(diff):
            pairs.append((i, i + 1 + off))
            rows.append(_bits(mask))
    return DistinguishingMatrix(variant, tuple(items), tuple(pairs), tuple(rows), g.vertex_count)


def _require_resolvable(matrix: DistinguishingMatrix) -> None:
    zero = matrix.zero_rows()
    if zero:
        raise UnresolvablePairError(matrix.item_pair(zero[0]))


def solve_greedy(matrix: DistinguishingMatrix) -> list[int]:
    """Classic greedy cover: repeatedly take the vertex hitting most open rows (lowest id on ties)."""
    _require_resolvable(matrix)
    open_rows = list(matrix.rows)
    chosen: list[int] = []
    while open_rows:
        best, best_cover = -1, 0
        for v in range(matrix.columns):
            bit = 1 << v
            cover = sum(1 for r in open_rows if r & bit)
            if cover > best_cover:
                best, best_cover = v, cover
        chosen.append(best)
        bit = 1 << best
        open_rows = [r for r in open_rows if not r & bit]
    if not chosen and matrix.columns:
        chosen.append(0)
    return sorted(chosen)


@dataclass
class SolveResult:
    landmarks: list[int]
    optimal: bool
    nodes_explored: int
    elapsed: float
    variant: str
    lower_bound: int = 0

    @property
    def size(self) -> int:
        return len(self.landmarks)


class _BudgetExhausted(Exception):
    pass


@dataclass
class _Search:
    node_budget: int | None
    deadline: float | None
    nodes: int = 0
    best: int | None = None
    best_size: int = 0
    _tick: int = field(default=0, repr=False)

    def _count(self) -> None:
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise _BudgetExhausted
        if self.deadline is not None:
            self._tick += 1
            if self._tick >= 256:
                self._tick = 0
                if time.perf_counter() > self.deadline:
                    raise _BudgetExhausted

    @staticmethod
    def lower_bound(open_rows: list[int]) -> int:
        """Size of a greedily built family of pairwise disjoint rows."""
        used = 0
        lb = 0
        for r in sorted(open_rows, key=lambda r: (r.bit_count(), r)):
            if not r & used:
                used |= r
                lb += 1
        return lb

    def optimise(self, chosen: int, size: int, open_rows: list[int], allowed: int) -> None:
        self._count()
        if not open_rows:
            if self.best is None or size < self.best_size:
                self.best, self.best_size = chosen, size
            return
        if self.best is not None and size + self.lower_bound(open_rows) >= self.best_size:
            return
        branch = min(open_rows, key=lambda r: ((r & allowed).bit_count(), r))
        options = _members(branch & allowed)
        options.sort(key=lambda v: (-sum(1 for r in open_rows if r >> v & 1), v))
        for v in options:
            bit = 1 << v
            self.optimise(chosen | bit, size + 1, [r for r in open_rows if not r & bit], allowed)
            allowed &= ~bit

    def canonical(self, rows: list[int], k: int, full: int) -> int:
        """Lexicographically smallest hitting set of size k (k must be attainable)."""
        chosen, start = 0, 0
        for placed in range(k):
            open_rows = [r for r in rows if not r & chosen]
            if not open_rows:
                break
            for v in range(start, full.bit_length()):
                bit = 1 << v
                rest = [r for r in open_rows if not r & bit]
                higher = full & ~((bit << 1) - 1)
                if self.feasible(0, k - placed - 1, rest, higher) is not None:
                    chosen |= bit
                    start = v + 1
                    break
            else:
                raise AssertionError(f"no hitting set of size {k}")
        return chosen

    def feasible(self, chosen: int, budget: int, open_rows: list[int], allowed: int) -> int | None:
        """A completion of ``chosen`` with at most ``budget`` more vertices from ``allowed``."""
        self._count()
        if not open_rows:
            return chosen
        if budget == 0 or self.lower_bound([r & allowed for r in open_rows]) > budget:
            return None
        branch = min(open_rows, key=lambda r: ((r & allowed).bit_count(), r))
        for v in _members(branch & allowed):
            bit = 1 << v
            found = self.feasible(chosen | bit, budget - 1, [r for r in open_rows if not r & bit], allowed)
            if found is not None:
                return found
            allowed &= ~bit
        return None


def solve_exact(
    matrix: DistinguishingMatrix,
    node_budget: int | None = None,
    time_budget: float | None = None,
    guard: int = EXACT_GUARD,
) -> SolveResult:
    """Branch-and-bound minimum hitting set.

    The greedy cover seeds the incumbent; branching picks the open row with
    the fewest admissible vertices.  Once the optimum size k is known the
    answer is canonicalised to the lexicographically smallest k-set, so it
    does not depend on the search order.  If the budget runs out the best
    set found so far comes back with ``optimal=False``.
    """
    if matrix.columns > guard:
        raise GuardError(f"{matrix.columns} candidate vertices exceed the exact-solve guard {guard}")
    _require_resolvable(matrix)
    start = time.perf_counter()
    deadline = None if time_budget is None else start + time_budget
    rows = sorted(set(matrix.rows))
    search = _Search(node_budget, deadline)

    greedy = solve_greedy(matrix)
    search.best = sum(1 << v for v in greedy)
    search.best_size = len(greedy)
    full = (1 << matrix.columns) - 1
    lb = max(1, search.lower_bound(rows)) if matrix.columns else 0
    try:
        if search.best_size > lb:
            search.optimise(0, 0, rows, full)
        search.best = search.canonical(rows, search.best_size, full)
        optimal = True
    except _BudgetExhausted:
        optimal = False
    landmarks = _members(search.best)
    if not landmarks and matrix.columns:
        landmarks = [0]
    return SolveResult(
        landmarks=landmarks,
        optimal=optimal,
        nodes_explored=search.nodes,
        elapsed=time.perf_counter() - start,
        variant=matrix.variant,
        lower_bound=lb,
    )


def brute_force_min(oracle: DistanceOracle, g: Graph, variant: str, guard: int = BRUTE_FORCE_GUARD) -> list[int]:
    """First resolving set in (size, lexicographic) order, checked by direct representation comparison."""
    if g.vertex_count > guard:
        raise GuardError(f"brute force limited to {guard} vertices, got {g.vertex_count}")
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    for size in range(1, g.vertex_count + 1):
        for K in itertools.combinations(range(g.vertex_count), size):
            if variant == VERTEX:
                ok = is_vertex_resolving(oracle, K).resolving
            else:
                ok = is_edge_resolving(oracle, g.edges, K).resolving
            if ok:
                return list(K)
    return []


def verify(oracle: DistanceOracle, g: Graph, variant: str, landmarks: Sequence[int]):
    if variant == VERTEX:
        return is_vertex_resolving(oracle, landmarks)
    return is_edge_resolving(oracle, g.edges, landmarks)
