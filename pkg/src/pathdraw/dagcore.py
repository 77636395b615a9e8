"""Immutable DAG representation, topological ordering, and longest-path levels.

Vertices are dense integers ``0..n-1``; an optional label table maps them back
to external tokens. Acyclicity is checked once at construction, so every
operation downstream may assume a topological order exists.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .errors import CycleDetected, SelfLoop

__all__ = ["Dag", "TopoOrder", "build_dag", "topological_sort", "longest_path_layering"]


@dataclass(frozen=True)
class Dag:
    """Directed acyclic graph with adjacency in both directions.

    ``edges`` keeps insertion order (duplicates already collapsed); adjacency
    lists are sorted ascending so traversals are reproducible.
    ``duplicate_count`` reports how many repeated input edges were dropped.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...]
    duplicate_count: int = 0
    out_adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    in_adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.vertex_count
        if len(self.labels) != n:
            raise ValueError(f"expected {n} labels, got {len(self.labels)}")
        outs: list[list[int]] = [[] for _ in range(n)]
        ins: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise SelfLoop(self.labels[u])
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            outs[u].append(v)
            ins[v].append(u)
        object.__setattr__(self, "out_adjacency", tuple(tuple(sorted(a)) for a in outs))
        object.__setattr__(self, "in_adjacency", tuple(tuple(sorted(a)) for a in ins))
        self._check_acyclic()

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def label(self, v: int) -> str:
        return self.labels[v]

    def _check_acyclic(self) -> None:
        n = self.vertex_count
        indeg = [len(a) for a in self.in_adjacency]
        stack = [v for v in range(n) if indeg[v] == 0]
        removed = 0
        while stack:
            u = stack.pop()
            removed += 1
            for v in self.out_adjacency[u]:
                indeg[v] -= 1
                if indeg[v] == 0:
                    stack.append(v)
        if removed != n:
            raise CycleDetected(self._find_cycle())

    def _find_cycle(self) -> list[str]:
        # walk out-edges restricted to vertices on cycles until one repeats
        indeg = [len(a) for a in self.in_adjacency]
        stack = [v for v in range(self.vertex_count) if indeg[v] == 0]
        alive = [True] * self.vertex_count
        while stack:
            u = stack.pop()
            alive[u] = False
            for v in self.out_adjacency[u]:
                indeg[v] -= 1
                if indeg[v] == 0:
                    stack.append(v)
        start = next(v for v in range(self.vertex_count) if alive[v])
        seen_at: dict[int, int] = {}
        walk: list[int] = []
        v = start
        while v not in seen_at:
            seen_at[v] = len(walk)
            walk.append(v)
            v = next(w for w in self.out_adjacency[v] if alive[w])
        cycle = walk[seen_at[v]:]
        return [self.labels[u] for u in cycle]


@dataclass(frozen=True)
class TopoOrder:
    """A topological order: ``rank`` is a permutation with rank(u) < rank(v) per edge."""

    rank: tuple[int, ...]

    @property
    def order(self) -> tuple[int, ...]:
        """Vertices listed in ascending rank."""
        out = [0] * len(self.rank)
        for v, r in enumerate(self.rank):
            out[r] = v
        return tuple(out)


def build_dag(edge_pairs: list[tuple[str, str]]) -> Dag:
    """Build a Dag from token pairs, assigning dense ids in first-appearance order.

    Duplicate edges are collapsed and counted. Raises SelfLoop or CycleDetected
    on invalid input.
    """
    ids: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    duplicates = 0
    for src, dst in edge_pairs:
        if src == dst:
            raise SelfLoop(src)
        u = ids.setdefault(src, len(ids))
        v = ids.setdefault(dst, len(ids))
        if (u, v) in seen:
            duplicates += 1
            continue
        seen.add((u, v))
        edges.append((u, v))
    labels = tuple(ids)  # insertion order == id order
    return Dag(len(ids), tuple(edges), labels, duplicates)


def topological_sort(g: Dag) -> TopoOrder:
    """Kahn's algorithm with smallest-vertex-id-first tie-breaking."""
    n = g.vertex_count
    indeg = [len(a) for a in g.in_adjacency]
    ready = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(ready)
    rank = [0] * n
    for position in range(n):
        u = heapq.heappop(ready)
        rank[u] = position
        for v in g.out_adjacency[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(ready, v)
    return TopoOrder(tuple(rank))


def longest_path_layering(g: Dag) -> tuple[tuple[int, ...], int]:
    """Longest incoming path length per vertex, plus the overall maximum L.

    level(v) is 0 for sources, else 1 + max over predecessors. This is the
    reference oracle for layout compaction and is kept independent of the
    kernel backends on purpose.
    """
    order = topological_sort(g).order
    levels = [0] * g.vertex_count
    for v in order:
        best = -1
        for w in g.in_adjacency[v]:
            if levels[w] > best:
                best = levels[w]
        levels[v] = best + 1
    top = max(levels, default=0)
    return tuple(levels), top
