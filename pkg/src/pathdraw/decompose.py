"""Vertex-disjoint path decompositions and the edge tri-partition.

A decomposition assigns every vertex to exactly one directed path whose
consecutive vertices are joined by graph edges. Relative to it, each edge is
a path edge (consecutive in one path), a path-transitive edge (same path,
non-consecutive), or a cross edge (different paths).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import _kernels
from .dagcore import Dag, TopoOrder
from .errors import NonEdgeStep, UnknownVertex, VertexMissing, VertexRepeated

__all__ = [
    "PathDecomposition",
    "EdgeClass",
    "EdgeClassification",
    "min_path_cover",
    "greedy_path_cover",
    "from_user_paths",
    "classify_edges",
]


@dataclass(frozen=True)
class PathDecomposition:
    """Ordered vertex-disjoint paths covering all vertices.

    ``path_of[v]`` is the (path index, position) of each vertex under the
    current left-to-right path order.
    """

    paths: tuple[tuple[int, ...], ...]
    path_of: tuple[tuple[int, int], ...]

    @property
    def k(self) -> int:
        return len(self.paths)

    def reordered(self, permutation: tuple[int, ...]) -> "PathDecomposition":
        """The same decomposition with paths permuted into a new drawing order."""
        paths = tuple(self.paths[i] for i in permutation)
        return _index_paths(paths, len(self.path_of))


class EdgeClass(enum.Enum):
    PATH = "path"
    CROSS = "cross"
    TRANSITIVE = "transitive"


@dataclass(frozen=True)
class EdgeClassification:
    """Per-edge tags aligned with ``Dag.edges``; the three classes partition E."""

    tags: tuple[EdgeClass, ...]

    def count(self, cls: EdgeClass) -> int:
        return sum(1 for t in self.tags if t is cls)


def _index_paths(paths: tuple[tuple[int, ...], ...], n: int) -> PathDecomposition:
    path_of: list[tuple[int, int] | None] = [None] * n
    for pi, path in enumerate(paths):
        for pos, v in enumerate(path):
            path_of[v] = (pi, pos)
    assert all(entry is not None for entry in path_of)
    return PathDecomposition(paths, tuple(path_of))  # type: ignore[arg-type]


def _ordered(paths: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    # initial drawing order: longest first, ties by smallest first vertex
    return tuple(tuple(p) for p in sorted(paths, key=lambda p: (-len(p), p[0])))


def min_path_cover(g: Dag) -> PathDecomposition:
    """Minimum-cardinality path cover via maximum bipartite matching.

    Each DAG edge (u, v) becomes a left-u/right-v bipartite edge; matched
    edges chain into paths, so k = n - |matching| and no smaller cover exists.
    """
    n = g.vertex_count
    if n == 0:
        return PathDecomposition((), ())
    indptr = [0] * (n + 1)
    targets: list[int] = []
    for u in range(n):
        targets.extend(g.out_adjacency[u])  # sorted ascending already
        indptr[u + 1] = len(targets)
    match_l, match_r = _kernels.hopcroft_karp(n, n, indptr, targets)
    paths = []
    for v in range(n):
        if match_r[v] != -1:
            continue  # not a path start
        path = [v]
        while match_l[path[-1]] != -1:
            path.append(match_l[path[-1]])
        paths.append(path)
    return _index_paths(_ordered(paths), n)


def greedy_path_cover(g: Dag, topo: TopoOrder) -> PathDecomposition:
    """Fast non-optimal cover: repeatedly strip a longest remaining path.

    Levels are recomputed over the unassigned-vertex subgraph each round, so
    the worst case is O(k(n+m)); intended for very large inputs where the
    matching-based cover is too slow.
    """
    n = g.vertex_count
    order = topo.order
    unassigned = [True] * n
    levels = [0] * n
    paths: list[list[int]] = []
    remaining = n
    while remaining:
        best_v = -1
        best_level = -1
        for v in order:
            if not unassigned[v]:
                continue
            lev = 0
            for w in g.in_adjacency[v]:
                if unassigned[w] and levels[w] + 1 > lev:
                    lev = levels[w] + 1
            levels[v] = lev
            if lev > best_level:  # ties keep the earlier (smaller-rank) vertex
                best_level = lev
                best_v = v
        path = [best_v]
        while levels[path[-1]] > 0:
            v = path[-1]
            path.append(min(w for w in g.in_adjacency[v] if unassigned[w] and levels[w] == levels[v] - 1))
        path.reverse()
        for v in path:
            unassigned[v] = False
        remaining -= len(path)
        paths.append(path)
    return _index_paths(_ordered(paths), n)


def from_user_paths(g: Dag, token_paths: list[list[str]]) -> PathDecomposition:
    """Validate externally supplied paths (kept in the given order)."""
    ids = {label: v for v, label in enumerate(g.labels)}
    paths: list[list[int]] = []
    seen: set[int] = set()
    for token_path in token_paths:
        path = []
        for token in token_path:
            if token not in ids:
                raise UnknownVertex(token)
            v = ids[token]
            if v in seen:
                raise VertexRepeated(token)
            seen.add(v)
            path.append(v)
        paths.append(path)
    for path in paths:
        for u, w in zip(path, path[1:]):
            if w not in g.out_adjacency[u]:
                raise NonEdgeStep(g.labels[u], g.labels[w])
    if len(seen) != g.vertex_count:
        missing = [g.labels[v] for v in range(g.vertex_count) if v not in seen]
        raise VertexMissing(missing)
    return _index_paths(tuple(tuple(p) for p in paths), g.vertex_count)


def classify_edges(g: Dag, d: PathDecomposition) -> EdgeClassification:
    """Tag every edge as path / cross / path-transitive for the given cover."""
    tags = []
    for u, v in g.edges:
        pu, iu = d.path_of[u]
        pv, iv = d.path_of[v]
        if pu != pv:
            tags.append(EdgeClass.CROSS)
        elif iv == iu + 1:
            tags.append(EdgeClass.PATH)
        else:
            tags.append(EdgeClass.TRANSITIVE)
    return EdgeClassification(tuple(tags))
