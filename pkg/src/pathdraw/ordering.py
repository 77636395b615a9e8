"""Greedy path-ordering heuristic over the weighted path graph.

Paths become nodes; each pair of paths joined by cross edges gets an
undirected edge weighted by the total cross-edge count between them. Edges
are consumed in descending weight, gluing paths into linear chains so that
heavily connected paths end up adjacent in the drawing order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .dagcore import Dag
from .decompose import EdgeClass, EdgeClassification, PathDecomposition

__all__ = ["PathGraph", "PathOrder", "build_path_graph", "greedy_order"]


@dataclass(frozen=True)
class PathGraph:
    """Weighted pair graph on decomposition paths; zero-weight pairs omitted."""

    k: int
    weighted_edges: tuple[tuple[int, int, int], ...]  # (path_a, path_b, weight), a < b


@dataclass(frozen=True)
class PathOrder:
    """Left-to-right drawing order: a permutation of path indices."""

    permutation: tuple[int, ...]


def build_path_graph(g: Dag, d: PathDecomposition, cls: EdgeClassification) -> PathGraph:
    weights: dict[tuple[int, int], int] = {}
    for (u, v), tag in zip(g.edges, cls.tags):
        if tag is not EdgeClass.CROSS:
            continue
        a = d.path_of[u][0]
        b = d.path_of[v][0]
        pair = (a, b) if a < b else (b, a)
        weights[pair] = weights.get(pair, 0) + 1
    edges = tuple((a, b, w) for (a, b), w in sorted(weights.items()))
    return PathGraph(d.k, edges)


def _radix_by_weight(edges: tuple[tuple[int, int, int], ...], k: int) -> list[tuple[int, int, int]]:
    """Sort by (weight desc, a asc, b asc) in O(e + k + max_weight)."""
    if not edges:
        return []
    by_b: list[list[tuple[int, int, int]]] = [[] for _ in range(k)]
    for e in edges:
        by_b[e[1]].append(e)
    by_a: list[list[tuple[int, int, int]]] = [[] for _ in range(k)]
    for bucket in by_b:
        for e in bucket:
            by_a[e[0]].append(e)
    max_w = max(e[2] for e in edges)
    by_w: list[list[tuple[int, int, int]]] = [[] for _ in range(max_w + 1)]
    for bucket in by_a:
        for e in bucket:
            by_w[e[2]].append(e)
    out: list[tuple[int, int, int]] = []
    for w in range(max_w, 0, -1):
        out.extend(by_w[w])
    return out


def greedy_order(pg: PathGraph, k: int) -> PathOrder:
    """Kruskal-style chain growing; both-placed edges are discarded.

    An unplaced path joins at the chain end nearer its partner (ties to the
    right). Finished chains are concatenated by descending length (ties by
    smallest contained path index), then never-placed paths follow in their
    initial order.
    """
    chain_of = [-1] * k  # chain id per placed path
    coord = [0] * k  # position of a placed path on its chain's integer axis
    chains: dict[int, tuple[int, int]] = {}  # chain id -> (left coord, right coord)
    members: dict[int, deque[int]] = {}  # chain id -> paths, left to right
    next_chain = 0

    for a, b, _w in _radix_by_weight(pg.weighted_edges, k):
        placed_a = chain_of[a] != -1
        placed_b = chain_of[b] != -1
        if placed_a and placed_b:
            continue
        if not placed_a and not placed_b:
            cid = next_chain
            next_chain += 1
            chain_of[a] = chain_of[b] = cid
            coord[a], coord[b] = 0, 1
            chains[cid] = (0, 1)
            members[cid] = deque((a, b))
            continue
        anchor, newcomer = (a, b) if placed_a else (b, a)
        cid = chain_of[anchor]
        left, right = chains[cid]
        dist_left = coord[anchor] - left
        dist_right = right - coord[anchor]
        chain_of[newcomer] = cid
        if dist_right <= dist_left:
            coord[newcomer] = right + 1
            chains[cid] = (left, right + 1)
            members[cid].append(newcomer)
        else:
            coord[newcomer] = left - 1
            chains[cid] = (left - 1, right)
            members[cid].appendleft(newcomer)

    blocks = sorted(members.values(), key=lambda ms: (-len(ms), min(ms)))
    permutation = [p for block in blocks for p in block]
    permutation.extend(p for p in range(k) if chain_of[p] == -1)
    return PathOrder(tuple(permutation))
