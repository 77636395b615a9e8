"""Bundling of same-path transitive edges into vertical interval columns.

Each bundle joins all incoming (or outgoing) transitive edges of one vertex
and is drawn as a single vertical segment beside the path, spanning the rows
of the bundled endpoints, with a horizontal connector at each endpoint row.
Greedy interval placement gives the minimum number of extra columns per path.
"""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass, replace
from typing import Sequence

from .dagcore import Dag
from .decompose import EdgeClass, EdgeClassification, PathDecomposition
from .layout import GridLayout

__all__ = [
    "Direction",
    "Interval",
    "ColumnAssignment",
    "extract_intervals",
    "place_intervals",
    "assign_columns",
    "splice_columns",
    "reorder_interval_columns",
]


class Direction(enum.Enum):
    INCOMING = "incoming"
    OUTGOING = "outgoing"


@dataclass(frozen=True)
class Interval:
    """One bundle of transitive edges, drawn as a vertical segment.

    ``start``/``finish`` are the lowest and highest endpoint rows (start <
    finish); ``connector_rows`` lists every distinct endpoint row including
    the anchor's.
    """

    path_index: int
    anchor: int
    direction: Direction
    members: tuple[int, ...]  # edge indices into Dag.edges
    start: int
    finish: int
    connector_rows: tuple[int, ...]


@dataclass(frozen=True)
class ColumnAssignment:
    """Per-path interval columns, in creation order (column 0 = innermost).

    Each column holds indices into the interval list it was built from;
    intervals in one column are pairwise disjoint as closed row ranges.
    """

    columns: tuple[tuple[tuple[int, ...], ...], ...]


def extract_intervals(
    g: Dag,
    d: PathDecomposition,
    cls: EdgeClassification,
    layout: GridLayout,
) -> tuple[Interval, ...]:
    """Bundle transitive edges by repeatedly taking the highest-degree vertex.

    Degrees count remaining transitive edges only. The vertex with the
    largest of indegree/outdegree is selected each round (ties: outgoing
    bundles beat incoming, then smaller vertex id) and all its remaining
    incoming resp. outgoing transitive edges become one interval. A lazy
    max-heap keeps the whole loop near-linear.
    """
    t_out: dict[int, list[int]] = {}
    t_in: dict[int, list[int]] = {}
    for e, ((u, v), tag) in enumerate(zip(g.edges, cls.tags)):
        if tag is EdgeClass.TRANSITIVE:
            t_out.setdefault(u, []).append(e)
            t_in.setdefault(v, []).append(e)
    outdeg = {v: len(es) for v, es in t_out.items()}
    indeg = {v: len(es) for v, es in t_in.items()}

    def key(v: int) -> tuple[int, int, int]:
        o = outdeg.get(v, 0)
        i = indeg.get(v, 0)
        score = max(o, i)
        return (-score, 0 if o == score else 1, v)

    heap = [key(v) for v in set(t_out) | set(t_in)]
    heapq.heapify(heap)
    alive = [tag is EdgeClass.TRANSITIVE for tag in cls.tags]
    intervals: list[Interval] = []
    while heap:
        neg_score, pref, v = heapq.heappop(heap)
        if (neg_score, pref, v) != key(v):
            continue  # stale entry
        if neg_score == 0:
            break
        direction = Direction.OUTGOING if pref == 0 else Direction.INCOMING
        pool = t_out[v] if direction is Direction.OUTGOING else t_in[v]
        members = tuple(e for e in pool if alive[e])
        touched = set()
        for e in members:
            alive[e] = False
            a, b = g.edges[e]
            outdeg[a] -= 1
            indeg[b] -= 1
            touched.add(a)
            touched.add(b)
        for w in sorted(touched):
            heapq.heappush(heap, key(w))
        rows = sorted({layout.y[v]} | {layout.y[a] for e in members for a in g.edges[e]})
        intervals.append(
            Interval(
                path_index=d.path_of[v][0],
                anchor=v,
                direction=direction,
                members=members,
                start=rows[0],
                finish=rows[-1],
                connector_rows=tuple(rows),
            )
        )
    return tuple(intervals)


def place_intervals(
    intervals: Sequence[Interval],
    ids: Sequence[int] | None = None,
) -> tuple[tuple[int, ...], ...]:
    """Greedy first-fit placement of one path's intervals into columns.

    Intervals are processed by ascending start (ties: finish, then anchor)
    and each goes into the lowest-index column whose last interval ends
    strictly below it; a new column opens when none fits. Touching endpoints
    conflict. The column count equals the maximum pairwise-overlap depth, the
    minimum possible. Runs in O(b log b).
    """
    if ids is None:
        ids = range(len(intervals))
    order = sorted(zip(intervals, ids), key=lambda t: (t[0].start, t[0].finish, t[0].anchor))
    columns: list[list[int]] = []
    busy: list[tuple[int, int]] = []  # (finish of last interval, column)
    free: list[int] = []  # column indices available at the current start
    for interval, ident in order:
        while busy and busy[0][0] < interval.start:
            heapq.heappush(free, heapq.heappop(busy)[1])
        if free:
            col = heapq.heappop(free)
        else:
            col = len(columns)
            columns.append([])
        columns[col].append(ident)
        heapq.heappush(busy, (interval.finish, col))
    return tuple(tuple(c) for c in columns)


def assign_columns(intervals: Sequence[Interval], k: int) -> ColumnAssignment:
    """Group intervals by path and place each path independently."""
    per_path: list[list[int]] = [[] for _ in range(k)]
    for idx, interval in enumerate(intervals):
        per_path[interval.path_index].append(idx)
    return ColumnAssignment(
        tuple(
            place_intervals([intervals[i] for i in ids], ids)
            for ids in per_path
        )
    )


def splice_columns(
    layout: GridLayout,
    intervals: tuple[Interval, ...],
    assignment: ColumnAssignment,
) -> GridLayout:
    """Insert interval columns and recompute every x coordinate.

    Left to right, each path contributes its interval columns (innermost
    next to the spine), its spine, and the bend column shared with the next
    path; the rightmost path's interval columns go to its right instead.
    y values and vertex alignment are untouched; routed polylines are
    remapped onto the new columns.
    """
    if layout.interval_column_x:
        raise ValueError("layout already has spliced interval columns")
    k = layout.k
    new_spine = [0] * k
    new_bend = [0] * max(k - 1, 0)
    col_x: list[list[int]] = [[] for _ in range(k)]
    cursor = 0
    for p in range(k):
        ncols = len(assignment.columns[p])
        col_x[p] = [0] * ncols
        if p < k - 1:
            for c in reversed(range(ncols)):  # outermost first, col 0 beside spine
                col_x[p][c] = cursor
                cursor += 1
            new_spine[p] = cursor
            cursor += 1
            new_bend[p] = cursor
            cursor += 1
        else:
            new_spine[p] = cursor
            cursor += 1
            for c in range(ncols):
                col_x[p][c] = cursor
                cursor += 1

    remap = {layout.spine_x[p]: new_spine[p] for p in range(k)}
    remap.update({layout.bend_x[i]: new_bend[i] for i in range(k - 1)})
    routes = tuple(
        tuple((remap[px], py) for px, py in r) if r is not None else None
        for r in layout.routes
    )
    x = tuple(remap[px] for px in layout.x)
    return replace(
        layout,
        x=x,
        spine_x=tuple(new_spine),
        bend_x=tuple(new_bend),
        routes=routes,
        intervals=intervals,
        interval_columns=assignment.columns,
        interval_column_x=tuple(tuple(cx) for cx in col_x),
    )


def _block_crossings(
    inner: Sequence[Interval],
    outer: Sequence[Interval],
) -> int:
    """Connectors of the outer column crossing vertical segments of the inner one."""
    count = 0
    for j in outer:
        for r in j.connector_rows:
            for i in inner:
                if i.start <= r <= i.finish:
                    count += 1
    return count


def reorder_interval_columns(layout: GridLayout) -> GridLayout:
    """Swap adjacent interval columns while that strictly reduces crossings.

    The objective is local to each path's block: crossings between interval
    segments and the connectors of farther-out columns. Column contents never
    change, only their left-to-right order within the block.
    """
    if not layout.interval_column_x:
        return layout
    new_col_x: list[tuple[int, ...]] = []
    for p in range(layout.k):
        cols = layout.interval_columns[p]
        xs = layout.interval_column_x[p]
        if len(cols) < 2:
            new_col_x.append(xs)
            continue
        spine = layout.spine_x[p]
        # physical order, innermost first
        phys = sorted(range(len(cols)), key=lambda c: abs(xs[c] - spine))
        content = [[layout.intervals[i] for i in cols[c]] for c in range(len(cols))]
        cost: dict[tuple[int, int], int] = {}

        def pair_cost(inner: int, outer: int) -> int:
            key = (inner, outer)
            if key not in cost:
                cost[key] = _block_crossings(content[inner], content[outer])
            return cost[key]

        improved = True
        while improved:
            improved = False
            for t in range(len(phys) - 1):
                a, b = phys[t], phys[t + 1]
                if pair_cost(b, a) < pair_cost(a, b):
                    phys[t], phys[t + 1] = b, a
                    improved = True
        ordered_x = sorted(xs, key=lambda v: abs(v - spine))
        slot = [0] * len(cols)
        for dist, c in enumerate(phys):
            slot[c] = ordered_x[dist]
        new_col_x.append(tuple(slot))
    return replace(layout, interval_column_x=tuple(new_col_x))
