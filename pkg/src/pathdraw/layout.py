"""Grid coordinate assignment: spine placement, vertical compaction, routing.

Paths are drawn as vertical spines with one reserved bend column between
neighbors (total column span 2k-1). Rows grow upward and every edge points
to a strictly larger y. Layouts are immutable; each stage returns a new one.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import TYPE_CHECKING

from . import _kernels
from .dagcore import Dag, TopoOrder
from .decompose import EdgeClass, EdgeClassification, PathDecomposition

if TYPE_CHECKING:
    from .bundling import Interval

__all__ = ["GridLayout", "base_layout", "compact", "route_cross_edges"]

Point = tuple[int, int]
Route = tuple[Point, ...]


@dataclass(frozen=True)
class GridLayout:
    """Integer grid positions plus routed geometry.

    ``routes[e]`` is the polyline for edge e (None until routed; transitive
    edges stay None and are drawn via ``intervals``). Interval columns are
    kept in creation order per path; ``interval_column_x`` is filled in by
    column splicing.
    """

    x: tuple[int, ...]
    y: tuple[int, ...]
    spine_x: tuple[int, ...]
    bend_x: tuple[int, ...]
    routes: tuple[Route | None, ...]
    route_kind: tuple[EdgeClass | None, ...]
    intervals: tuple["Interval", ...] = ()
    interval_columns: tuple[tuple[tuple[int, ...], ...], ...] = ()
    interval_column_x: tuple[tuple[int, ...], ...] = ()

    @property
    def vertex_count(self) -> int:
        return len(self.x)

    @property
    def k(self) -> int:
        return len(self.spine_x)

    @property
    def height_rows(self) -> int:
        """Max y (the row span); -1 for an empty layout."""
        return max(self.y, default=-1)


def base_layout(g: Dag, d: PathDecomposition, topo: TopoOrder) -> GridLayout:
    """Place path i on spine column 2i with a bend column at 2i-1; y = topo rank."""
    k = d.k
    x = [0] * g.vertex_count
    for pi, path in enumerate(d.paths):
        for v in path:
            x[v] = 2 * pi
    return GridLayout(
        x=tuple(x),
        y=tuple(topo.rank),
        spine_x=tuple(2 * i for i in range(k)),
        bend_x=tuple(2 * i + 1 for i in range(k - 1)),
        routes=(None,) * g.edge_count,
        route_kind=(None,) * g.edge_count,
    )


def compact(g: Dag, layout: GridLayout) -> GridLayout:
    """Drop every vertex to one row above its highest predecessor.

    Visits vertices in ascending current y (ties by id); sources go to row 0,
    everything else to 1 + max over all incoming edges, so the final row span
    equals the longest path length. Idempotent, and never raises a vertex.
    """
    if any(r is not None for r in layout.routes):
        raise ValueError("compact() must run before edges are routed")
    n = g.vertex_count
    order = sorted(range(n), key=lambda v: (layout.y[v], v))
    indptr = [0] * (n + 1)
    sources: list[int] = []
    for v in range(n):
        sources.extend(g.in_adjacency[v])
        indptr[v + 1] = len(sources)
    levels = _kernels.compact_levels(order, indptr, sources)
    return replace(layout, y=tuple(levels))


def route_cross_edges(
    g: Dag,
    d: PathDecomposition,
    cls: EdgeClassification,
    layout: GridLayout,
) -> GridLayout:
    """Assign polylines: spines for path edges, at most one bend per cross edge.

    A cross edge spanning one row is a straight segment. Otherwise it runs
    from the source to the bend column beside the target's spine (on the side
    facing the source) at one row below the target, then up to the target.
    Transitive edges are left to the bundling stage.
    """
    routes: list[Route | None] = []
    x, y = layout.x, layout.y
    for (u, v), tag in zip(g.edges, cls.tags):
        if tag is EdgeClass.TRANSITIVE:
            routes.append(None)
            continue
        if tag is EdgeClass.PATH or y[v] == y[u] + 1:
            routes.append(((x[u], y[u]), (x[v], y[v])))
            continue
        pv = d.path_of[v][0]
        bend = layout.bend_x[pv - 1] if x[u] < x[v] else layout.bend_x[pv]
        routes.append(((x[u], y[u]), (bend, y[v] - 1), (x[v], y[v])))
    return replace(layout, routes=tuple(routes), route_kind=cls.tags)
