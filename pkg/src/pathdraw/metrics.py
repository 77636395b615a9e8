"""Drawing metrics: crossings by category, bends, width, height, area, ink.

Width and height are grid-normalized: the number of distinct x (resp. y)
coordinates used by vertices, bend points, and interval junctions. Crossings
count pairs of drawn segments from distinct objects that share a point away
from any vertex grid position (edges meeting at a shared vertex do not
cross); collinear overlaps count once per pair. An interval's vertical
segment is drawn once, so it participates once regardless of bundle size.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels
from .decompose import EdgeClass
from .layout import GridLayout

__all__ = [
    "CrossingCounts",
    "MetricsReport",
    "CSV_HEADER",
    "drawn_segments",
    "count_crossings",
    "count_bends",
    "summarize",
    "layout_warnings",
]

CSV_HEADER = "graph,n,m,k,crossings,xx,xp,xi,ii,bends,width,height,area,total_edge_length"

# segment kind codes used by the crossing kernel
KIND_CROSS = 0
KIND_PATH = 1
KIND_INTERVAL = 2


@dataclass(frozen=True)
class Segment:
    x1: int
    y1: int
    x2: int
    y2: int
    owner: int  # edge index, or edge_count + interval index
    kind: int


@dataclass(frozen=True)
class CrossingCounts:
    cross_cross: int
    cross_path: int
    cross_interval: int
    interval_interval: int

    @property
    def total(self) -> int:
        return self.cross_cross + self.cross_path + self.cross_interval + self.interval_interval


@dataclass(frozen=True)
class MetricsReport:
    crossings_total: int
    crossings_by_category: CrossingCounts
    bends: int
    width: int
    height: int
    area: int
    total_edge_length: float

    def csv_row(self, graph: str, n: int, m: int, k: int) -> str:
        c = self.crossings_by_category
        return (
            f"{graph},{n},{m},{k},{self.crossings_total},"
            f"{c.cross_cross},{c.cross_path},{c.cross_interval},{c.interval_interval},"
            f"{self.bends},{self.width},{self.height},{self.area},"
            f"{self.total_edge_length:.4f}"
        )


def _interval_column_positions(layout: GridLayout) -> dict[int, int]:
    """Interval index -> x of the column that holds it."""
    pos: dict[int, int] = {}
    for p, cols in enumerate(layout.interval_columns):
        for ci, col in enumerate(cols):
            for ivid in col:
                pos[ivid] = layout.interval_column_x[p][ci]
    return pos


def drawn_segments(layout: GridLayout, transitive_hidden: bool = False) -> list[Segment]:
    """All rendered segments: routed polylines plus interval geometry."""
    segments: list[Segment] = []
    for e, route in enumerate(layout.routes):
        if route is None:
            continue
        kind = KIND_CROSS if layout.route_kind[e] is EdgeClass.CROSS else KIND_PATH
        for (x1, y1), (x2, y2) in zip(route, route[1:]):
            segments.append(Segment(x1, y1, x2, y2, e, kind))
    if not transitive_hidden and layout.intervals:
        col_x = _interval_column_positions(layout)
        base = len(layout.routes)
        for idx, interval in enumerate(layout.intervals):
            cx = col_x[idx]
            spine = layout.spine_x[interval.path_index]
            segments.append(Segment(cx, interval.start, cx, interval.finish, base + idx, KIND_INTERVAL))
            for r in interval.connector_rows:
                segments.append(Segment(cx, r, spine, r, base + idx, KIND_INTERVAL))
    return segments


def count_crossings(layout: GridLayout, transitive_hidden: bool = False) -> CrossingCounts:
    """Category crossing counts over all drawn segments."""
    segs = drawn_segments(layout, transitive_hidden)
    if not segs:
        return CrossingCounts(0, 0, 0, 0)
    vertex_points = set(zip(layout.x, layout.y))
    xx, xp, xi, pp, pi, ii = _kernels.count_segment_crossings(
        [s.x1 for s in segs],
        [s.y1 for s in segs],
        [s.x2 for s in segs],
        [s.y2 for s in segs],
        [s.owner for s in segs],
        [s.kind for s in segs],
        vertex_points,
    )
    if pp or pi:
        raise ValueError("path edges can never cross; the layout violates spine geometry")
    return CrossingCounts(xx, xp, xi, ii)


def count_bends(layout: GridLayout, transitive_hidden: bool = False) -> int:
    """Interior polyline points plus one junction per interval connector row."""
    bends = sum(len(r) - 2 for r in layout.routes if r is not None)
    if not transitive_hidden:
        bends += sum(len(iv.connector_rows) for iv in layout.intervals)
    return bends


def summarize(
    layout: GridLayout,
    transitive_hidden: bool = False,
    with_crossings: bool = True,
) -> MetricsReport:
    """Full metric suite for one drawing.

    ``with_crossings=False`` skips the quadratic crossing count (useful for
    very large layouts) and reports zero in those columns.
    """
    xs = set(layout.x)
    ys = set(layout.y)
    length = 0.0
    for e, route in enumerate(layout.routes):
        if route is None:
            continue
        for (x1, y1), (x2, y2) in zip(route, route[1:]):
            length += math.hypot(x2 - x1, y2 - y1)
        for x, y in route[1:-1]:
            xs.add(x)
            ys.add(y)
    if not transitive_hidden and layout.intervals:
        col_x = _interval_column_positions(layout)
        for idx, interval in enumerate(layout.intervals):
            cx = col_x[idx]
            spine = layout.spine_x[interval.path_index]
            xs.add(cx)
            length += interval.finish - interval.start
            for r in interval.connector_rows:
                ys.add(r)
                length += abs(spine - cx)
    if with_crossings:
        crossings = count_crossings(layout, transitive_hidden)
    else:
        crossings = CrossingCounts(0, 0, 0, 0)
    width = len(xs)
    height = len(ys)
    return MetricsReport(
        crossings_total=crossings.total,
        crossings_by_category=crossings,
        bends=count_bends(layout, transitive_hidden),
        width=width,
        height=height,
        area=width * height,
        total_edge_length=length,
    )


def layout_warnings(layout: GridLayout) -> list[str]:
    """Report segments whose interior passes through a vertex grid point.

    These are drawing defects, not crossings; the framework records them
    without repairing the geometry. Quadratic, intended for modest layouts.
    """
    warnings: list[str] = []
    points = list(zip(layout.x, layout.y))
    for s in drawn_segments(layout):
        for v, (px, py) in enumerate(points):
            if (px, py) == (s.x1, s.y1) or (px, py) == (s.x2, s.y2):
                continue  # endpoint contact is the normal attachment
            if not (min(s.x1, s.x2) <= px <= max(s.x1, s.x2) and min(s.y1, s.y2) <= py <= max(s.y1, s.y2)):
                continue
            if (s.x2 - s.x1) * (py - s.y1) == (s.y2 - s.y1) * (px - s.x1):
                warnings.append(f"segment of object {s.owner} passes through vertex {v} at ({px}, {py})")
    return warnings
