"""Lossless structured-text serialization of a finished layout.

The document is JSON with a fixed key order, so identical inputs always
produce identical bytes and ``parse_document(serialize_document(d)) == d``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .dagcore import Dag
from .decompose import EdgeClassification, PathDecomposition
from .layout import GridLayout
from .metrics import MetricsReport

__all__ = ["LayoutDocument", "build_document", "serialize_document", "parse_document"]

Polyline = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class LayoutDocument:
    """Serialized form of one drawing: geometry, classification, and metrics."""

    vertices: tuple[tuple[str, int, int], ...]  # (token, x, y)
    edges: tuple[tuple[str, str, str, Polyline | None], ...]  # (src, dst, class, polyline)
    paths: tuple[tuple[str, ...], ...]  # final left-to-right order
    intervals: tuple[tuple[int, str, str, tuple[int, ...], int, int, int, tuple[int, ...]], ...]
    # (path index, anchor token, direction, member edge indices, column x, start, finish, connector rows)
    metrics: tuple[tuple[str, float], ...]


def build_document(
    g: Dag,
    d: PathDecomposition,
    cls: EdgeClassification,
    layout: GridLayout,
    report: MetricsReport,
) -> LayoutDocument:
    vertices = tuple((g.labels[v], layout.x[v], layout.y[v]) for v in range(g.vertex_count))
    edges = tuple(
        (g.labels[u], g.labels[v], cls.tags[e].value, layout.routes[e])
        for e, (u, v) in enumerate(g.edges)
    )
    paths = tuple(tuple(g.labels[v] for v in p) for p in d.paths)
    col_x: dict[int, int] = {}
    for p, cols in enumerate(layout.interval_columns):
        for ci, col in enumerate(cols):
            for ivid in col:
                col_x[ivid] = layout.interval_column_x[p][ci]
    intervals = tuple(
        (
            iv.path_index,
            g.labels[iv.anchor],
            iv.direction.value,
            iv.members,
            col_x[idx],
            iv.start,
            iv.finish,
            iv.connector_rows,
        )
        for idx, iv in enumerate(layout.intervals)
    )
    c = report.crossings_by_category
    metrics = (
        ("crossings", report.crossings_total),
        ("crossings_cross_cross", c.cross_cross),
        ("crossings_cross_path", c.cross_path),
        ("crossings_cross_interval", c.cross_interval),
        ("crossings_interval_interval", c.interval_interval),
        ("bends", report.bends),
        ("width", report.width),
        ("height", report.height),
        ("area", report.area),
        ("total_edge_length", report.total_edge_length),
    )
    return LayoutDocument(vertices, edges, paths, intervals, metrics)


def serialize_document(doc: LayoutDocument) -> str:
    payload = {
        "vertices": [[t, x, y] for t, x, y in doc.vertices],
        "edges": [
            [s, t, c, None if poly is None else [[x, y] for x, y in poly]]
            for s, t, c, poly in doc.edges
        ],
        "paths": [list(p) for p in doc.paths],
        "intervals": [
            [p, anchor, direction, list(members), cx, s, f, list(rows)]
            for p, anchor, direction, members, cx, s, f, rows in doc.intervals
        ],
        "metrics": {name: value for name, value in doc.metrics},
    }
    return json.dumps(payload, indent=2) + "\n"


def parse_document(text: str) -> LayoutDocument:
    payload = json.loads(text)
    return LayoutDocument(
        vertices=tuple((t, x, y) for t, x, y in payload["vertices"]),
        edges=tuple(
            (s, t, c, None if poly is None else tuple((x, y) for x, y in poly))
            for s, t, c, poly in payload["edges"]
        ),
        paths=tuple(tuple(p) for p in payload["paths"]),
        intervals=tuple(
            (p, anchor, direction, tuple(members), cx, s, f, tuple(rows))
            for p, anchor, direction, members, cx, s, f, rows in payload["intervals"]
        ),
        metrics=tuple((name, value) for name, value in payload["metrics"].items()),
    )
