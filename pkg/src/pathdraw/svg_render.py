"""SVG 1.1 emission for grid layouts.

Grid units map to pixels (default 40 px per unit) with the y-axis flipped so
edges point upward. Edge classes get distinct stroke styles and live in
separate groups, so the transitive layer can be hidden without moving any
vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dagcore import Dag
from .decompose import EdgeClass
from .layout import GridLayout

__all__ = ["RenderOptions", "render_svg"]


@dataclass(frozen=True)
class RenderOptions:
    scale: int = 40
    margin: int = 30
    vertex_radius: int = 9
    show_labels: bool = True
    hide_transitive: bool = False
    path_color: str = "#1a1a1a"
    cross_color: str = "#c23b22"
    transitive_color: str = "#2b6cb0"  # the bundled layer is set apart by color


def render_svg(g: Dag, layout: GridLayout, options: RenderOptions = RenderOptions()) -> str:
    """Render the layout as standalone SVG text (deterministic bytes)."""
    s = options.scale
    mg = options.margin
    max_y = max(layout.y, default=0)
    max_x = max(
        [*layout.x, *layout.spine_x, *layout.bend_x]
        + [x for cols in layout.interval_column_x for x in cols],
        default=0,
    )

    def px(x: int) -> int:
        return mg + x * s

    def py(y: int) -> int:
        return mg + (max_y - y) * s

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{px(max_x) + mg}" height="{py(0) + mg}">\n'
    ]

    if not options.hide_transitive and layout.intervals:
        parts.append(f'<g class="intervals" stroke="{options.transitive_color}" stroke-width="2" fill="none">\n')
        col_x: dict[int, int] = {}
        for p, cols in enumerate(layout.interval_columns):
            for ci, col in enumerate(cols):
                for ivid in col:
                    col_x[ivid] = layout.interval_column_x[p][ci]
        for idx, iv in enumerate(layout.intervals):
            cx = col_x[idx]
            spine = layout.spine_x[iv.path_index]
            parts.append(f'<line x1="{px(cx)}" y1="{py(iv.start)}" x2="{px(cx)}" y2="{py(iv.finish)}"/>\n')
            for r in iv.connector_rows:
                parts.append(f'<line x1="{px(cx)}" y1="{py(r)}" x2="{px(spine)}" y2="{py(r)}"/>\n')
        parts.append("</g>\n")

    for cls, css, color in (
        (EdgeClass.CROSS, "cross-edges", options.cross_color),
        (EdgeClass.PATH, "path-edges", options.path_color),
    ):
        parts.append(f'<g class="{css}" stroke="{color}" stroke-width="2" fill="none">\n')
        for e, route in enumerate(layout.routes):
            if route is None or layout.route_kind[e] is not cls:
                continue
            points = " ".join(f"{px(x)},{py(y)}" for x, y in route)
            parts.append(f'<polyline points="{points}"/>\n')
        parts.append("</g>\n")

    parts.append('<g class="vertices">\n')
    for v in range(g.vertex_count):
        cx, cy = px(layout.x[v]), py(layout.y[v])
        parts.append(
            f'<circle cx="{cx}" cy="{cy}" r="{options.vertex_radius}" '
            f'fill="#ffffff" stroke="#1a1a1a" stroke-width="1.5"/>\n'
        )
        if options.show_labels:
            parts.append(
                f'<text x="{cx}" y="{cy + 4}" font-size="10" text-anchor="middle" '
                f'font-family="sans-serif">{_escape(g.labels[v])}</text>\n'
            )
    parts.append("</g>\n</svg>\n")
    return "".join(parts)


def _escape(token: str) -> str:
    return token.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
