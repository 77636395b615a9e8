"""One-graph pipeline: decompose, order, place, compact, route, bundle, measure."""

from __future__ import annotations

from dataclasses import dataclass

from .bundling import assign_columns, extract_intervals, reorder_interval_columns, splice_columns
from .dagcore import Dag, topological_sort
from .decompose import (
    EdgeClassification,
    PathDecomposition,
    classify_edges,
    from_user_paths,
    greedy_path_cover,
    min_path_cover,
)
from .layout import GridLayout, base_layout, compact, route_cross_edges
from .metrics import MetricsReport, summarize
from .ordering import build_path_graph, greedy_order

__all__ = ["PipelineOptions", "PipelineResult", "run_pipeline"]

DECOMPOSE_MODES = ("min", "greedy", "file")
ORDER_MODES = ("greedy", "identity")


@dataclass(frozen=True)
class PipelineOptions:
    decompose: str = "min"  # min | greedy | file (file needs user_paths)
    order: str = "greedy"  # greedy | identity
    compact: bool = True
    hide_transitive: bool = False  # metrics/render toggle; geometry is unaffected
    with_crossings: bool = True
    user_paths: tuple[tuple[str, ...], ...] | None = None

    def __post_init__(self):
        if self.decompose not in DECOMPOSE_MODES:
            raise ValueError(f"decompose must be one of {DECOMPOSE_MODES}")
        if self.order not in ORDER_MODES:
            raise ValueError(f"order must be one of {ORDER_MODES}")
        if self.decompose == "file" and self.user_paths is None:
            raise ValueError("decompose='file' requires user_paths")


@dataclass(frozen=True)
class PipelineResult:
    dag: Dag
    decomposition: PathDecomposition  # in final drawing order
    classification: EdgeClassification
    layout: GridLayout
    report: MetricsReport


def run_pipeline(g: Dag, options: PipelineOptions = PipelineOptions()) -> PipelineResult:
    topo = topological_sort(g)
    if options.decompose == "min":
        d = min_path_cover(g)
    elif options.decompose == "greedy":
        d = greedy_path_cover(g, topo)
    else:
        d = from_user_paths(g, [list(p) for p in options.user_paths or ()])
    cls = classify_edges(g, d)
    if options.order == "greedy":
        pg = build_path_graph(g, d, cls)
        d = d.reordered(greedy_order(pg, d.k).permutation)
        cls = classify_edges(g, d)
    layout = base_layout(g, d, topo)
    if options.compact:
        layout = compact(g, layout)
    layout = route_cross_edges(g, d, cls, layout)
    intervals = extract_intervals(g, d, cls, layout)
    layout = splice_columns(layout, intervals, assign_columns(intervals, d.k))
    layout = reorder_interval_columns(layout)
    report = summarize(layout, options.hide_transitive, options.with_crossings)
    return PipelineResult(g, d, cls, layout, report)
