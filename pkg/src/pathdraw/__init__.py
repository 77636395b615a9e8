"""Path-based hierarchical drawing of DAGs.

Vertices are partitioned into vertex-disjoint directed paths drawn as
vertical spines; y-coordinates are compacted to longest-path levels; edges
inside a path that skip positions are bundled into interval columns using
the minimum width per path; a greedy heuristic orders the spines. The
harness adds seeded graph generation, SVG/JSON emission, and a metric suite.
"""

from __future__ import annotations

from ._kernels import backend as kernel_backend
from .bundling import (
    ColumnAssignment,
    Direction,
    Interval,
    assign_columns,
    extract_intervals,
    place_intervals,
    reorder_interval_columns,
    splice_columns,
)
from .dagcore import Dag, TopoOrder, build_dag, longest_path_layering, topological_sort
from .decompose import (
    EdgeClass,
    EdgeClassification,
    PathDecomposition,
    classify_edges,
    from_user_paths,
    greedy_path_cover,
    min_path_cover,
)
from .document import LayoutDocument, build_document, parse_document, serialize_document
from .edgelist import format_edge_list, parse_edge_list, parse_path_file
from .errors import (
    CycleDetected,
    InfeasibleDegree,
    MalformedLine,
    NonEdgeStep,
    PathdrawError,
    SelfLoop,
    UnknownVertex,
    VertexMissing,
    VertexRepeated,
)
from .experiment import ExperimentConfig, ladder_suite, run_experiment
from .generator import GeneratorConfig, generate_dag
from .layout import GridLayout, base_layout, compact, route_cross_edges
from .metrics import (
    CSV_HEADER,
    CrossingCounts,
    MetricsReport,
    count_bends,
    count_crossings,
    drawn_segments,
    layout_warnings,
    summarize,
)
from .ordering import PathGraph, PathOrder, build_path_graph, greedy_order
from .pipeline import PipelineOptions, PipelineResult, run_pipeline
from .svg_render import RenderOptions, render_svg

__version__ = "0.1.0"
