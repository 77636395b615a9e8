"""Experiment driver: run the pipeline over a graph suite and emit artifacts.

Each graph/variant produces one CSV row plus an SVG drawing and a layout
document. Failures are collected per graph so the rest of the suite still
runs. Everything written is a pure function of the configuration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .document import build_document, serialize_document
from .edgelist import parse_edge_list
from .generator import GeneratorConfig, generate_dag
from .metrics import CSV_HEADER
from .pipeline import PipelineOptions, run_pipeline
from .svg_render import RenderOptions, render_svg

__all__ = ["ExperimentConfig", "ExperimentOutcome", "ladder_suite", "run_experiment"]


def ladder_suite() -> tuple[GeneratorConfig, ...]:
    """The default 20-graph suite: five sizes by four average degrees."""
    configs = []
    for n in (20, 50, 100, 200, 400):
        for degree in (1.25, 1.75, 3, 5):
            configs.append(GeneratorConfig(n, degree, seed=101 + len(configs)))
    return tuple(configs)


@dataclass(frozen=True)
class ExperimentConfig:
    """A suite of graphs (generator configs or edge-list files) and variants."""

    graphs: tuple[GeneratorConfig | str, ...]
    variants: tuple[tuple[str, PipelineOptions], ...] = (("default", PipelineOptions()),)
    emit_svg: bool = True
    emit_documents: bool = True


@dataclass
class ExperimentOutcome:
    csv_text: str
    rows: list[str] = field(default_factory=list)
    failures: list[tuple[str, str]] = field(default_factory=list)  # (graph id, message)


def _graph_id(entry: GeneratorConfig | str, index: int) -> str:
    if isinstance(entry, GeneratorConfig):
        degree = f"{entry.avg_degree:g}".replace(".", "p")
        return f"g{index:02d}_n{entry.n}_d{degree}"
    return Path(entry).stem


def run_experiment(cfg: ExperimentConfig, outdir: str | Path | None = None) -> ExperimentOutcome:
    """Run every graph through every variant; write CSV/SVG/JSON under outdir."""
    out = Path(outdir) if outdir is not None else None
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
    rows: list[str] = []
    failures: list[tuple[str, str]] = []
    multi = len(cfg.variants) > 1
    for index, entry in enumerate(cfg.graphs):
        gid = _graph_id(entry, index)
        try:
            if isinstance(entry, GeneratorConfig):
                g = generate_dag(entry)
            else:
                g = parse_edge_list(Path(entry).read_text())
        except Exception as exc:  # noqa: BLE001 - driver must keep going
            failures.append((gid, str(exc)))
            continue
        for name, options in cfg.variants:
            row_id = f"{gid}:{name}" if multi else gid
            try:
                result = run_pipeline(g, options)
            except Exception as exc:  # noqa: BLE001
                failures.append((row_id, str(exc)))
                continue
            rows.append(result.report.csv_row(row_id, g.vertex_count, g.edge_count, result.decomposition.k))
            if out is not None:
                stem = row_id.replace(":", "_")
                if cfg.emit_svg:
                    svg = render_svg(g, result.layout, RenderOptions(hide_transitive=options.hide_transitive))
                    (out / f"{stem}.svg").write_text(svg)
                if cfg.emit_documents:
                    doc = build_document(g, result.decomposition, result.classification, result.layout, result.report)
                    (out / f"{stem}.json").write_text(serialize_document(doc))
    csv_text = CSV_HEADER + "\n" + "".join(row + "\n" for row in rows)
    if out is not None:
        (out / "metrics.csv").write_text(csv_text)
    return ExperimentOutcome(csv_text=csv_text, rows=rows, failures=failures)
