"""Command-line interface: ``gen``, ``layout``, and ``experiment`` subcommands."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .edgelist import format_edge_list, parse_edge_list, parse_path_file
from .errors import PathdrawError
from .experiment import ExperimentConfig, ladder_suite, run_experiment
from .generator import GeneratorConfig, generate_dag
from .metrics import CSV_HEADER, layout_warnings
from .pipeline import PipelineOptions, run_pipeline
from .svg_render import RenderOptions, render_svg
from .document import build_document, serialize_document


def _add_pipeline_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--decompose", choices=["min", "greedy", "file"], default="min",
                        help="path cover: matching-based minimum, fast greedy, or a user path file")
    parser.add_argument("--order", choices=["greedy", "identity"], default="greedy",
                        help="left-to-right path ordering heuristic")
    parser.add_argument("--compact", choices=["on", "off"], default="on",
                        help="vertical compaction to longest-path height")
    parser.add_argument("--transitive", choices=["show", "hide"], default="show",
                        help="draw or hide the bundled transitive-edge layer")


def _options_from(args: argparse.Namespace, user_paths) -> PipelineOptions:
    return PipelineOptions(
        decompose=args.decompose,
        order=args.order,
        compact=args.compact == "on",
        hide_transitive=args.transitive == "hide",
        user_paths=user_paths,
    )


def _cmd_gen(args: argparse.Namespace) -> int:
    g = generate_dag(GeneratorConfig(args.nodes, args.avg_degree, args.seed))
    text = format_edge_list(g)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_layout(args: argparse.Namespace) -> int:
    text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
    g = parse_edge_list(text)
    if g.duplicate_count:
        print(f"note: collapsed {g.duplicate_count} duplicate edge(s)", file=sys.stderr)
    user_paths = None
    if args.decompose == "file":
        if not args.paths:
            print("error: --decompose file requires --paths", file=sys.stderr)
            return 2
        user_paths = tuple(tuple(p) for p in parse_path_file(Path(args.paths).read_text()))
    result = run_pipeline(g, _options_from(args, user_paths))
    for warning in layout_warnings(result.layout):
        print(f"warning: {warning}", file=sys.stderr)
    name = "stdin" if args.input == "-" else Path(args.input).stem
    row = result.report.csv_row(name, g.vertex_count, g.edge_count, result.decomposition.k)
    if args.svg:
        options = RenderOptions(hide_transitive=args.transitive == "hide")
        Path(args.svg).write_text(render_svg(g, result.layout, options))
    if args.json:
        doc = build_document(g, result.decomposition, result.classification, result.layout, result.report)
        Path(args.json).write_text(serialize_document(doc))
    if args.metrics:
        Path(args.metrics).write_text(CSV_HEADER + "\n" + row + "\n")
    if not (args.svg or args.json or args.metrics):
        print(CSV_HEADER)
        print(row)
    return 0


def _cmd_experiment(args: argparse.Namespace) -> int:
    if args.suite:
        entries = json.loads(Path(args.suite).read_text())
        graphs: list[GeneratorConfig | str] = []
        for entry in entries:
            if "file" in entry:
                graphs.append(entry["file"])
            else:
                graphs.append(GeneratorConfig(entry["n"], entry["avg_degree"], entry["seed"]))
        suite = tuple(graphs)
    else:
        suite = ladder_suite()
    options = _options_from(args, None)
    cfg = ExperimentConfig(graphs=suite, variants=(("default", options),))
    outcome = run_experiment(cfg, args.outdir)
    print(f"wrote {len(outcome.rows)} row(s) to {Path(args.outdir) / 'metrics.csv'}")
    for gid, message in outcome.failures:
        print(f"failed: {gid}: {message}", file=sys.stderr)
    return 1 if outcome.failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathdraw",
        description="Hierarchical DAG drawing on vertical path spines, with "
                    "compaction, bundled transitive edges, and drawing metrics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a seeded random DAG edge list")
    gen.add_argument("--nodes", type=int, required=True)
    gen.add_argument("--avg-degree", type=float, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--output", help="write here instead of stdout")
    gen.set_defaults(func=_cmd_gen)

    lay = sub.add_parser("layout", help="lay out one edge-list graph")
    lay.add_argument("--input", required=True, help="edge-list file, or - for stdin")
    lay.add_argument("--paths", help="user path file for --decompose file")
    _add_pipeline_flags(lay)
    lay.add_argument("--svg", help="write an SVG drawing here")
    lay.add_argument("--json", help="write the layout document here")
    lay.add_argument("--metrics", help="write a one-row metrics CSV here")
    lay.set_defaults(func=_cmd_layout)

    exp = sub.add_parser("experiment", help="run a graph suite and collect metrics")
    exp.add_argument("--outdir", required=True)
    exp.add_argument("--suite", help="JSON suite file; default is the built-in 20-graph ladder")
    _add_pipeline_flags(exp)
    exp.set_defaults(func=_cmd_experiment)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PathdrawError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
