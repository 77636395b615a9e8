"""Text formats: whitespace edge lists and comma-separated path files.

Both formats treat '#' as a comment to end of line and skip blank lines.
"""

from __future__ import annotations

from .dagcore import Dag, build_dag
from .errors import MalformedLine

__all__ = ["parse_edge_list", "format_edge_list", "parse_path_file"]


def parse_edge_list(text: str) -> Dag:
    """Parse "source target" lines into a Dag (ids by first appearance)."""
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise MalformedLine(lineno, raw)
        pairs.append((fields[0], fields[1]))
    return build_dag(pairs)


def format_edge_list(g: Dag) -> str:
    return "".join(f"{g.labels[u]} {g.labels[v]}\n" for u, v in g.edges)


def parse_path_file(text: str) -> list[list[str]]:
    """One path per line, comma-separated vertex tokens."""
    paths: list[list[str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = [t.strip() for t in line.split(",")]
        if any(not t for t in tokens):
            raise MalformedLine(lineno, raw)
        paths.append(tokens)
    return paths
