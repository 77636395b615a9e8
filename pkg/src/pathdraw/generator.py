"""Seeded random DAG generation with a controlled average degree."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .dagcore import Dag
from .errors import InfeasibleDegree

__all__ = ["GeneratorConfig", "generate_dag"]


@dataclass(frozen=True)
class GeneratorConfig:
    """n vertices, target average degree 2m/n, and a 64-bit seed."""

    n: int
    avg_degree: float
    seed: int

    @property
    def edge_target(self) -> int:
        return round(self.n * self.avg_degree / 2)


def _unrank_pair(r: int, n: int, total: int) -> tuple[int, int]:
    # inverse of lexicographic ranking of pairs (a, b), a < b
    q = total - 1 - r
    j = (1 + math.isqrt(8 * q + 1)) // 2
    a = n - 1 - j
    first_rank = total - (j + 1) * j // 2
    return a, a + 1 + (r - first_rank)


def generate_dag(cfg: GeneratorConfig) -> Dag:
    """Sample m distinct vertex pairs uniformly, oriented by a hidden topological order.

    A fixed seed reproduces the edge list byte for byte. Labels are "v0".."v{n-1}".
    """
    n = cfg.n
    m = cfg.edge_target
    total = n * (n - 1) // 2
    if m > total:
        raise InfeasibleDegree(n, m)
    rng = random.Random(cfg.seed)
    position = list(range(n))
    rng.shuffle(position)  # position[v] = rank of v in the hidden topological order
    ranks = sorted(rng.sample(range(total), m)) if m else []
    edges = []
    for r in ranks:
        a, b = _unrank_pair(r, n, total)
        edges.append((a, b) if position[a] < position[b] else (b, a))
    labels = tuple(f"v{i}" for i in range(n))
    return Dag(n, tuple(edges), labels)
