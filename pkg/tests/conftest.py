from __future__ import annotations

import pytest

from pathdraw import Dag, GeneratorConfig, generate_dag


@pytest.fixture
def chain3() -> Dag:
    return Dag(3, ((0, 1), (1, 2)), ("a", "b", "c"))


@pytest.fixture
def diamond() -> Dag:
    return Dag(4, ((0, 1), (0, 2), (1, 3), (2, 3)), ("a", "b", "c", "d"))


def random_dag(n: int, avg_degree: float, seed: int) -> Dag:
    return generate_dag(GeneratorConfig(n, avg_degree, seed))
