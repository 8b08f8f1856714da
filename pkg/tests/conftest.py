import random

import pytest

from signed_paths.sgraph import from_edge_list

ACCEPTANCE_LINES: list[str] = []


def random_signed_graph(rng: random.Random, n: int, p: float = 0.4):
    edges = [
        (u, v, rng.choice((1, -1)))
        for u in range(n) for v in range(u + 1, n)
        if rng.random() < p
    ]
    return from_edge_list(n, edges)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
