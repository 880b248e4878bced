import random

import pytest

from cistkit.harness import random_hypergraph
from cistkit.model import split_of_hypergraph

ACCEPTANCE_LINES = []


def seeded_hypergraphs(count, n_range, m_range, base=0, max_order=None):
    """Deterministic stream of random normalized hypergraphs."""
    out = []
    s = base
    while len(out) < count:
        rng = random.Random(s)
        n = rng.randint(*n_range)
        m = rng.randint(*m_range)
        s += 1
        if max_order is not None and n + m > max_order:
            continue
        out.append(random_hypergraph(n, m, s))
    return out


def seeded_split_graphs(count, n_range, m_range, base=0, max_order=None):
    return [split_of_hypergraph(h) for h in seeded_hypergraphs(count, n_range, m_range, base, max_order)]


@pytest.fixture
def acceptance_log():
    def log(criterion, passed, detail=""):
        line = f"[{'PASS' if passed else 'FAIL'}] {criterion}"
        if detail:
            line += f" -- {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return passed

    return log


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
