import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pclie.graph import CommutationGraph  # noqa: E402
from pclie.words import Alphabet  # noqa: E402

SUITE_SEED = 20240917


def suite_4():
    """All 64 labeled graphs on x1 < x2 < x3 < x4."""
    return [CommutationGraph.from_edge_mask(4, m) for m in range(64)]


def suite_5():
    """20 fixed pseudorandom labeled graphs on 5 vertices."""
    masks = random.Random(SUITE_SEED).sample(range(1 << 10), 20)
    return [CommutationGraph.from_edge_mask(5, m) for m in masks]


def suite():
    """``(graph, degree bound)`` pairs used by the acceptance criteria."""
    return [(g, 6) for g in suite_4()] + [(g, 5) for g in suite_5()]


def named_graph(name):
    a3 = Alphabet.standard(3)
    return {
        "P3": CommutationGraph(a3, [(0, 1), (1, 2)]),
        "K3": CommutationGraph(a3, [(0, 1), (0, 2), (1, 2)]),
        "E3": CommutationGraph(a3, []),
        "K2": CommutationGraph(Alphabet.standard(2), [(0, 1)]),
        "E2": CommutationGraph(Alphabet.standard(2), []),
    }[name]


@pytest.fixture
def P3():
    return named_graph("P3")


@pytest.fixture
def K3():
    return named_graph("K3")


@pytest.fixture
def A3():
    return Alphabet.standard(3)


ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
