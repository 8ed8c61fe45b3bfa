import itertools

import pytest

from graphhash.graph import Graph

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def build(n, edges, directed=True, vlabels=None, elabels=None):
    g = Graph()
    for v in range(n):
        g.add_vertex(None if vlabels is None else vlabels[v])
    for k, (s, t) in enumerate(edges):
        g.add_edge(s, t, directed, None if elabels is None else elabels[k])
    return g


FIGURE1_EDGES = [(0, 1), (0, 2), (1, 2), (2, 1)]


@pytest.fixture
def figure1():
    return build(3, FIGURE1_EDGES)


def ordered_pairs(n):
    return [(u, v) for u in range(n) for v in range(n) if u != v]


def digraph_class(n, bits):
    """Canonical form of a simple digraph bitmask: minimum over all relabelings.

    Independent of every matcher in the package; used as the ground-truth
    isomorphism partition for exhaustive sweeps.
    """
    pairs = ordered_pairs(n)
    index = {p: k for k, p in enumerate(pairs)}
    edges = [p for k, p in enumerate(pairs) if bits >> k & 1]
    best = None
    for perm in itertools.permutations(range(n)):
        key = 0
        for u, v in edges:
            key |= 1 << index[(perm[u], perm[v])]
        if best is None or key < best:
            best = key
    return best
