import itertools
from math import gcd

import networkx as nx
import pytest

ACCEPTANCE_RESULTS = {}


def brute_vertices(n):
    """Vertex classes as frozensets {(a, c), (-a, -c)}; no canonical form involved."""
    out = set()
    for a, c in itertools.product(range(n), repeat=2):
        if gcd(gcd(a, c), n) == 1:
            out.add(frozenset({(a, c), ((-a) % n, (-c) % n)}))
    return out


def brute_nx_graph(n):
    """Graph on (a, c) pairs with lexicographically smallest representatives, via networkx."""
    reps = sorted(min(cls) for cls in brute_vertices(n))
    g = nx.Graph()
    g.add_nodes_from(reps)
    for (a, c), (b, d) in itertools.combinations(reps, 2):
        if (a * d - b * c) % n in {1 % n, (-1) % n}:
            g.add_edge((a, c), (b, d))
    return g


def as_pair(v):
    return (v.a, v.c)


@pytest.fixture(scope="session")
def nx_graph():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = brute_nx_graph(n)
        return cache[n]

    return get


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: (int(k.rstrip("abcd")), k)):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"criterion {key:<3} {'PASS' if ok else 'FAIL'}  {detail}")
