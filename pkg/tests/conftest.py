import itertools

import pytest

from chordless.graph import Graph

PENTAGON_EDGES = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 6), (6, 2), (3, 7), (7, 4)]
TWO_TRIANGLES_EDGES = [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4)]
K23_EDGES = [(1, 3), (3, 2), (1, 4), (4, 2), (1, 5), (5, 2)]


def from_labels(edges, n=None):
    """Graph on labels 1..n with the given 1-based edges."""
    if n is None:
        n = max(max(e) for e in edges) if edges else 0
    return Graph.from_edges(n, [(u - 1, v - 1) for u, v in edges])


def cycle_graph(k):
    return from_labels([(i, i % k + 1) for i in range(1, k + 1)])


def complete_graph(k):
    return from_labels(list(itertools.combinations(range(1, k + 1), 2)), k)


def in_labels(g, cycles):
    return {tuple(g.labels[v] for v in c) for c in cycles}


def induced_cycles_by_subsets(g):
    """Chordless cycles by checking every vertex subset (tiny graphs only).

    A subset is a chordless cycle iff its induced subgraph is 2-regular and
    connected.  Returned canonical, in ids.
    """
    from chordless.graph import canonicalize

    out = set()
    for k in range(3, g.n + 1):
        for sub in itertools.combinations(range(g.n), k):
            s = set(sub)
            nb = {v: [w for w in g.neighbors(v) if w in s] for v in sub}
            if any(len(x) != 2 for x in nb.values()):
                continue
            walk, prev, cur = [sub[0]], None, sub[0]
            while True:
                a, b = nb[cur]
                nxt = b if a == prev else a
                if nxt == sub[0]:
                    break
                walk.append(nxt)
                prev, cur = cur, nxt
            if len(walk) == k:
                out.add(canonicalize(walk))
    return out


@pytest.fixture
def pentagon():
    return from_labels(PENTAGON_EDGES)


@pytest.fixture
def two_triangles():
    return from_labels(TWO_TRIANGLES_EDGES)


@pytest.fixture
def k23():
    return from_labels(K23_EDGES)


@pytest.fixture
def k4():
    return complete_graph(4)


_ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion."""
    name = request.node.get_closest_marker("criterion").args[0]
    yield
    rep = getattr(request.node, "rep_call", None)
    status = "PASS" if rep is not None and rep.passed else "FAIL"
    _ACCEPTANCE_LINES.append(f"[{status}] {name}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
