import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordless.graph import (
    Graph,
    ParseError,
    canonicalize,
    format_graph,
    is_chordless_cycle,
    parse_graph,
)

from conftest import PENTAGON_EDGES, complete_graph, from_labels


def test_parse_triangle_with_header():
    g = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 3 1\n")
    assert (g.n, g.m) == (3, 3)
    assert g.edge_set() == {(0, 1), (1, 2), (0, 2)}
    assert g.labels == (1, 2, 3)


def test_parse_pentagon_bare_lines():
    text = "c pentagon plus two triangles\n" + "".join(f"{u} {v}\n" for u, v in PENTAGON_EDGES)
    g = parse_graph(text)
    assert (g.n, g.m) == (7, 9)


def test_parse_crlf_and_blank_lines():
    g = parse_graph("c x\r\n\r\np edge 4 2\r\ne 1 2\r\ne 3 4\r\n")
    assert (g.n, g.m) == (4, 2)


def test_header_keeps_isolated_vertices():
    g = parse_graph("p edge 5 1\ne 2 4\n")
    assert g.n == 5
    assert g.degree(0) == 0


def test_sparse_labels_without_header():
    g = parse_graph("10 30\n30 20\n")
    assert g.labels == (10, 20, 30)
    assert g.label_edges() == {(10, 30), (20, 30)}


@pytest.mark.parametrize(
    "text, lineno, fragment",
    [
        ("e 1 1\n", 1, "self-loop"),
        ("e 1 2\ne 2 1\n", 2, "duplicate"),
        ("p edge 3 3\ne 1 2\n", 1, "declares 3 edges"),
        ("p edge 2 1\ne 1 3\n", 2, "exceeds"),
        ("c ok\ne 1\n", 2, "two labels"),
        ("e 1 x\n", 1, "positive integer"),
        ("e 0 1\n", 1, "positive integer"),
        ("p edge 3 1\n1 2\n", 2, "bare edge"),
        ("e 1 2\np edge 2 1\n", 2, "header after"),
        ("q 1 2\n", 1, "unrecognised"),
        ("p col 3 1\n", 1, "p edge"),
    ],
)
def test_parse_errors_carry_line_numbers(text, lineno, fragment):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.lineno == lineno
    assert fragment in str(info.value)


def test_from_edges_rejects_non_simple():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@given(graphs())
def test_graph_invariants(g):
    for v in range(g.n):
        row = g.neighbors(v)
        assert list(row) == sorted(set(row))
        assert v not in row
        for w in row:
            assert v in g.neighbors(w)
    assert 2 * g.m == sum(map(len, g.adjacency))


@given(graphs())
def test_format_then_parse_round_trip(g):
    back = parse_graph(format_graph(g, ["round trip"]))
    assert back.label_edges() == g.label_edges()
    assert back.n == g.n


def test_format_sparse_labels_round_trip():
    g = parse_graph("10 30\n30 20\n")
    assert parse_graph(format_graph(g)).label_edges() == g.label_edges()


@pytest.mark.parametrize(
    "cycle, expected",
    [
        ((3, 1, 2), (1, 2, 3)),
        ((1, 3, 2), (1, 2, 3)),
        ((4, 5, 1, 2, 3), (1, 2, 3, 4, 5)),
        ((2, 9, 5, 1), (1, 2, 9, 5)),
    ],
)
def test_canonicalize_examples(cycle, expected):
    assert canonicalize(cycle) == expected


@given(st.lists(st.integers(0, 1000), min_size=3, max_size=12, unique=True), st.integers(0, 20))
def test_canonicalize_rotation_reversal_invariance(cycle, r):
    c = canonicalize(cycle)
    r %= len(cycle)
    rotated = cycle[r:] + cycle[:r]
    assert canonicalize(rotated) == c
    assert canonicalize(cycle[::-1]) == c
    assert canonicalize(c) == c
    assert c[0] == min(cycle)
    assert c[1] < c[-1]
    assert sorted(c) == sorted(cycle)


def test_is_chordless_examples(pentagon):
    k4 = complete_graph(4)
    assert is_chordless_cycle(k4, [0, 1, 2])
    assert not is_chordless_cycle(k4, [0, 1, 2, 3])
    assert is_chordless_cycle(pentagon, [0, 1, 2, 3, 4])


@pytest.mark.parametrize(
    "cycle",
    [[], [0, 1], [0, 1, 0], [0, 1, 9], [0, 2, 1, 3], [0, 1, 2, 3, 5]],
)
def test_is_chordless_rejects_malformed(pentagon, cycle):
    assert not is_chordless_cycle(pentagon, cycle)


def _induced_is_cycle(g, cycle):
    """Definition-level check: the induced subgraph on the vertices is the cycle."""
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    induced = {frozenset((u, v)) for u, v in itertools.combinations(cycle, 2) if g.has_edge(u, v)}
    ring = {frozenset((cycle[i], cycle[(i + 1) % k])) for i in range(k)}
    return induced == ring


@settings(max_examples=300)
@given(graphs(max_n=7), st.data())
def test_is_chordless_matches_definition(g, data):
    if g.n < 3:
        return
    k = data.draw(st.integers(3, g.n))
    seq = data.draw(st.permutations(range(g.n)))[:k]
    assert is_chordless_cycle(g, seq) == _induced_is_cycle(g, seq)


def test_is_chordless_on_long_cycle():
    k = 200
    g = from_labels([(i, i % k + 1) for i in range(1, k + 1)])
    assert is_chordless_cycle(g, list(range(k)))
