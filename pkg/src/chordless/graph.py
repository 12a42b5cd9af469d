"""Simple undirected graphs, the edge-list text format, and cycle helpers.

Vertices are dense integer ids in ``range(n)``.  Every vertex also carries an
external label (a positive integer) which is what the text format and the
command line speak.
"""

from __future__ import annotations

import io
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, TextIO

__all__ = [
    "Graph",
    "ParseError",
    "parse_graph",
    "read_graph",
    "format_graph",
    "canonicalize",
    "is_chordless_cycle",
]


class ParseError(ValueError):
    """Malformed edge-list input.  ``lineno`` is 1-based."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
        self.message = message


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph with sorted adjacency tuples.

    Build one with :meth:`from_edges`; the constructor trusts its input.
    """

    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[int, ...]
    m: int = field(default=0)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[int] | None = None,
    ) -> "Graph":
        """Build a graph on ids ``0..n-1``.

        Raises ``ValueError`` on self-loops, duplicate edges or ids out of
        range.  Labels default to ``id + 1``.
        """
        nbrs: list[list[int]] = [[] for _ in range(n)]
        m = 0
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].append(v)
            nbrs[v].append(u)
            m += 1
        adjacency = []
        for v, row in enumerate(nbrs):
            row.sort()
            for i in range(1, len(row)):
                if row[i] == row[i - 1]:
                    raise ValueError(f"duplicate edge ({v}, {row[i]})")
            adjacency.append(tuple(row))
        if labels is None:
            labels = range(1, n + 1)
        labels = tuple(labels)
        if len(labels) != n:
            raise ValueError("label table length differs from vertex count")
        return cls(tuple(adjacency), labels, m)

    @property
    def n(self) -> int:
        return len(self.adjacency)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adjacency[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, sorted."""
        for u, row in enumerate(self.adjacency):
            for v in row[bisect_left(row, u) :]:
                yield u, v

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self.edges())

    def label_edges(self) -> set[tuple[int, int]]:
        """Edge set in external labels, each pair ordered (small, large)."""
        lab = self.labels
        return {tuple(sorted((lab[u], lab[v]))) for u, v in self.edges()}

    def ids_of(self, labels: Iterable[int]) -> list[int]:
        index = {lab: i for i, lab in enumerate(self.labels)}
        return [index[lab] for lab in labels]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_graph(text: str | TextIO) -> Graph:
    """Parse the edge-list format.

    Recognised lines: ``c ...`` comments, one optional ``p edge <n> <m>``
    header before any edge, ``e <u> <v>`` edges, and bare ``<u> <v>`` edges
    when there is no header.  Labels are positive integers.  With a header,
    label ``k`` becomes id ``k-1`` and every label must be ``<= n``; without
    one, the distinct labels seen are numbered in increasing order.
    """
    stream = io.StringIO(text) if isinstance(text, str) else text
    header: tuple[int, int, int] | None = None  # (lineno, n, m)
    seen_edge = False
    raw_edges: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int]] = set()

    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if header is not None:
                raise ParseError(lineno, "second header line")
            if seen_edge:
                raise ParseError(lineno, "header after edge lines")
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(lineno, "expected 'p edge <n> <m>'")
            n, m = _count(parts[2], lineno), _count(parts[3], lineno)
            header = (lineno, n, m)
            continue
        if tag == "e":
            fields = parts[1:]
        elif tag.isdigit() or tag.lstrip("+-").isdigit():
            if header is not None:
                raise ParseError(lineno, "bare edge line not allowed after a header")
            fields = parts
        else:
            raise ParseError(lineno, f"unrecognised line {line!r}")
        if len(fields) != 2:
            raise ParseError(lineno, "edge line needs exactly two labels")
        u, v = _label(fields[0], lineno), _label(fields[1], lineno)
        if u == v:
            raise ParseError(lineno, f"self-loop on {u} (simple graphs only)")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError(lineno, f"duplicate edge {u} {v}")
        seen.add(key)
        raw_edges.append((lineno, u, v))
        seen_edge = True

    if header is not None:
        hline, n, m = header
        for lineno, u, v in raw_edges:
            if u > n or v > n:
                raise ParseError(lineno, f"label exceeds header vertex count {n}")
        if m != len(raw_edges):
            raise ParseError(
                hline, f"header declares {m} edges, body has {len(raw_edges)}"
            )
        labels = list(range(1, n + 1))
        edges = [(u - 1, v - 1) for _, u, v in raw_edges]
    else:
        labels = sorted({x for _, u, v in raw_edges for x in (u, v)})
        index = {lab: i for i, lab in enumerate(labels)}
        edges = [(index[u], index[v]) for _, u, v in raw_edges]
        n = len(labels)
    return Graph.from_edges(n, edges, labels)


def _count(tok: str, lineno: int) -> int:
    if not tok.isdigit():
        raise ParseError(lineno, f"expected a non-negative integer, got {tok!r}")
    return int(tok)


def _label(tok: str, lineno: int) -> int:
    if not tok.isdigit() or int(tok) < 1:
        raise ParseError(lineno, f"expected a positive integer label, got {tok!r}")
    return int(tok)


def read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8", newline=None) as fh:
        return parse_graph(fh)


def format_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    """Serialise ``g`` in the edge-list format, one ``e`` line per edge.

    A header is written when labels are exactly ``1..n``; otherwise the
    header is omitted (it would force dense labels).
    """
    out = [f"c {c}" for c in comments]
    dense = g.labels == tuple(range(1, g.n + 1))
    if dense:
        out.append(f"p edge {g.n} {g.m}")
    lab = g.labels
    out.extend(f"e {lab[u]} {lab[v]}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def canonicalize(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate and orient ``cycle`` so the minimum comes first, followed by the
    smaller of its two cycle-neighbours.

    >>> canonicalize([4, 5, 1, 2, 3])
    (1, 2, 3, 4, 5)
    >>> canonicalize([1, 3, 2])
    (1, 2, 3)
    """
    k = len(cycle)
    i = min(range(k), key=cycle.__getitem__)
    nxt, prv = cycle[(i + 1) % k], cycle[i - 1]
    if nxt <= prv:
        return tuple(cycle[i:]) + tuple(cycle[:i])
    # walk backwards from i
    return tuple(cycle[i::-1]) + tuple(cycle[:i:-1])


def is_chordless_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    """True iff ``cycle`` is a chordless cycle of ``g``.

    Uses O(k^2) adjacency membership tests; malformed input gives False.
    """
    k = len(cycle)
    if k < 3:
        return False
    n = g.n
    for v in cycle:
        if not isinstance(v, int) or not 0 <= v < n:
            return False
    if len(set(cycle)) != k:
        return False
    for i in range(k):
        if not g.has_edge(cycle[i], cycle[(i + 1) % k]):
            return False
    for i in range(k):
        # pairs (i, j) with j not adjacent to i along the cycle
        last = k - 1 if i > 0 else k - 2
        for j in range(i + 2, last + 1):
            if g.has_edge(cycle[i], cycle[j]):
                return False
    return True
