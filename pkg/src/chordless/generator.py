"""Seeded generators for orientable and non-orientable test graphs.

Orientable graphs are grown by gluing cycles onto existing edges, which is
exactly how every two-connected orientable graph can be built.  The random
source is :class:`random.Random` (Mersenne Twister); the seed and parameters
are written into the emitted file so a corpus can be regenerated.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass

from .graph import Graph, format_graph
from .oracle import decompose_is_co

__all__ = [
    "GenParams",
    "GeneratorError",
    "gen_co_graph",
    "gen_non_co_graph",
    "generate",
    "PRNG_NAME",
]

PRNG_NAME = "python-random-mt19937"
MAX_RETRIES = 64


class GeneratorError(RuntimeError):
    pass


@dataclass(frozen=True)
class GenParams:
    attachments: int = 10
    min_len: int = 3
    max_len: int = 6
    seed: int = 0
    want_co: bool = True

    def __post_init__(self):
        if self.attachments < 0:
            raise ValueError("attachments must be >= 0")
        if not 3 <= self.min_len <= self.max_len:
            raise ValueError("need 3 <= min_len <= max_len")

    def comments(self) -> list[str]:
        items = " ".join(f"{k}={v}" for k, v in asdict(self).items())
        return [f"generated by chordless gen, prng={PRNG_NAME}", items]


def _grow(p: GenParams, rng: random.Random) -> tuple[int, list[tuple[int, int]]]:
    length = rng.randint(p.min_len, p.max_len)
    edges = [(i, i + 1) for i in range(length - 1)] + [(0, length - 1)]
    n = length
    for _ in range(p.attachments):
        x, y = edges[rng.randrange(len(edges))]
        length = rng.randint(p.min_len, p.max_len)
        path = [x, *range(n, n + length - 2), y]
        n += length - 2
        edges.extend(zip(path, path[1:]))
    return n, edges


def gen_co_graph(p: GenParams) -> Graph:
    """A cycle with ``p.attachments`` more cycles glued along random edges."""
    n, edges = _grow(p, random.Random(p.seed))
    return Graph.from_edges(n, edges)


def gen_non_co_graph(p: GenParams) -> Graph:
    """An orientable graph plus two new paths between a non-adjacent pair.

    The result is checked with :func:`decompose_is_co`; failures are retried
    from the same random stream, so the output is still a function of the
    seed.  Raises :class:`GeneratorError` if no attempt succeeds (for
    instance when every base graph is a triangle, which has no non-adjacent
    pair).
    """
    rng = random.Random(p.seed)
    for _ in range(MAX_RETRIES):
        n, edges = _grow(p, rng)
        adj = [set() for _ in range(n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if v not in adj[u]]
        if not pairs:
            continue
        a, b = pairs[rng.randrange(len(pairs))]
        for _ in range(2):
            inner = rng.randint(1, max(1, p.max_len - 2))
            path = [a, *range(n, n + inner), b]
            n += inner
            edges.extend(zip(path, path[1:]))
        g = Graph.from_edges(n, edges)
        if not decompose_is_co(g):
            return g
    raise GeneratorError(f"no non-orientable graph after {MAX_RETRIES} attempts")


def generate(p: GenParams) -> tuple[Graph, str]:
    """Build the graph for ``p`` and its edge-list text with metadata comments."""
    g = gen_co_graph(p) if p.want_co else gen_non_co_graph(p)
    return g, format_graph(g, p.comments())
