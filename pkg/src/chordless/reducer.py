"""Recognise cyclically orientable graphs and list their chordless cycles.

Each two-connected component is shrunk by repeatedly taking a degree-2
vertex off a FIFO queue and walking the chain of degree-2 vertices through
it.  Depending on where the walk stops the chain is

* an *ear*: its anchors are adjacent, so chain plus anchors is a chordless
  cycle; it is emitted and the chain interior deleted,
* a *detour*: anchors are not adjacent, so the chain is replaced by a single
  contracted vertex remembering the original vertices it stands for,
* the whole remaining component, which is a cycle; it is emitted and deleted.

A component is cyclically orientable exactly when this ends with nothing
left or with a single edge.  The reduced graph is mutated in place; the
``live`` flags are kept only so the bookkeeping can be audited.
"""

from __future__ import annotations

import enum
import random
from collections import OrderedDict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .biconnected import Component, biconnected_components
from .graph import Graph, canonicalize, is_chordless_cycle

__all__ = [
    "Chain",
    "ComponentResult",
    "NotCOReason",
    "ReducerState",
    "Verdict",
    "check_edge_bound",
    "enumerate_chordless_cycles",
    "reduce_component",
]


class NotCOReason(str, enum.Enum):
    EdgeBoundGlobal = "EdgeBoundGlobal"
    EdgeBoundComponent = "EdgeBoundComponent"
    NoDegreeTwoVertex = "NoDegreeTwoVertex"
    IrreducibleResidue = "IrreducibleResidue"

    def __str__(self) -> str:
        return self.value


def check_edge_bound(n: int, m: int) -> bool:
    """A cyclically orientable graph on ``n`` vertices has at most ``2n - 3`` edges."""
    return m <= 2 * n - 3


@dataclass(frozen=True)
class Chain:
    """Result of a walk.

    For an open chain ``x`` and ``y`` are the anchors and ``path`` runs from
    the ``x`` side to the ``y`` side.  For a closed one (``x is None``)
    ``path`` is the entire remaining cycle in traversal order.
    """

    path: tuple[int, ...]
    x: int | None = None
    y: int | None = None

    @property
    def closed(self) -> bool:
        return self.x is None


class ReducerState:
    """Mutable reduction of one two-connected component.

    Ids ``0..n0-1`` are the component's own vertices; contracted vertices
    are appended after them.  ``queue`` maps a vertex to ``True`` when it was
    queued because an ear removal dropped its degree to 2 (an *attachment
    anchor*), ``False`` for the initial degree-2 vertices.  A walk stops at
    a queued attachment anchor: the edge it shares with the other anchor is
    where the last ear was glued on, and keeping it lets the next peel reuse
    that edge instead of rolling the anchor into a longer chain.
    """

    def __init__(self, g: Graph, rng: random.Random | None = None):
        self.n0 = g.n
        self.adj: list[set[int]] = [set(row) for row in g.adjacency]
        self.live: list[bool] = [True] * g.n
        # contracted vertex w = n0 + i has keys[i] and ends[i] = (end_a, end_b)
        self.keys: list[tuple[int, ...]] = []
        self.ends: list[tuple[int, int]] = []
        self.n_rem = g.n
        self.m_rem = g.m
        self.rng = rng
        self.emitted: list[tuple[int, ...]] = []
        self.pops = 0

        start = [v for v in range(g.n) if len(self.adj[v]) == 2]
        if rng is not None:
            rng.shuffle(start)
        self.queue: OrderedDict[int, bool] = OrderedDict((v, False) for v in start)

    def is_contracted(self, v: int) -> bool:
        return v >= self.n0

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    # -- walking -----------------------------------------------------------

    def _step(self, start: int, first: int) -> tuple[list[int], int | None]:
        """Follow degree-2 vertices from ``start`` through ``first``.

        Returns the vertices passed and the stopping vertex, or ``None`` if
        the walk came back to ``start``.
        """
        adj, queue = self.adj, self.queue
        seq: list[int] = []
        prev, cur = start, first
        while cur != start:
            nb = adj[cur]
            if len(nb) != 2 or queue.get(cur, False):
                return seq, cur
            seq.append(cur)
            a, b = nb
            prev, cur = cur, (b if a == prev else a)
        return seq, None

    def walk_chain(self, u: int) -> Chain:
        """Walk both ways from the degree-2 vertex ``u``.  Does not mutate."""
        a, b = sorted(self.adj[u])
        if self.rng is not None and self.rng.random() < 0.5:
            a, b = b, a
        left, x = self._step(u, a)
        if x is None:
            return Chain((u, *left))
        right, y = self._step(u, b)
        path = (*reversed(left), u, *right)
        if x == y:
            # both sides stopped at one vertex: it closes the last cycle
            return Chain((x, *path))
        return Chain(path, x, y)

    # -- expansion ---------------------------------------------------------

    def expand(self, seq: Sequence[int], cyclic: bool = False) -> list[int]:
        """Replace contracted vertices in ``seq`` by their original vertices,
        oriented according to the neighbour ``seq`` enters them from."""
        out: list[int] = []
        n0 = self.n0
        k = len(seq)
        for i, v in enumerate(seq):
            if v < n0:
                out.append(v)
                continue
            key = self.keys[v - n0]
            end_a, end_b = self.ends[v - n0]
            if i > 0 or cyclic:
                forward = seq[i - 1] == end_a
                assert forward or seq[i - 1] == end_b
            else:
                forward = k > 1 and seq[1] == end_b
            out.extend(key if forward else reversed(key))
        return out

    # -- mutations ---------------------------------------------------------

    def _delete(self, verts: Sequence[int]) -> None:
        adj = self.adj
        removed_edges = 0
        for p in verts:
            for q in adj[p]:
                adj[q].discard(p)
                removed_edges += 1
            adj[p] = set()
            self.live[p] = False
            self.queue.pop(p, None)
        # an edge between two deleted vertices is seen only from the first
        self.n_rem -= len(verts)
        self.m_rem -= removed_edges

    def remove_ear(self, chain: Chain) -> tuple[int, ...]:
        """Emit ``x, path, y`` as a cycle and delete the chain interior."""
        x, y = chain.x, chain.y
        assert x is not None and y is not None and y in self.adj[x]
        cycle = tuple(self.expand((x, *chain.path, y), cyclic=True))
        self.emitted.append(cycle)
        self._delete(chain.path)
        for anchor in (x, y):
            if len(self.adj[anchor]) == 2:
                self.queue[anchor] = True
        return cycle

    def contract(self, chain: Chain) -> int:
        """Replace the chain between non-adjacent anchors by one vertex."""
        x, y = chain.x, chain.y
        assert x is not None and y is not None and y not in self.adj[x]
        assert not self.is_contracted(x) and not self.is_contracted(y)
        if len(chain.path) == 1:
            # already a single vertex; nothing to rewire
            return chain.path[0]
        key = tuple(self.expand((x, *chain.path, y))[1:-1])
        self._delete(chain.path)
        w = len(self.adj)
        self.adj.append({x, y})
        self.adj[x].add(w)
        self.adj[y].add(w)
        self.live.append(True)
        self.keys.append(key)
        self.ends.append((x, y))
        self.n_rem += 1
        self.m_rem += 2
        return w

    def close(self, chain: Chain) -> tuple[int, ...]:
        """Emit the remaining cycle and delete it."""
        assert len(chain.path) == self.n_rem == self.m_rem
        cycle = tuple(self.expand(chain.path, cyclic=True))
        self.emitted.append(cycle)
        self._delete(chain.path)
        return cycle

    def step(self) -> bool:
        """Process one queue entry.  Returns False once the queue is empty."""
        if not self.queue:
            return False
        u, _ = self.queue.popitem(last=False)
        self.pops += 1
        if not self.live[u] or len(self.adj[u]) != 2:
            return True
        chain = self.walk_chain(u)
        if chain.closed:
            self.close(chain)
        elif chain.y in self.adj[chain.x]:
            self.remove_ear(chain)
        else:
            self.contract(chain)
        return True

    @property
    def terminal(self) -> str:
        if self.n_rem == 0:
            return "closure"
        if self.n_rem == 2 and self.m_rem == 1:
            return "single_edge"
        return "residue"

    def audit(self) -> None:
        """Recount live vertices and edges; raise AssertionError on drift."""
        live = [v for v, ok in enumerate(self.live) if ok]
        assert len(live) == self.n_rem, (len(live), self.n_rem)
        deg_sum = 0
        for v, nb in enumerate(self.adj):
            if not self.live[v]:
                assert not nb, f"dead vertex {v} still has neighbours"
                continue
            for q in nb:
                assert self.live[q] and v in self.adj[q]
            deg_sum += len(nb)
            if self.is_contracted(v):
                assert len(nb) <= 2
        assert deg_sum == 2 * self.m_rem, (deg_sum // 2, self.m_rem)
        for v in self.queue:
            assert self.live[v]


@dataclass
class ComponentResult:
    success: bool
    cycles: list[tuple[int, ...]]
    terminal: str
    n_rem: int
    m_rem: int
    pops: int


def reduce_component(
    g: Graph, rng: random.Random | None = None, audit: bool = False
) -> ComponentResult:
    """Run the reduction on a two-connected component ``g``.

    ``cycles`` are canonical, in component ids, in emission order.  ``rng``
    shuffles the initial queue and the walk direction; the outcome must not
    depend on it.  ``audit`` re-counts the bookkeeping after every step.
    """
    state = ReducerState(g, rng)
    if audit:
        state.audit()
    while state.step():
        if audit:
            state.audit()
    terminal = state.terminal
    return ComponentResult(
        success=terminal != "residue",
        cycles=[canonicalize(c) for c in state.emitted],
        terminal=terminal,
        n_rem=state.n_rem,
        m_rem=state.m_rem,
        pops=state.pops,
    )


@dataclass
class ComponentReport:
    index: int
    n: int
    m: int
    cycles: int
    terminal: str | None = None


@dataclass
class Verdict:
    """Outcome of :func:`enumerate_chordless_cycles`.

    When ``co`` is true, ``cycles`` holds every chordless cycle of the graph
    once, canonical and in parent ids.  Otherwise ``reason`` says why and
    ``component`` names the offending block, if any.
    """

    co: bool
    cycles: list[tuple[int, ...]] = field(default_factory=list)
    reason: NotCOReason | None = None
    component: int | None = None
    components: list[ComponentReport] = field(default_factory=list)

    def __str__(self) -> str:
        return "CO" if self.co else f"NOT_CO {self.reason}"


def _not_co(reason, index=None, reports=()) -> Verdict:
    return Verdict(False, [], reason, index, list(reports))


def enumerate_chordless_cycles(
    g: Graph,
    rng: random.Random | None = None,
    audit: bool = False,
    verify: bool = False,
    workers: int = 1,
) -> Verdict:
    """Decide whether ``g`` is cyclically orientable and list its chordless cycles.

    ``verify`` checks every emitted cycle against ``g`` directly.  With
    ``workers > 1`` components are reduced on a thread pool; results are
    merged by component index so the output does not change.
    """
    # m == 0 is trivially fine even for n < 2, where 2n-3 is negative
    if g.m > 0 and not check_edge_bound(g.n, g.m):
        return _not_co(NotCOReason.EdgeBoundGlobal)

    comps = biconnected_components(g)
    reports = [ComponentReport(i, c.n, c.m, 0) for i, c in enumerate(comps)]
    work: list[int] = []
    for i, comp in enumerate(comps):
        if comp.is_single_edge:
            continue
        if not check_edge_bound(comp.n, comp.m):
            return _not_co(NotCOReason.EdgeBoundComponent, i, reports)
        work.append(i)
    for i in work:
        sub = comps[i].subgraph
        if not any(len(row) == 2 for row in sub.adjacency):
            return _not_co(NotCOReason.NoDegreeTwoVertex, i, reports)

    def run(i: int) -> ComponentResult:
        return reduce_component(comps[i].subgraph, rng, audit)

    if workers > 1 and rng is None:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(run, work))
    else:
        results = [run(i) for i in work]

    cycles: list[tuple[int, ...]] = []
    for i, res in zip(work, results):
        reports[i].terminal = res.terminal
        if not res.success:
            return _not_co(NotCOReason.IrreducibleResidue, i, reports)
        to_parent = comps[i].to_parent
        for c in res.cycles:
            # to_parent is increasing, so the mapped cycle stays canonical
            mapped = tuple(to_parent[v] for v in c)
            if verify and not is_chordless_cycle(g, mapped):
                raise AssertionError(f"emitted non-chordless cycle {mapped}")
            cycles.append(mapped)
        reports[i].cycles = len(res.cycles)
    return Verdict(True, cycles, None, None, reports)
