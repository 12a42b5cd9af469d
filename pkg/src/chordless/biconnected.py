"""Biconnected components via an iterative lowpoint DFS."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

__all__ = ["Component", "biconnected_components"]


@dataclass(frozen=True)
class Component:
    """One block of a parent graph, relabelled to dense ids.

    ``to_parent[i]`` is the parent id of component vertex ``i``; it is
    strictly increasing, so canonical cycles stay canonical when mapped back.
    """

    subgraph: Graph
    to_parent: tuple[int, ...]
    is_single_edge: bool

    @property
    def n(self) -> int:
        return self.subgraph.n

    @property
    def m(self) -> int:
        return self.subgraph.m


def biconnected_components(g: Graph) -> list[Component]:
    """Split ``g`` into blocks.

    Every edge lands in exactly one component; isolated vertices produce
    none.  Components come out in DFS completion order, which is
    deterministic for a given graph.
    """
    adj = g.adjacency
    n = g.n
    disc = [-1] * n
    low = [0] * n
    clock = 0
    blocks: list[list[tuple[int, int]]] = []

    for root in range(n):
        if disc[root] != -1 or not adj[root]:
            continue
        disc[root] = low[root] = clock
        clock += 1
        edge_stack: list[tuple[int, int]] = []
        # frames: (vertex, parent, next neighbour index)
        stack = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            v, parent, i = frame
            row = adj[v]
            descended = False
            while i < len(row):
                w = row[i]
                i += 1
                if disc[w] == -1:
                    frame[2] = i
                    edge_stack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append([w, v, 0])
                    descended = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if descended:
                continue
            stack.pop()
            if not stack:
                break
            u = stack[-1][0]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                block = []
                while True:
                    e = edge_stack.pop()
                    block.append(e)
                    if e == (u, v):
                        break
                blocks.append(block)

    return [_materialize(g, block) for block in blocks]


def _materialize(g: Graph, block: list[tuple[int, int]]) -> Component:
    verts = sorted({x for e in block for x in e})
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[a], index[b]) for a, b in block]
    sub = Graph.from_edges(len(verts), edges, [g.labels[v] for v in verts])
    return Component(sub, tuple(verts), len(block) == 1)
