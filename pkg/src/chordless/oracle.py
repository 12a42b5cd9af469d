"""Brute-force ground truth for small graphs.

Nothing here touches the reducer or the lowpoint decomposition: blocks are
found by deleting vertices one at a time, and orientability is settled
either by trying every orientation or by peeling ears greedily.
"""

from __future__ import annotations

from collections import deque

import numpy as np

from .graph import Graph, canonicalize

__all__ = [
    "OracleRangeError",
    "brute_chordless_cycles",
    "brute_is_co",
    "decompose_is_co",
    "brute_blocks",
]

DEFAULT_MAX_EDGES = 24


class OracleRangeError(ValueError):
    """The input is too large for an exhaustive oracle."""


def brute_chordless_cycles(g: Graph) -> list[tuple[int, ...]]:
    """All induced cycles of ``g``, canonical, sorted.

    Grows induced paths rooted at their smallest vertex; a path closes into
    a cycle when its end touches the root, and only the orientation whose
    second vertex is smaller than its last is kept.
    """
    adj = [set(row) for row in g.adjacency]
    found: list[tuple[int, ...]] = []

    def extend(path: list[int], on_path: set[int]) -> None:
        root, last = path[0], path[-1]
        inner = path[1:-1]
        for v in adj[last]:
            if v <= root or v in on_path:
                continue
            if any(v in adj[p] for p in inner):
                continue
            if root in adj[v]:
                if path[1] < v:
                    found.append(canonicalize(path + [v]))
                continue
            path.append(v)
            on_path.add(v)
            extend(path, on_path)
            on_path.discard(v)
            path.pop()

    for r in range(g.n):
        for a in adj[r]:
            if a > r:
                extend([r, a], {r, a})
    found.sort()
    return found


def brute_is_co(g: Graph, max_edges: int = DEFAULT_MAX_EDGES) -> bool:
    """Try all ``2**m`` orientations for one making every chordless cycle directed.

    Raises :class:`OracleRangeError` when ``m > max_edges``.
    """
    m = g.m
    if m > max_edges:
        raise OracleRangeError(f"oracle out of range: m={m} > {max_edges}")
    cycles = brute_chordless_cycles(g)
    if not cycles:
        return True
    index = {e: i for i, e in enumerate(g.edges())}

    # bit i set means edge i points from its smaller to its larger endpoint;
    # a cycle is directed iff its edges read all-forward or all-backward
    masks = []
    for c in cycles:
        edge_mask = 0
        fwd = 0
        for i, u in enumerate(c):
            v = c[(i + 1) % len(c)]
            bit = 1 << index[(u, v) if u < v else (v, u)]
            edge_mask |= bit
            if u < v:
                fwd |= bit
        masks.append((edge_mask, fwd, edge_mask ^ fwd))
    # most constrained first so the candidate set shrinks quickly
    masks.sort(key=lambda t: -bin(t[0]).count("1"))

    dtype = np.uint32 if m <= 32 else np.uint64
    chunk = 1 << 20
    for lo in range(0, 1 << m, chunk):
        cand = np.arange(lo, min(lo + chunk, 1 << m), dtype=dtype)
        for edge_mask, fwd, bwd in masks:
            sel = cand & dtype(edge_mask)
            cand = cand[(sel == fwd) | (sel == bwd)]
            if cand.size == 0:
                break
        if cand.size:
            return True
    return False


def _components_without(adj: list[set[int]], removed: int) -> list[int]:
    n = len(adj)
    label = [-1] * n
    c = 0
    for s in range(n):
        if s == removed or label[s] != -1:
            continue
        label[s] = c
        todo = deque([s])
        while todo:
            v = todo.popleft()
            for w in adj[v]:
                if w != removed and label[w] == -1:
                    label[w] = c
                    todo.append(w)
        c += 1
    return label


def brute_blocks(g: Graph) -> list[set[tuple[int, int]]]:
    """Edge sets of the blocks of ``g``.

    Two edges ``zv`` and ``zw`` at a vertex ``z`` share a block exactly when
    ``v`` and ``w`` stay connected after deleting ``z``; blocks are the
    classes of the transitive closure of that relation.
    """
    edges = list(g.edges())
    index = {e: i for i, e in enumerate(edges)}
    parent = list(range(len(edges)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    adj = [set(row) for row in g.adjacency]
    for z in range(g.n):
        nbrs = g.adjacency[z]
        if len(nbrs) < 2:
            continue
        label = _components_without(adj, z)
        first_in: dict[int, int] = {}
        for v in nbrs:
            e = index[(z, v) if z < v else (v, z)]
            c = label[v]
            if c in first_in:
                parent[find(e)] = find(first_in[c])
            else:
                first_in[c] = e

    groups: dict[int, set[tuple[int, int]]] = {}
    for e, i in index.items():
        groups.setdefault(find(i), set()).add(e)
    return list(groups.values())


def _peels_to_base(edges: set[tuple[int, int]]) -> bool:
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)

    while True:
        n = len(adj)
        m = sum(len(s) for s in adj.values()) // 2
        if m == 1:
            return True
        if all(len(s) == 2 for s in adj.values()):
            # a connected 2-regular block is a cycle
            return n == m
        ear = _find_ear(adj)
        if ear is None:
            return False
        for p in ear:
            for q in adj.pop(p):
                if q in adj:
                    adj[q].discard(p)


def _find_ear(adj: dict[int, set[int]]) -> list[int] | None:
    """Interior of some maximal degree-2 path whose end neighbours are adjacent."""
    seen: set[int] = set()
    for s, nb in adj.items():
        if len(nb) != 2 or s in seen:
            continue
        ends = []
        interior = [s]
        for first in nb:
            prev, cur = s, first
            while len(adj[cur]) == 2 and cur != s:
                interior.append(cur)
                a, b = adj[cur]
                prev, cur = cur, (b if a == prev else a)
            ends.append(cur)
        seen.update(interior)
        x, y = ends
        if x != y and y in adj[x]:
            return interior
    return None


def decompose_is_co(g: Graph) -> bool:
    """Decide orientability by peeling ears off each block.

    A block passes if it is a single edge or a cycle, or if removing some
    degree-2 path whose two end neighbours are adjacent leaves a block that
    passes.  Which ear goes first does not matter.
    """
    return all(_peels_to_base(block) for block in brute_blocks(g))
