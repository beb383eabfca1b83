"""Generators for example graphs.

Vertices are 0-based: vertex ``i`` corresponds to the 1-based label ``i + 1``
used when writing adjacency matrices by hand.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Dict, Iterable, List, Tuple

from .errors import AntiParallelOffsets, CyclicParentMap, EmptyOffsets, NTooSmall
from .graph import DirectedGraph, build_graph


def _need(value: int, minimum: int, name: str = "n") -> None:
    if not isinstance(value, int) or value < minimum:
        raise NTooSmall(f"{name} must be an integer >= {minimum}, got {value!r}")


def directed_cycle(n: int) -> DirectedGraph:
    _need(n, 3)
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def oriented_complete(n: int) -> DirectedGraph:
    """Tournament on ``n`` vertices.

    For odd ``n = 2m + 1``, ``i -> j`` iff ``j - i mod n`` is in ``1..m``.
    For even ``n`` the last vertex of the ``n + 1`` tournament is deleted.
    """
    _need(n, 3)
    odd = n if n % 2 else n + 1
    m = odd // 2
    edges = [
        (i, (i + s) % odd)
        for i in range(odd)
        for s in range(1, m + 1)
        if i < n and (i + s) % odd < n
    ]
    return build_graph(n, edges)


def circulant(n: int, offsets: Iterable[int]) -> DirectedGraph:
    """Edges ``i -> i + s mod n`` for every offset ``s``.

    Offsets ``s`` and ``n - s`` together (including ``2s = n``) would create
    anti-parallel pairs and are rejected. The result is strongly connected
    iff ``gcd(n, *offsets) == 1``; see :func:`circulant_is_strongly_connected`.
    """
    offsets = sorted(set(offsets))
    if not offsets:
        raise EmptyOffsets("circulant needs at least one offset")
    _need(n, 2)
    for s in offsets:
        if not 1 <= s <= n - 1:
            raise ValueError(f"offset {s} outside 1..{n - 1}")
        if (n - s) in offsets:
            raise AntiParallelOffsets(f"offsets {s} and {n - s} give anti-parallel edges")
    return build_graph(n, [(i, (i + s) % n) for i in range(n) for s in offsets])


def circulant_is_strongly_connected(n: int, offsets: Iterable[int]) -> bool:
    g = n
    for s in offsets:
        g = gcd(g, s)
    return g == 1


def cycle_product(g: int, h: int) -> DirectedGraph:
    """Cartesian product of directed cycles; vertex ``(i, j)`` is ``i * h + j``."""
    _need(g, 3, "g")
    _need(h, 3, "h")
    edges = []
    for i in range(g):
        for j in range(h):
            edges.append((i * h + j, ((i + 1) % g) * h + j))
            edges.append((i * h + j, i * h + (j + 1) % h))
    return build_graph(g * h, edges)


@dataclass(frozen=True)
class TreeSpec:
    """Rooted tree given by the parent of every non-root vertex."""

    root: int
    parent: Dict[int, int]

    @property
    def n(self) -> int:
        return 1 + len(self.parent)

    def depth(self, v: int) -> int:
        k = 0
        while v != self.root:
            v = self.parent[v]
            k += 1
        return k


def rooted_in_tree(spec: TreeSpec) -> DirectedGraph:
    """Every non-root vertex points to its parent; the root has no out-edge.

    Not strongly connected; curvature is meaningful on edges whose head is
    not the root.
    """
    n = spec.n
    vertices = set(spec.parent) | {spec.root}
    if vertices != set(range(n)) or spec.root in spec.parent:
        raise CyclicParentMap("parent map must cover 0..n-1 except the root")
    for v in spec.parent:
        seen = set()
        while v != spec.root:
            if v in seen:
                raise CyclicParentMap(f"parent map has a cycle through {v}")
            seen.add(v)
            if v not in spec.parent:
                raise CyclicParentMap(f"vertex {v} does not lead to the root")
            v = spec.parent[v]
    return build_graph(n, sorted(spec.parent.items()))


def star_tree(leaves: int) -> TreeSpec:
    _need(leaves, 1, "leaves")
    return TreeSpec(0, {i: 0 for i in range(1, leaves + 1)})


def caterpillar_tree(spine: int, legs: int = 2) -> TreeSpec:
    """Path ``0 <- 1 <- ... <- spine-1`` with ``legs`` leaves on every spine vertex."""
    _need(spine, 1, "spine")
    parent = {i: i - 1 for i in range(1, spine)}
    nxt = spine
    for s in range(spine):
        for _ in range(legs):
            parent[nxt] = s
            nxt += 1
    return TreeSpec(0, parent)


def binary_tree(depth: int) -> TreeSpec:
    """Full binary tree of the given depth in heap order (children of ``i`` are ``2i+1, 2i+2``)."""
    _need(depth, 1, "depth")
    n = 2 ** (depth + 1) - 1
    return TreeSpec(0, {i: (i - 1) // 2 for i in range(1, n)})


def adjacency_rows(G: DirectedGraph) -> List[List[int]]:
    """Adjacency matrix ``a[i][j] = 1`` iff ``(i, j)`` is an edge."""
    return [[1 if G.has_edge(i, j) else 0 for j in range(G.n)] for i in range(G.n)]


def edge_set(G: DirectedGraph) -> set:
    return set(G.edges)


def from_one_based(edges: Iterable[Tuple[int, int]]) -> List[Tuple[int, int]]:
    return [(u - 1, v - 1) for u, v in edges]
