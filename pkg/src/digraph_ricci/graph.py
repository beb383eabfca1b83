"""Simple directed graphs, hop distances and neighbourhood bookkeeping."""

from __future__ import annotations

import math
import threading
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import (
    AntiParallelPair,
    DuplicateEdge,
    InfiniteDistance,
    LoopEdge,
    SameVertex,
    VertexOutOfRange,
)

INF = math.inf

#: d_x = |in(x) | out(x)|, the default; anti-parallel pairs are rejected.
UNION = "union"
#: d_x := d_in + d_out; anti-parallel pairs are allowed.
SPLIT = "split"
DEGREE_CONVENTIONS = (UNION, SPLIT)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class DegreeTriple:
    d: int
    d_in: int
    d_out: int


class DirectedGraph:
    """Immutable simple digraph on vertices ``0 .. n-1``.

    Use :func:`build_graph` to construct one; it validates the edge list.
    Distances are computed by BFS per source on first use and memoized.
    """

    def __init__(self, n: int, out_adj, in_adj, degree_convention: str = UNION):
        self.n = n
        self.out_adj: Tuple[Tuple[int, ...], ...] = tuple(tuple(a) for a in out_adj)
        self.in_adj: Tuple[Tuple[int, ...], ...] = tuple(tuple(a) for a in in_adj)
        self.degree_convention = degree_convention
        self._out_sets = tuple(frozenset(a) for a in self.out_adj)
        self._in_sets = tuple(frozenset(a) for a in self.in_adj)
        self._degrees: Dict[int, DegreeTriple] = {}
        self._dist_rows: Dict[int, Tuple[float, ...]] = {}
        self._lock = threading.Lock()

    # -- structure ---------------------------------------------------------

    @property
    def edges(self) -> List[Edge]:
        """All edges in ascending ``(u, v)`` order."""
        return [(u, v) for u in range(self.n) for v in self.out_adj[u]]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.out_adj)

    def out_set(self, x: int) -> FrozenSet[int]:
        return self._out_sets[x]

    def in_set(self, x: int) -> FrozenSet[int]:
        return self._in_sets[x]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._out_sets[u]

    def check_vertex(self, x: int) -> None:
        if not (isinstance(x, int) and 0 <= x < self.n):
            raise VertexOutOfRange(x, self.n)

    def __eq__(self, other):
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return (self.n, self.out_adj, self.degree_convention) == (
            other.n,
            other.out_adj,
            other.degree_convention,
        )

    def __hash__(self):
        return hash((self.n, self.out_adj, self.degree_convention))

    def __repr__(self):
        return f"DirectedGraph(n={self.n}, edges={self.num_edges})"

    # -- degrees and distances ---------------------------------------------

    def degree_triple(self, x: int) -> DegreeTriple:
        return degree_triple(self, x)

    def distance(self, u: int, v: int) -> float:
        return shortest_distances(self, u)[v]

    def distance_matrix(self) -> List[Tuple[float, ...]]:
        return [shortest_distances(self, s) for s in range(self.n)]


def build_graph(
    n: int, edges: Iterable[Sequence[int]], degree_convention: str = UNION
) -> DirectedGraph:
    """Validate an edge list and build a :class:`DirectedGraph`.

    Raises
    ------
    LoopEdge, DuplicateEdge, VertexOutOfRange
        On violations of simpleness or indexing.
    AntiParallelPair
        If both ``(u, v)`` and ``(v, u)`` are present and the degree
        convention is ``"union"``.
    """
    if degree_convention not in DEGREE_CONVENTIONS:
        raise ValueError(f"unknown degree convention {degree_convention!r}")
    if not isinstance(n, int) or n < 0:
        raise VertexOutOfRange(n, n)
    out_adj: List[List[int]] = [[] for _ in range(n)]
    in_adj: List[List[int]] = [[] for _ in range(n)]
    seen = set()
    for e in edges:
        u, v = e
        for w in (u, v):
            if not (isinstance(w, int) and 0 <= w < n):
                raise VertexOutOfRange(w, n)
        if u == v:
            raise LoopEdge(u)
        if (u, v) in seen:
            raise DuplicateEdge(u, v)
        seen.add((u, v))
        out_adj[u].append(v)
        in_adj[v].append(u)
    if degree_convention == UNION:
        for u, v in sorted(seen):
            if u < v and (v, u) in seen:
                raise AntiParallelPair(u, v)
    for a in out_adj:
        a.sort()
    for a in in_adj:
        a.sort()
    return DirectedGraph(n, out_adj, in_adj, degree_convention)


def degree_triple(G: DirectedGraph, x: int) -> DegreeTriple:
    G.check_vertex(x)
    cached = G._degrees.get(x)
    if cached is not None:
        return cached
    d_in = len(G.in_adj[x])
    d_out = len(G.out_adj[x])
    if G.degree_convention == SPLIT:
        d = d_in + d_out
    else:
        d = len(G.in_set(x) | G.out_set(x))
    triple = DegreeTriple(d, d_in, d_out)
    G._degrees[x] = triple
    return triple


def shortest_distances(G: DirectedGraph, source: int) -> Tuple[float, ...]:
    """BFS hop counts from ``source`` along edge directions; unreachable is ``inf``."""
    G.check_vertex(source)
    row = G._dist_rows.get(source)
    if row is not None:
        return row
    dist: List[float] = [INF] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in G.out_adj[u]:
            if dist[v] == INF:
                dist[v] = dist[u] + 1
                queue.append(v)
    row = tuple(dist)
    with G._lock:
        G._dist_rows.setdefault(source, row)
    return G._dist_rows[source]


def _reaches_all(adj, n: int) -> bool:
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == n


def is_strongly_connected(G: DirectedGraph) -> bool:
    """True iff vertex 0 reaches everything and everything reaches vertex 0."""
    if G.n <= 1:
        return True
    return _reaches_all(G.out_adj, G.n) and _reaches_all(G.in_adj, G.n)


@dataclass(frozen=True)
class GammaDecomposition:
    """Out-neighbours of ``y`` sorted by their distance from ``x``.

    ``buckets[k]`` holds the ``v`` with ``d(x, v) = d(x, y) - k`` and ``plus``
    those with ``d(x, v) = d(x, y) + 1``.
    """

    x: int
    y: int
    distance: int
    buckets: Dict[int, FrozenSet[int]]
    plus: FrozenSet[int]

    def weighted_count(self) -> int:
        """``sum_k k |bucket k| - |plus|`` over ``k = 1 .. d(x, y)``."""
        return sum(k * len(vs) for k, vs in self.buckets.items()) - len(self.plus)


def gamma_decomposition(G: DirectedGraph, x: int, y: int) -> GammaDecomposition:
    G.check_vertex(x)
    G.check_vertex(y)
    if x == y:
        raise SameVertex(x)
    from_x = shortest_distances(G, x)
    dxy = from_x[y]
    if dxy == INF:
        raise InfiniteDistance(x, y)
    dxy = int(dxy)
    buckets: Dict[int, set] = {k: set() for k in range(dxy + 1)}
    plus = set()
    for v in G.out_adj[y]:
        dv = from_x[v]
        if dv == dxy + 1:
            plus.add(v)
        else:
            # d(x, v) <= d(x, y) + 1 through y, so dv is finite here
            buckets[dxy - int(dv)].add(v)
    return GammaDecomposition(
        x, y, dxy, {k: frozenset(vs) for k, vs in buckets.items()}, frozenset(plus)
    )


def undefined_pairs(G: DirectedGraph, sources: Iterable[int], targets: Iterable[int]):
    """Pairs ``(u, v)`` from the two vertex sets with infinite distance."""
    targets = list(targets)
    bad = []
    for u in sources:
        row = shortest_distances(G, u)
        bad.extend((u, v) for v in targets if row[v] == INF)
    return bad


def format_distance(d: float) -> str:
    return "inf" if d == INF else str(int(d))


def distance_or_none(d: float) -> Optional[int]:
    return None if d == INF else int(d)
