"""Maximum bipartite matching (Hopcroft-Karp)."""

from __future__ import annotations

from collections import deque
from typing import Dict, Hashable, Mapping, Sequence

_INF = float("inf")


def maximum_matching(adj: Mapping[Hashable, Sequence[Hashable]]) -> Dict[Hashable, Hashable]:
    """Return a maximum matching as ``{left: right}``.

    ``adj`` maps each left vertex to its admissible right vertices. Left
    vertices are processed in iteration order, so equal inputs give equal
    matchings.
    """
    left = list(adj)
    match_l: Dict = {}
    match_r: Dict = {}
    dist: Dict = {}

    def bfs() -> bool:
        queue = deque()
        for u in left:
            if u in match_l:
                dist[u] = _INF
            else:
                dist[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = match_r.get(v)
                if w is None:
                    found = True
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u) -> bool:
        for v in adj[u]:
            w = match_r.get(v)
            if w is None or (dist[w] == dist[u] + 1 and dfs(w)):
                match_l[u] = v
                match_r[v] = u
                return True
        dist[u] = _INF
        return False

    while bfs():
        for u in left:
            if u not in match_l:
                dfs(u)
    return match_l
