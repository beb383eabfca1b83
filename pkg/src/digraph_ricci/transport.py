"""Exact 1-Wasserstein distance under an asymmetric hop metric.

The solver is successive shortest paths on the bipartite support graph.
It only adds, subtracts and compares masses, so it runs unchanged over
:class:`~digraph_ricci.scalar.Infinitesimal` masses. Arc costs are integer
hop counts, which keeps node potentials and reduced costs integral.

Every solve returns a primal coupling and a 1-Lipschitz potential whose dual
objective equals the primal value; both are checked before returning.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Mapping, Tuple

from .errors import (
    InfiniteRequiredDistance,
    LipschitzViolation,
    MassMismatch,
    SupportTooLarge,
)
from .graph import DirectedGraph, shortest_distances
from .measure import SparseMeasure
from .scalar import Infinitesimal, Scalar, const_part, eps_part, format_scalar, smin

Metric = Callable[[int, int], float]

ORACLE_MAX_SUPPORT = 6


def as_metric(dist) -> Metric:
    """Accept a graph or a ``(u, v) -> distance`` callable."""
    if isinstance(dist, DirectedGraph):
        return dist.distance
    return dist


@dataclass(frozen=True)
class TransportResult:
    value: Scalar
    coupling: Dict[Tuple[int, int], Scalar]
    potential: Dict[int, Scalar]

    def describe(self) -> str:
        lines = [f"W = {format_scalar(self.value)}", "coupling:"]
        lines += [f"  {u} -> {v}: {format_scalar(m)}" for (u, v), m in sorted(self.coupling.items())]
        lines.append("potential:")
        lines += [f"  f({z}) = {format_scalar(f)}" for z, f in sorted(self.potential.items())]
        return "\n".join(lines)


def _check_inputs(mu: SparseMeasure, nu: SparseMeasure, d: Metric):
    if mu.total() != nu.total():
        raise MassMismatch(mu.total(), nu.total())
    cost = {}
    for u in mu:
        for v in nu:
            c = d(u, v)
            if c == math.inf:
                raise InfiniteRequiredDistance(u, v)
            cost[u, v] = int(c)
    return cost


def wasserstein(mu: SparseMeasure, nu: SparseMeasure, dist) -> TransportResult:
    """Optimal transport cost from ``mu`` to ``nu`` with costs ``d(u, v)``.

    Parameters
    ----------
    mu, nu : SparseMeasure
        Measures of equal total mass.
    dist : DirectedGraph or callable
        Hop metric; only ``d(u, v)`` for ``u`` in ``supp(mu)`` and ``v`` in
        ``supp(nu)`` must be finite.

    Returns
    -------
    TransportResult
        Value, an optimal coupling and a certifying potential ``f`` with
        ``f(u) - f(v) <= d(u, v)`` and ``sum f (mu - nu) == value``.
    """
    d = as_metric(dist)
    cost = _check_inputs(mu, nu, d)
    if mu == nu:
        coupling = {(z, z): m for z, m in mu.items()}
        return TransportResult(Fraction(0), coupling, {z: Fraction(0) for z in mu})

    left, right = mu.support, nu.support
    flow, pot_left, pot_right = _successive_shortest_paths(
        [mu[u] for u in left], [nu[v] for v in right],
        [[cost[u, v] for v in right] for u in left],
    )
    coupling = {}
    for i, u in enumerate(left):
        for j, v in enumerate(right):
            if flow[i][j] != 0:
                coupling[u, v] = flow[i][j]
    value = sum((m * cost[uv] for uv, m in coupling.items()), Fraction(0))

    # f = -potential on both sides is feasible on the bipartite arcs; its
    # c-transform extends it to a 1-Lipschitz function on the union.
    g = {v: -pot_right[j] for j, v in enumerate(right)}
    potential = _c_transform(g, sorted(set(left) | set(right)), d)
    base = potential[min(potential)]
    potential = {z: f - base for z, f in potential.items()}

    dual = lipschitz_objective(potential, mu, nu, d)
    if dual != value:
        raise AssertionError(f"dual certificate {dual} != primal value {value}")
    _check_marginals(coupling, mu, nu)
    return TransportResult(value, coupling, potential)


def _c_transform(g: Mapping[int, int], domain, d: Metric) -> Dict[int, int]:
    out = {}
    for z in domain:
        best = math.inf
        for v, gv in g.items():
            c = d(z, v)
            if c != math.inf and c + gv < best:
                best = c + gv
        out[z] = int(best)
    return out


def _check_marginals(coupling, mu, nu):
    rows: Dict[int, Scalar] = {}
    cols: Dict[int, Scalar] = {}
    for (u, v), m in coupling.items():
        if m < 0:
            raise AssertionError(f"negative flow {m} on ({u}, {v})")
        rows[u] = rows.get(u, 0) + m
        cols[v] = cols.get(v, 0) + m
    if SparseMeasure(rows) != mu or SparseMeasure(cols) != nu:
        raise AssertionError("coupling marginals do not reproduce the measures")


def _successive_shortest_paths(supply, demand, cost):
    """Min-cost transportation by successive shortest augmenting paths.

    Node ids: source 0, left ``1..m``, right ``m+1..m+n``, sink ``m+n+1``.
    Among equal-cost augmenting paths the lexicographically smallest node
    sequence is chosen, which makes the coupling deterministic.
    """
    m, n = len(supply), len(demand)
    S, T = 0, m + n + 1
    supply = list(supply)
    demand = list(demand)
    flow = [[Fraction(0)] * n for _ in range(m)]
    pot = [0] * (m + n + 2)

    def arcs(a):
        if a == S:
            for i in range(m):
                if supply[i] > 0:
                    yield 1 + i, 0
        elif a <= m:
            i = a - 1
            for j in range(n):
                yield 1 + m + j, cost[i][j]
        elif a < T:
            j = a - 1 - m
            for i in range(m):
                if flow[i][j] > 0:
                    yield 1 + i, -cost[i][j]
            if demand[j] > 0:
                yield T, 0

    remaining = sum(supply, Fraction(0))
    for _ in range(10_000):
        if remaining == 0:
            break
        dist = {S: 0}
        path = {S: (S,)}
        done = set()
        heap = [(0, (S,), S)]
        while heap:
            du, pu, u = heapq.heappop(heap)
            if u in done:
                continue
            done.add(u)
            for w, c in arcs(u):
                if w in done:
                    continue
                rc = c + pot[u] - pot[w]
                assert rc >= 0, "negative reduced cost"
                cand = (du + rc, pu + (w,))
                if w not in dist or cand < (dist[w], path[w]):
                    dist[w], path[w] = cand
                    heapq.heappush(heap, (cand[0], cand[1], w))
        if T not in dist:
            raise AssertionError("no augmenting path although supply remains")
        dT = dist[T]
        for a in range(T + 1):
            pot[a] += min(dist.get(a, dT), dT)

        nodes = path[T]
        delta = smin(supply[nodes[1] - 1], demand[nodes[-2] - 1 - m])
        for a, b in zip(nodes[1:-2], nodes[2:-1]):
            if a > m:  # backward arc right -> left cancels flow
                delta = smin(delta, flow[b - 1][a - 1 - m])
        supply[nodes[1] - 1] -= delta
        demand[nodes[-2] - 1 - m] -= delta
        for a, b in zip(nodes[1:-2], nodes[2:-1]):
            if a <= m:
                flow[a - 1][b - 1 - m] += delta
            else:
                flow[b - 1][a - 1 - m] -= delta
        remaining -= delta
    else:
        raise AssertionError("successive shortest paths did not terminate")
    return flow, pot[1 : m + 1], pot[m + 1 : m + n + 1]


def lipschitz_objective(f: Mapping[int, Scalar], mu, nu, dist) -> Scalar:
    """``sum_z f(z) (mu(z) - nu(z))`` for a 1-Lipschitz potential ``f``.

    ``f`` must be defined on both supports and satisfy
    ``f(u) - f(v) <= d(u, v)`` for every ordered pair of its keys; the first
    violated pair raises :class:`LipschitzViolation`. By weak duality the
    result never exceeds the transport cost.
    """
    d = as_metric(dist)
    missing = [z for z in list(mu) + list(nu) if z not in f]
    if missing:
        raise ValueError(f"potential undefined on support vertices {sorted(set(missing))}")
    keys = sorted(f)
    for u in keys:
        fu = f[u]
        if isinstance(dist, DirectedGraph):
            row = shortest_distances(dist, u)
            du = row.__getitem__
        else:
            du = lambda v, u=u: d(u, v)  # noqa: E731
        for v in keys:
            if u != v and fu - f[v] > du(v):
                raise LipschitzViolation(u, v, fu - f[v] - du(v))
    total = Fraction(0)
    for z in keys:
        diff = mu.get(z, 0) - nu.get(z, 0)
        if diff != 0:
            total = total + f[z] * diff
    return total


def oracle_wasserstein(mu: SparseMeasure, nu: SparseMeasure, dist) -> Scalar:
    """Brute-force transport cost over all tree-shaped basic solutions.

    Every vertex of the transportation polytope has a cycle-free support,
    which always has a leaf row or column whose single cell carries that
    row's (column's) entire remaining mass. Branching over every cell,
    shipping ``min(supply, demand)`` there and deleting the exhausted line
    therefore reaches every vertex; the recursion is memoized on the
    residual problem.

    Masses are first mapped to integers (see :func:`_integer_encoding`), so
    the search itself runs on plain ``int`` arithmetic.
    """
    if len(mu) > ORACLE_MAX_SUPPORT or len(nu) > ORACLE_MAX_SUPPORT:
        raise SupportTooLarge(
            f"oracle limited to supports of size <= {ORACLE_MAX_SUPPORT}, "
            f"got {len(mu)} and {len(nu)}"
        )
    d = as_metric(dist)
    cost = _check_inputs(mu, nu, d)
    encode, decode = _integer_encoding(list(mu.values()) + list(nu.values()), max(cost.values()))

    @lru_cache(maxsize=None)
    def best(rows, cols):
        if not rows:
            return 0
        result = None
        for ri, (u, a) in enumerate(rows):
            for ci, (v, b) in enumerate(cols):
                shipped = min(a, b)
                new_rows = rows[:ri] + rows[ri + 1 :] if a == shipped else _replace(rows, ri, a - shipped)
                new_cols = cols[:ci] + cols[ci + 1 :] if b == shipped else _replace(cols, ci, b - shipped)
                candidate = shipped * cost[u, v] + best(new_rows, new_cols)
                if result is None or candidate < result:
                    result = candidate
        return result

    rows = tuple((u, encode(m)) for u, m in mu.items())
    cols = tuple((v, encode(m)) for v, m in nu.items())
    return decode(best(rows, cols))


def _integer_encoding(masses, max_cost):
    """Order- and sum-preserving map from the masses' scalars into ``int``.

    With ``L`` a common denominator, ``a + b e`` becomes ``(a L) K + b L``,
    where ``K`` exceeds twice any ``e``-coefficient a transport cost built
    from these masses can reach. On that range the map is an injective
    homomorphism of ordered groups, so the search result decodes exactly.
    """
    eps_used = any(isinstance(m, Infinitesimal) for m in masses)
    parts = [(const_part(m), eps_part(m)) for m in masses]
    L = 1
    for a, b in parts:
        L = math.lcm(L, a.denominator, b.denominator)
    bound = sum(abs(b) * L for _, b in parts) * (max_cost + 1)
    K = 2 * int(bound) + 1

    def encode(m):
        return int(const_part(m) * L) * K + int(eps_part(m) * L)

    def decode(value):
        b = (value + K // 2) % K - K // 2
        a = (value - b) // K
        if eps_used:
            return Infinitesimal(Fraction(a, L), Fraction(b, L))
        return Fraction(a, L)

    return encode, decode


def _replace(line, idx, amount):
    return line[:idx] + ((line[idx][0], amount),) + line[idx + 1 :]
