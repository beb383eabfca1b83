"""Ricci curvature of directed graphs and the flatness conditions.

``alpha_ricci`` is the coarse curvature of the alpha-lazy walk. ``ricci`` is
the limit of ``alpha_ricci / (1 - alpha)`` as ``alpha -> 1``; it is computed
with one transport solve at ``alpha = 1 - e`` over infinitesimal scalars.
Near ``alpha = 1`` the transport cost is affine in ``1 - alpha``, so the
``e`` coefficient of the cost gives the limit exactly.
"""

from __future__ import annotations

import csv
import io
import json
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .errors import (
    AlphaOutOfRange,
    InfiniteDistance,
    LadderMismatch,
    LadderNotStabilized,
    NotStronglyConnected,
    SameVertex,
)
from .graph import DirectedGraph, degree_triple, gamma_decomposition, is_strongly_connected
from .matching import maximum_matching
from .measure import build_walk_measure
from .scalar import ONE_MINUS_EPSILON, Infinitesimal, format_rational
from .transport import TransportResult, wasserstein

LADDER_K_MIN = 3
LADDER_K_MAX = 24


def _pair_distance(G: DirectedGraph, x: int, y: int) -> int:
    G.check_vertex(x)
    G.check_vertex(y)
    if x == y:
        raise SameVertex(x)
    dxy = G.distance(x, y)
    if dxy == math.inf:
        raise InfiniteDistance(x, y)
    return int(dxy)


def transport_between(G: DirectedGraph, x: int, y: int, alpha) -> TransportResult:
    """Optimal transport between the walk measures of ``x`` and ``y``."""
    return wasserstein(build_walk_measure(G, x, alpha), build_walk_measure(G, y, alpha), G)


def alpha_ricci(G: DirectedGraph, x: int, y: int, alpha) -> Fraction:
    """``1 - W(m_x, m_y) / d(x, y)`` for the alpha-lazy walk measures."""
    alpha = Fraction(alpha)
    if not 0 <= alpha <= 1:
        raise AlphaOutOfRange(alpha)
    dxy = _pair_distance(G, x, y)
    return 1 - transport_between(G, x, y, alpha).value / dxy


def ricci(G: DirectedGraph, x: int, y: int) -> Fraction:
    """Exact limit curvature ``lim_{alpha -> 1} alpha_ricci / (1 - alpha)``."""
    dxy = _pair_distance(G, x, y)
    w = transport_between(G, x, y, ONE_MINUS_EPSILON).value
    if not isinstance(w, Infinitesimal):
        w = Infinitesimal(w, 0)
    # at e = 0 both measures are point masses
    assert w.const == dxy, f"W at alpha=1 is {w.const}, expected d(x, y) = {dxy}"
    return -w.eps / dxy


@dataclass
class LadderTrace:
    rungs: List[Tuple[int, Fraction, Fraction]] = field(default_factory=list)

    def __str__(self):
        return "\n".join(f"k={k} alpha={format_rational(a)} h={format_rational(h)}" for k, a, h in self.rungs)


def ricci_ladder(G: DirectedGraph, x: int, y: int, k_max: int = LADDER_K_MAX):
    """Cross-check ``ricci`` by evaluating ``h(a) = alpha_ricci / (1 - a)``.

    Rungs are ``a_k = 1 - 2**-k`` for ``k = 3, 4, ...``. ``h`` must be
    nondecreasing; the first value seen on two consecutive rungs is returned
    together with the trace, after checking it equals :func:`ricci`.

    Raises
    ------
    LadderNotStabilized
        No repeat up to ``k_max``.
    LadderMismatch
        ``h`` decreased, or the stabilized value disagrees with ``ricci``.
    """
    trace = LadderTrace()
    prev = None
    for k in range(LADDER_K_MIN, k_max + 1):
        a = 1 - Fraction(1, 2**k)
        h = alpha_ricci(G, x, y, a) / (1 - a)
        trace.rungs.append((k, a, h))
        if prev is not None:
            if h < prev:
                raise LadderMismatch(f"h decreased along the ladder for ({x}, {y}):\n{trace}")
            if h == prev:
                exact = ricci(G, x, y)
                if h != exact:
                    raise LadderMismatch(f"ladder stabilized at {h} but ricci({x}, {y}) = {exact}")
                return h, trace
        prev = h
    raise LadderNotStabilized(k_max, trace)


def ricci_upper_bound(G: DirectedGraph, x: int, y: int) -> Fraction:
    """Upper bound on ``ricci(x, y)`` from the test potential ``-d(x, .)``.

    With ``D = d(x, y)`` and the out-neighbours of ``y`` grouped by distance
    from ``x`` (``D - k`` for bucket ``k``, ``D + 1`` for ``plus``)::

        (sum_{k=1..D} k |bucket k| - |plus|) / (D d_y) + d_out(x) / (D d_x)

    The alpha-level bound is this value times ``1 - alpha``.
    """
    dxy = _pair_distance(G, x, y)
    gd = gamma_decomposition(G, x, y)
    dx, dy = degree_triple(G, x), degree_triple(G, y)
    braced = Fraction(gd.weighted_count(), dy.d) + Fraction(dx.d_out, dx.d)
    return braced / dxy


# -- whole-graph report --------------------------------------------------------


@dataclass(frozen=True)
class CurvatureReport:
    per_edge: Dict[Tuple[int, int], Fraction]

    @property
    def min(self) -> Optional[Fraction]:
        return min(self.per_edge.values(), default=None)

    @property
    def max(self) -> Optional[Fraction]:
        return max(self.per_edge.values(), default=None)

    @property
    def is_constant(self) -> bool:
        return self.min == self.max

    @property
    def constant_value(self) -> Optional[Fraction]:
        return self.min if self.is_constant else None

    @property
    def is_ricci_flat(self) -> bool:
        return all(k == 0 for k in self.per_edge.values())

    @property
    def values(self) -> set:
        return set(self.per_edge.values())

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["u", "v", "kappa_num", "kappa_den", "kappa_decimal"])
        for (u, v), k in self.per_edge.items():
            w.writerow([u, v, k.numerator, k.denominator, f"{float(k):.12g}"])
        return buf.getvalue()

    def to_dict(self) -> dict:
        fmt = lambda q: None if q is None else format_rational(q)  # noqa: E731
        return {
            "per_edge": [{"u": u, "v": v, "kappa": fmt(k)} for (u, v), k in self.per_edge.items()],
            "min": fmt(self.min),
            "max": fmt(self.max),
            "is_constant": self.is_constant,
            "constant_value": fmt(self.constant_value),
            "is_ricci_flat": self.is_ricci_flat,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_table(self) -> str:
        lines = [f"{u} -> {v}: {format_rational(k)}" for (u, v), k in self.per_edge.items()]
        lines.append(f"min: {format_rational(self.min) if self.min is not None else '-'}")
        lines.append(f"max: {format_rational(self.max) if self.max is not None else '-'}")
        lines.append(f"constant: {str(self.is_constant).lower()}")
        lines.append(f"ricci_flat: {str(self.is_ricci_flat).lower()}")
        return "\n".join(lines)


def curvature_report(G: DirectedGraph) -> CurvatureReport:
    """``ricci`` on every edge, in ascending edge order."""
    if not is_strongly_connected(G):
        raise NotStronglyConnected()
    return CurvatureReport({(u, v): ricci(G, u, v) for u, v in G.edges})


# -- flatness conditions --------------------------------------------------------

CONDITION_A = "A"
EQUAL_OUT_DEGREE = "EqualOutDegree"
MATCHING_PHI = "MatchingPhi"
CONDITION_B = "B"
CONDITIONS = (CONDITION_A, EQUAL_OUT_DEGREE, MATCHING_PHI, CONDITION_B)


@dataclass(frozen=True)
class ConditionVerdict:
    condition: str
    witnesses: Tuple[tuple, ...]

    @property
    def holds(self) -> bool:
        return not self.witnesses

    def to_dict(self) -> dict:
        return {
            "condition": self.condition,
            "holds": self.holds,
            "witnesses": [_jsonable(w) for w in self.witnesses],
        }


def _jsonable(obj):
    if isinstance(obj, (tuple, list, frozenset, set)):
        items = sorted(obj) if isinstance(obj, (frozenset, set)) else obj
        return [_jsonable(o) for o in items]
    return obj


def check_condition(G: DirectedGraph, which: str) -> ConditionVerdict:
    """Check one structural condition and collect violating tuples.

    ``A``
        Adjacent vertices share no out-neighbour. Witness ``(x, y, common)``.
    ``EqualOutDegree``
        All out-degrees agree. Witnesses ``(u, d_out)`` for vertices off the
        most common out-degree.
    ``MatchingPhi``
        Every edge ``(u, v)`` admits a bijection from ``out(u)`` to ``out(v)``
        moving each vertex along one edge. Witness: the edge.
    ``B``
        For adjacent edges ``(x, y), (y, z)`` with ``z != x``, the only
        out-neighbour of ``x`` that is an in-neighbour of ``z`` is ``y``.
        Witness ``(x, y, z, common)``.
    """
    if which == CONDITION_A:
        witnesses = [
            (x, y, tuple(sorted(G.out_set(x) & G.out_set(y))))
            for x, y in G.edges
            if G.out_set(x) & G.out_set(y)
        ]
    elif which == EQUAL_OUT_DEGREE:
        counts = Counter(len(a) for a in G.out_adj)
        witnesses = []
        if len(counts) > 1:
            mode = min(counts, key=lambda k: (-counts[k], k))
            witnesses = [(u, len(a)) for u, a in enumerate(G.out_adj) if len(a) != mode]
    elif which == MATCHING_PHI:
        _require_strong(G, which)
        witnesses = [(u, v) for u, v in G.edges if not _has_phi(G, u, v)]
    elif which == CONDITION_B:
        _require_strong(G, which)
        witnesses = []
        for x, y in G.edges:
            for z in G.out_adj[y]:
                if z == x:
                    continue
                common = G.out_set(x) & G.in_set(z)
                if common != {y}:
                    witnesses.append((x, y, z, tuple(sorted(common))))
    else:
        raise ValueError(f"unknown condition {which!r}; expected one of {CONDITIONS}")
    return ConditionVerdict(which, tuple(witnesses))


def _require_strong(G, which):
    if not is_strongly_connected(G):
        raise NotStronglyConnected(f"condition {which} needs a strongly connected graph")


def _has_phi(G: DirectedGraph, u: int, v: int) -> bool:
    src, dst = G.out_adj[u], G.out_adj[v]
    if len(src) != len(dst):
        return False
    adj = {a: [b for b in dst if G.has_edge(a, b)] for a in src}
    return len(maximum_matching(adj)) == len(src)


def find_phi(G: DirectedGraph, u: int, v: int) -> Optional[Dict[int, int]]:
    """A bijection ``out(u) -> out(v)`` along single edges, if one exists."""
    src, dst = G.out_adj[u], G.out_adj[v]
    adj = {a: [b for b in dst if G.has_edge(a, b)] for a in src}
    m = maximum_matching(adj)
    if len(src) == len(dst) == len(m):
        return dict(sorted(m.items()))
    return None


def is_regular(G: DirectedGraph) -> bool:
    return len({degree_triple(G, x).d for x in range(G.n)}) <= 1
