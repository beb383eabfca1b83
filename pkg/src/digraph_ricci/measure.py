"""Lazy random-walk measures with exact masses."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterator, Mapping, Tuple

from .errors import AlphaOutOfRange, DegreeConventionViolated
from .graph import DirectedGraph, degree_triple
from .scalar import Scalar, format_scalar


class SparseMeasure(Mapping):
    """Finitely supported probability measure ``vertex -> mass``.

    Zero masses are dropped on construction, so ``len(m)`` is the support size.
    Iteration is in ascending vertex order.
    """

    __slots__ = ("_masses",)

    def __init__(self, masses: Mapping[int, Scalar]):
        self._masses: Dict[int, Scalar] = {
            v: m for v, m in sorted(masses.items()) if m != 0
        }
        for v, m in self._masses.items():
            if m < 0:
                raise ValueError(f"negative mass {m} at vertex {v}")

    def __getitem__(self, v):
        return self._masses[v]

    def get(self, v, default=0):
        return self._masses.get(v, default)

    def __iter__(self) -> Iterator[int]:
        return iter(self._masses)

    def __len__(self) -> int:
        return len(self._masses)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(self._masses)

    def total(self) -> Scalar:
        return sum(self._masses.values(), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, SparseMeasure):
            return self._masses == other._masses
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        body = ", ".join(f"{v}: {format_scalar(m)}" for v, m in self._masses.items())
        return f"SparseMeasure({{{body}}})"

    def format_lines(self) -> str:
        return "\n".join(f"{v}: {format_scalar(m)}" for v, m in self._masses.items())


def build_walk_measure(G: DirectedGraph, x: int, alpha: Scalar) -> SparseMeasure:
    """The alpha-lazy walk measure at ``x``.

    Keeps ``alpha + (1 - alpha) * d_in / d`` at ``x`` and puts ``(1 - alpha) / d``
    on every out-neighbour. ``alpha`` may be a Fraction or an
    :class:`~digraph_ricci.scalar.Infinitesimal` such as ``1 - e``.
    """
    G.check_vertex(x)
    if alpha < 0 or alpha > 1:
        raise AlphaOutOfRange(alpha)
    deg = degree_triple(G, x)
    if deg.d != deg.d_in + deg.d_out:
        raise DegreeConventionViolated(x)
    if deg.d == 0:
        return SparseMeasure({x: Fraction(1)})
    rest = (1 - alpha) / deg.d
    masses = {x: alpha + rest * deg.d_in}
    for v in G.out_adj[x]:
        masses[v] = rest
    m = SparseMeasure(masses)
    assert m.total() == 1, f"walk measure at {x} has total mass {m.total()}"
    return m
