"""Exact scalars: rationals and first-order infinitesimals.

Rationals are plain :class:`fractions.Fraction`. :class:`Infinitesimal`
represents ``const + eps * e`` where ``e`` is a positive infinitesimal, so
``e**2`` is truncated and ordering is lexicographic on ``(const, eps)``.
Evaluating a walk measure at ``alpha = 1 - e`` turns the limit ``alpha -> 1``
into a single exact computation.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Union

Scalar = Union[Fraction, int, "Infinitesimal"]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class Infinitesimal:
    """``const + eps * e`` with ``e > 0`` infinitesimal and ``e**2 = 0``."""

    __slots__ = ("const", "eps")

    def __init__(self, const=0, eps=0):
        self.const = _as_fraction(const)
        self.eps = _as_fraction(eps)

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, Infinitesimal):
            return other
        if isinstance(other, (int, Fraction)):
            return cls(other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Infinitesimal(self.const + o.const, self.eps + o.eps)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Infinitesimal(self.const - o.const, self.eps - o.eps)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return Infinitesimal(-self.const, -self.eps)

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Infinitesimal(self.const * o.const, self.const * o.eps + self.eps * o.const)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.const == 0:
            raise ZeroDivisionError("division by a value with zero leading coefficient")
        c = o.const
        return Infinitesimal(self.const / c, (self.eps * c - self.const * o.eps) / (c * c))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def _key(self):
        return (self.const, self.eps)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._key() == o._key()

    def __lt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._key() < o._key()

    def __le__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._key() <= o._key()

    def __gt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._key() > o._key()

    def __ge__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._key() >= o._key()

    def __hash__(self):
        # consistent with Fraction equality when the eps part vanishes
        if self.eps == 0:
            return hash(self.const)
        return hash((self.const, self.eps))

    def __bool__(self):
        return bool(self.const) or bool(self.eps)

    def __repr__(self):
        return f"Infinitesimal({self.const!s}, {self.eps!s})"

    def __str__(self):
        return format_scalar(self)


EPSILON = Infinitesimal(0, 1)
ONE_MINUS_EPSILON = Infinitesimal(1, -1)


def const_part(x: Scalar) -> Fraction:
    return x.const if isinstance(x, Infinitesimal) else Fraction(x)


def eps_part(x: Scalar) -> Fraction:
    return x.eps if isinstance(x, Infinitesimal) else Fraction(0)


def smin(a, b):
    return b if b < a else a


def format_rational(q) -> str:
    """Render as ``p/q`` (integers as ``p``)."""
    return str(Fraction(q))


def format_scalar(x: Scalar) -> str:
    """``p/q`` for rationals, ``p/q + r/s e`` for infinitesimals."""
    if not isinstance(x, Infinitesimal):
        return format_rational(x)
    if x.eps == 0:
        return format_rational(x.const)
    sign = "-" if x.eps < 0 else "+"
    return f"{format_rational(x.const)} {sign} {format_rational(abs(x.eps))} e"


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or ``p``; decimals and floats are rejected on purpose."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not an exact rational 'p/q': {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)
