"""Exact rationals and the algebra of open rational intervals.

An :class:`Interval` is the open set ``(center - radius, center + radius)``
with rational center and strictly positive rational radius.  Every operation
here is exact; nothing is rounded.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Optional, Union

from .errors import ContainsZero, NonPositiveEnlargement

RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^([+-]?)(\d+)(?:/(\d+)|\.(\d+))?$")


def as_rational(x: RationalLike) -> Fraction:
    """Coerce an int, Fraction or rational text to a Fraction.

    Floats are refused: they are rarely the value the caller meant.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``-7/3``, ``12`` or ``3.25`` (decimals are converted exactly)."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    sign, whole, den, frac = m.groups()
    if den is not None:
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        value = Fraction(int(whole), int(den))
    elif frac is not None:
        value = Fraction(int(whole + frac), 10 ** len(frac))
    else:
        value = Fraction(int(whole))
    return -value if sign == "-" else value


def format_rational(q: Fraction) -> str:
    """Canonical text: ``p/q`` in lowest terms, or ``p`` for integers."""
    return str(Fraction(q))


@dataclass(frozen=True)
class Interval:
    center: Fraction
    radius: Fraction

    def __post_init__(self):
        object.__setattr__(self, "center", as_rational(self.center))
        object.__setattr__(self, "radius", as_rational(self.radius))
        if self.radius <= 0:
            raise ValueError(f"interval radius must be positive, got {self.radius}")

    @classmethod
    def from_endpoints(cls, lo: RationalLike, hi: RationalLike) -> "Interval":
        lo, hi = as_rational(lo), as_rational(hi)
        if not lo < hi:
            raise ValueError(f"empty interval ({lo}, {hi})")
        return cls((lo + hi) / 2, (hi - lo) / 2)

    # endpoints are hit constantly by comparisons; compute them once
    @cached_property
    def lo(self) -> Fraction:
        return self.center - self.radius

    @cached_property
    def hi(self) -> Fraction:
        return self.center + self.radius

    @property
    def length(self) -> Fraction:
        return 2 * self.radius

    def __contains__(self, x) -> bool:
        x = as_rational(x)
        return self.lo < x < self.hi

    def __str__(self):
        return f"{format_rational(self.center)}±{format_rational(self.radius)}"

    def to_json(self) -> dict:
        return {"center": format_rational(self.center), "radius": format_rational(self.radius)}


def iv_sum(i: Interval, j: Interval) -> Interval:
    return Interval(i.center + j.center, i.radius + j.radius)


def iv_neg(i: Interval) -> Interval:
    return Interval(-i.center, i.radius)


def iv_mul(i: Interval, j: Interval) -> Interval:
    """Exact elementwise product: the hull of the four endpoint products."""
    products = (i.lo * j.lo, i.lo * j.hi, i.hi * j.lo, i.hi * j.hi)
    return Interval.from_endpoints(min(products), max(products))


def iv_recip(i: Interval) -> Interval:
    if not (i.lo > 0 or i.hi < 0):
        raise ContainsZero(f"cannot invert {i}: its closure contains 0")
    return Interval.from_endpoints(1 / i.hi, 1 / i.lo)


def iv_enlarge(i: Interval, e: RationalLike) -> Interval:
    e = as_rational(e)
    if e <= 0:
        raise NonPositiveEnlargement(f"enlargement must be positive, got {e}")
    return Interval(i.center, i.radius + e)


def iv_lt_forall(i: Interval, j: Interval) -> bool:
    """Every point of ``i`` lies below every point of ``j``."""
    return i.hi <= j.lo


def iv_le_exists(i: Interval, j: Interval) -> bool:
    """Some point of ``i`` is at most some point of ``j``."""
    return i.lo < j.hi


def iv_intersects(i: Interval, j: Interval) -> bool:
    return abs(i.center - j.center) < i.radius + j.radius


def iv_intersection(i: Interval, j: Interval) -> Optional[Interval]:
    """The overlap of two intervals, or None when they are disjoint."""
    if not iv_intersects(i, j):
        return None
    return Interval.from_endpoints(max(i.lo, j.lo), min(i.hi, j.hi))


def iv_subset(inner: Interval, outer: Interval) -> bool:
    """Closure-inclusive containment, so that ``p_{e/2}`` sits inside ``p_e``."""
    return outer.lo <= inner.lo and inner.hi <= outer.hi


def iv_deep_margin(inner: Interval, outer: Interval) -> Optional[Fraction]:
    """Smallest gap between the two pairs of endpoints if ``inner`` is deeply
    contained in ``outer``, else None."""
    margin = min(inner.lo - outer.lo, outer.hi - inner.hi)
    return margin if margin > 0 else None


def iv_deep_subset(inner: Interval, outer: Interval) -> bool:
    return iv_deep_margin(inner, outer) is not None


def iv_fifths(i: Interval) -> list[Interval]:
    """Split ``i`` into five equal open intervals, left to right."""
    r = i.radius / 5
    return [Interval(i.lo + (2 * k + 1) * r, r) for k in range(5)]
