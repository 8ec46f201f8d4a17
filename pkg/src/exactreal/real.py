"""Real numbers as approximation oracles.

A :class:`Real` answers ``approx(eps)`` with an open rational interval of
radius at most ``eps`` that contains the number.  All answers ever given by
one Real pairwise intersect; the Real enforces that at runtime, so a broken
oracle fails loudly instead of producing a wrong enclosure.

Order and sign are only semi-decidable, so every procedure that needs them
takes a :class:`Budget` and reports honestly when the budget runs out.
"""

from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional

from .errors import InvariantViolation, NotSeparated, SignUnknown
from .interval import (
    Interval,
    RationalLike,
    as_rational,
    iv_intersection,
    iv_lt_forall,
    iv_mul,
    iv_neg,
    iv_recip,
    iv_sum,
)

Oracle = Callable[[Fraction], Interval]


def dyadic_floor(x: Fraction) -> Fraction:
    """Largest power of two not exceeding ``x`` (``x > 0``).

    Child precisions are rounded down to powers of two: the request only
    gets stricter, and the cached answers are reused far more often.
    """
    n = x.numerator.bit_length() - x.denominator.bit_length()
    p = Fraction(2) ** n
    if p > x:
        p /= 2
    elif 2 * p <= x:
        p *= 2
    return p


@dataclass(frozen=True)
class Budget:
    """Refinement limit for semi-decidable procedures.

    ``min_epsilon`` is the finest precision that will be tried, ``max_steps``
    the number of precisions tried; whichever is hit first stops the search.
    """

    min_epsilon: Optional[Fraction] = None
    max_steps: Optional[int] = None

    def __post_init__(self):
        if self.min_epsilon is None and self.max_steps is None:
            object.__setattr__(self, "min_epsilon", Fraction(1, 10**40))
        if self.min_epsilon is not None:
            object.__setattr__(self, "min_epsilon", as_rational(self.min_epsilon))
            if self.min_epsilon <= 0:
                raise ValueError("min_epsilon must be positive")
        if self.max_steps is not None and self.max_steps < 1:
            raise ValueError("max_steps must be at least 1")

    def schedule(self, start: RationalLike = 1) -> Iterator[Fraction]:
        """Halve from ``start``; the last precision yielded is the floor itself."""
        eps = as_rational(start)
        floor = self.min_epsilon
        steps = 0
        while True:
            last = floor is not None and eps <= floor
            if last:
                eps = floor
            yield eps
            steps += 1
            if last or (self.max_steps is not None and steps >= self.max_steps):
                return
            eps /= 2


DEFAULT_BUDGET = Budget(min_epsilon=Fraction(1, 10**40))


def _budget(budget: Optional[Budget]) -> Budget:
    return DEFAULT_BUDGET if budget is None else budget


class Real:
    """A real number, given by an approximation oracle.

    ``oracle(eps)`` must return an Interval of radius ``<= eps`` containing
    the number.  The tightest known enclosure is cached and reused.
    """

    def __init__(self, oracle: Oracle, name: Optional[str] = None):
        self._oracle = oracle
        self._cache: Optional[Interval] = None
        self._lock = threading.Lock()
        self.name = name

    def __repr__(self):
        return f"Real({self.name})" if self.name else f"Real(<oracle {id(self):#x}>)"

    @property
    def cached(self) -> Optional[Interval]:
        return self._cache

    def approx(self, eps: RationalLike) -> Interval:
        eps = as_rational(eps)
        if eps <= 0:
            raise ValueError(f"precision must be positive, got {eps}")
        cached = self._cache
        if cached is not None and cached.radius <= eps:
            return cached
        answer = self._oracle(eps)
        if answer.radius > eps:
            raise InvariantViolation(
                f"{self!r}: radius {answer.radius} exceeds requested {eps}"
            )
        with self._lock:
            cached = self._cache
            if cached is None or (cached.lo <= answer.lo and answer.hi <= cached.hi):
                self._cache = answer
            else:
                both = iv_intersection(cached, answer)
                if both is None:
                    raise InvariantViolation(
                        f"{self!r}: answer {answer} is disjoint from earlier {cached}"
                    )
                self._cache = both
        return answer

    # Arithmetic sugar; division uses the default budget.
    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return neg(self)

    def __sub__(self, other):
        return sub(self, _coerce(other))

    def __rsub__(self, other):
        return sub(_coerce(other), self)

    def __mul__(self, other):
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return div(self, _coerce(other))

    def __rtruediv__(self, other):
        return div(_coerce(other), self)

    def __pow__(self, n: int):
        return power(self, n)


def _coerce(x) -> Real:
    return x if isinstance(x, Real) else embed(x)


def embed(q: RationalLike) -> Real:
    q = as_rational(q)
    return Real(lambda eps: Interval(q, eps), name=str(q))


def add(a: Real, b: Real) -> Real:
    def oracle(eps):
        return iv_sum(a.approx(eps / 2), b.approx(eps / 2))

    return Real(oracle, name=f"({a.name} + {b.name})")


def neg(a: Real) -> Real:
    return Real(lambda eps: iv_neg(a.approx(eps)), name=f"-{a.name}")


def sub(a: Real, b: Real) -> Real:
    return add(a, neg(b))


def bound(a: Real) -> Fraction:
    """A rational M > 0 with ``|x| < M`` on the precision-1 approximation."""
    i = a.approx(1)
    return abs(i.center) + i.radius + 1


def mul_precision(eps: Fraction, m: Fraction) -> Fraction:
    """Operand precision for a product whose operands are bounded by ``m``.

    With operand intervals inside ``(-(m - 1 + 2d), m - 1 + 2d)`` the product
    width is at most ``4d(m - 1 + 2d)``, which stays below ``2 eps`` here.
    """
    return (eps / 2) / (m + eps)


def mul(a: Real, b: Real) -> Real:
    m_box: list = []

    def oracle(eps):
        if not m_box:
            m_box.append(max(bound(a), bound(b)))
        delta = dyadic_floor(mul_precision(eps, m_box[0]))
        return iv_mul(a.approx(delta), b.approx(delta))

    return Real(oracle, name=f"({a.name} * {b.name})")


@dataclass(frozen=True)
class SignWitness:
    """``sign * a > 3 * eta`` is certified by the approximation ``interval``."""

    sign: int
    interval: Interval
    eta: Fraction


def sign_witness(a: Real, budget: Optional[Budget] = None) -> SignWitness:
    """Refine ``a`` until an approximation excludes 0, or raise SignUnknown."""
    for eps in _budget(budget).schedule():
        i = a.approx(eps)
        if i.lo > 0:
            return SignWitness(1, i, i.lo / 3)
        if i.hi < 0:
            return SignWitness(-1, i, -i.hi / 3)
    raise SignUnknown(f"could not separate {a!r} from 0 within budget")


def recip(a: Real, budget: Optional[Budget] = None) -> Real:
    w = sign_witness(a, budget)
    eta = w.eta

    def oracle(eps):
        # |a| > 3 eta, so a radius-delta approximation stays beyond eta and
        # its reciprocal has length at most 2 delta / eta^2 <= 2 eps.
        delta = dyadic_floor(min(eta, eta * eta * eps))
        return iv_recip(a.approx(delta))

    r = Real(oracle, name=f"1/{a.name}")
    r.sign_witness = w
    return r


def div(a: Real, b: Real, budget: Optional[Budget] = None) -> Real:
    return mul(a, recip(b, budget))


def power(a: Real, n: int, budget: Optional[Budget] = None) -> Real:
    if n < 0:
        return recip(power(a, -n), budget)
    result: Optional[Real] = None
    base = a
    while n:
        if n & 1:
            result = base if result is None else mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return embed(1) if result is None else result


class Verdict(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class Comparison:
    verdict: Verdict
    eps: Fraction
    gap_bound: Optional[Fraction] = None
    witness: Optional[tuple[Interval, Interval]] = None

    @property
    def resolved(self) -> bool:
        return self.verdict is not Verdict.INDETERMINATE


def compare(a: Real, b: Real, budget: Optional[Budget] = None) -> Comparison:
    """Budgeted trichotomy.

    Less/Greater are always correct.  Indeterminate means the numbers could
    not be told apart down to the last precision ``eps`` tried, which
    certifies ``|a - b| < 4 eps``.
    """
    eps = Fraction(1)
    for eps in _budget(budget).schedule():
        i, j = a.approx(eps), b.approx(eps)
        if iv_lt_forall(i, j):
            return Comparison(Verdict.LESS, eps, witness=(i, j))
        if iv_lt_forall(j, i):
            return Comparison(Verdict.GREATER, eps, witness=(i, j))
    return Comparison(Verdict.INDETERMINATE, eps, gap_bound=4 * eps)


def distance_bound(a: Real, b: Real, eps: RationalLike) -> Fraction:
    """A certified upper bound on ``|a - b|``; at most ``4 eps`` when a == b."""
    i, j = a.approx(eps), b.approx(eps)
    return abs(i.center - j.center) + i.radius + j.radius


class Membership(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


def member(q: RationalLike, eps: RationalLike, a: Real,
           budget: Optional[Budget] = None) -> Membership:
    """Decide whether the interval ``q ± eps`` belongs to ``a``, i.e. whether
    ``q - eps < a < q + eps``.  Exact boundary cases come back UNKNOWN."""
    q, eps = as_rational(q), as_rational(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    lower = compare(embed(q - eps), a, budget)
    if lower.verdict is Verdict.GREATER:
        return Membership.NO
    upper = compare(a, embed(q + eps), budget)
    if upper.verdict is Verdict.GREATER:
        return Membership.NO
    if lower.verdict is Verdict.LESS and upper.verdict is Verdict.LESS:
        return Membership.YES
    return Membership.UNKNOWN


def archimedean_bound(a: Real) -> int:
    i = a.approx(1)
    return math.floor(i.hi) + 1


def rational_between(a: Real, b: Real, budget: Optional[Budget] = None) -> Fraction:
    c = compare(a, b, budget)
    if c.verdict is not Verdict.LESS:
        raise NotSeparated(f"could not certify {a!r} < {b!r} ({c.verdict.value})")
    left, right = c.witness
    return (left.hi + right.lo) / 2


@dataclass(frozen=True)
class DecimalResult:
    text: str
    interval: Interval
    error_bound: Fraction
    certain: bool


def _format_scaled(n: int, digits: int) -> str:
    sign = "-" if n < 0 else ""
    whole, frac = divmod(abs(n), 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def decimal_expansion(a: Real, digits: int,
                      budget: Optional[Budget] = None) -> DecimalResult:
    """Round ``a`` to ``digits`` places with a certificate.

    The answer is the correctly rounded value once both endpoints of an
    approximation round alike.  If the budget runs out first (an exact tie,
    or a number too close to one) the midpoint is rounded instead and the
    result is flagged uncertain; ``|a - value| < error_bound <= 10**-digits``
    holds either way.
    """
    if digits < 0:
        raise ValueError("digits must be non-negative")
    if budget is None:
        budget = Budget(min_epsilon=Fraction(1, 10 ** (digits + 10)))
    scale = 10**digits
    eps = Fraction(1, 10 ** (digits + 2))
    floor, max_steps = budget.min_epsilon, budget.max_steps
    steps = 0
    while True:
        i = a.approx(eps)
        steps += 1
        lo, hi = round(i.lo * scale), round(i.hi * scale)
        if lo == hi:
            certain = True
            break
        if (floor is not None and eps <= floor) or (max_steps is not None and steps >= max_steps):
            certain = False
            break
        eps = max(eps / 2, floor) if floor is not None else eps / 2
    n = round(i.center * scale)
    text = _format_scaled(n, digits)
    error = abs(Fraction(n, scale) - i.center) + i.radius
    return DecimalResult(text if certain else text + "?", i, error, certain)


def to_decimal(a: Real, digits: int, budget: Optional[Budget] = None) -> str:
    return decimal_expansion(a, digits, budget).text
