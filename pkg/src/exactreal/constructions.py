"""Concrete reals and the constructions built on top of the oracle model:
square roots, e, the Liouville constant, diagonalization against a sequence,
and suprema of finite families."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .errors import BudgetExhausted, DeskScaleExceeded, InvariantViolation, SignUnknown
from .interval import Interval, RationalLike, as_rational, iv_fifths, iv_intersects
from .real import Budget, Real, Verdict, bound, compare, dyadic_floor, embed


def sqrt_bracket(x: Fraction, top: Fraction, tol: Fraction) -> tuple[Fraction, Fraction]:
    """Bisect ``[0, top]`` until ``lo**2 <= x < hi**2`` with ``hi - lo <= tol``."""
    lo, hi = Fraction(0), top
    if hi * hi <= x:
        raise ValueError(f"bracket top {top} is below sqrt({x})")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if mid * mid <= x:
            lo = mid
        else:
            hi = mid
    return lo, hi


def sqrt_pos(a: Real, budget: Optional[Budget] = None) -> Real:
    """Square root of a real that can be certified positive within ``budget``."""
    c = compare(embed(0), a, budget)
    if c.verdict is Verdict.GREATER:
        raise SignUnknown(f"square root of negative {a!r}")
    if c.verdict is not Verdict.LESS:
        raise SignUnknown(f"could not certify {a!r} > 0 within budget")
    floor = c.witness[1].lo  # a > floor > 0
    m = bound(a)
    # sqrt(floor) >= min(floor, 1), so sqrt is (1/slope)-Lipschitz above floor
    slope = min(floor, 1)

    def oracle(eps):
        i = a.approx(dyadic_floor(min(eps * slope, floor)))
        lo, hi = max(i.lo, floor), i.hi
        top = max(m, hi) + 1
        left, _ = sqrt_bracket(lo, top, eps / 2)
        _, right = sqrt_bracket(hi, top, eps / 2)
        return Interval.from_endpoints(left, right)

    return Real(oracle, name=f"sqrt({a.name})")


def liouville_partial(n: int, start: int = 0) -> Fraction:
    """Exact partial sum ``sum(10**-(k!) for k in start..n)``."""
    return sum((Fraction(1, 10 ** math.factorial(k)) for k in range(start, n + 1)), Fraction(0))


def liouville_tail_bound(n: int) -> Fraction:
    """Strict upper bound on the tail after term ``n``."""
    return Fraction(2, 10 ** math.factorial(n + 1))


def liouville(start: int = 0) -> Real:
    """The Liouville constant ``sum(10**-(n!))``.

    The default ``start=0`` sums from n = 0, so the first two terms are both
    1/10 and the constant is 0.210001000...; ``start=1`` gives the usual
    0.110001000....
    """
    if start < 0:
        raise ValueError("start index must be non-negative")

    def oracle(eps):
        n = start
        while liouville_tail_bound(n) > eps:
            n += 1
        return Interval(liouville_partial(n, start), liouville_tail_bound(n))

    return Real(oracle, name="liouville" if start == 0 else f"liouville[{start}]")


@dataclass(frozen=True)
class LiouvilleReport:
    n: int
    p: int
    q: int
    gap: Fraction
    holds: bool

    def to_json(self) -> dict:
        return {"n": self.n, "p": str(self.p), "q": str(self.q), "holds": self.holds}


def liouville_check(n: int, max_n: int = 4, start: int = 0) -> LiouvilleReport:
    """Check ``|L - p/q| < 1/q**n`` for ``q = 10**(n!)`` with exact rationals.

    ``gap`` is ``1/q**n`` minus the tail bound; ``holds`` is ``gap > 0``.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if n > max_n:
        raise DeskScaleExceeded(f"n = {n} is above the cap {max_n}")
    q = 10 ** math.factorial(n)
    partial = liouville_partial(n, start)
    p = partial * q
    assert p.denominator == 1
    gap = Fraction(1, q**n) - liouville_tail_bound(n)
    return LiouvilleReport(n, int(p), q, gap, gap > 0)


def e_partial(n: int) -> Fraction:
    total, term = Fraction(0), Fraction(1)
    for k in range(n + 1):
        if k:
            term /= k
        total += term
    return total


def e_const() -> Real:
    def oracle(eps):
        n = 0
        while Fraction(2, math.factorial(n + 1)) > eps:
            n += 1
        return Interval(e_partial(n), Fraction(2, math.factorial(n + 1)))

    return Real(oracle, name="e")


@dataclass(frozen=True)
class DiagCertificate:
    index: int
    trap: Interval
    avoided: Interval

    def to_json(self) -> dict:
        return {"n": self.index, "trap": self.trap.to_json(), "avoided": self.avoided.to_json()}


class Diagonalization:
    """Nested traps ``I_0 ⊇ I_1 ⊇ ...`` with ``I_n`` disjoint from an
    approximation of ``seq(n)``; the traps converge to a real that differs
    from every term.  Traps are built lazily and shared between threads.
    """

    def __init__(self, seq: Callable[[int], Real], i0: Interval):
        self._seq = seq
        self._traps = [i0]
        self._certs: list[DiagCertificate] = []
        self._lock = threading.Lock()
        self.real = Real(self._oracle, name="diagonal")

    def _extend(self, n: int):
        while len(self._traps) <= n:
            with self._lock:
                k = len(self._traps)
                prev = self._traps[-1]
            avoided = self._seq(k).approx(prev.length / 10)
            for cand in iv_fifths(prev)[1:4]:
                if not iv_intersects(cand, avoided):
                    break
            else:
                raise InvariantViolation(f"{avoided} meets all middle fifths of {prev}")
            with self._lock:
                if len(self._traps) == k:
                    self._traps.append(cand)
                    self._certs.append(DiagCertificate(k, cand, avoided))

    def trap(self, n: int) -> Interval:
        self._extend(n)
        return self._traps[n]

    def certificate(self, n: int) -> DiagCertificate:
        if n < 1:
            raise IndexError("certificates start at index 1")
        self._extend(n)
        return self._certs[n - 1]

    __getitem__ = certificate

    def _oracle(self, eps):
        n, r = 0, self._traps[0].radius
        while r > eps:
            n, r = n + 1, r / 5
        return self.trap(n)


def diagonalize(seq: Callable[[int], Real], i0: Interval) -> tuple[Real, Diagonalization]:
    d = Diagonalization(seq, i0)
    return d.real, d


def sup_finite(reals: Sequence[Real]) -> Real:
    """Maximum of a finite nonempty family (max is 1-Lipschitz)."""
    reals = list(reals)
    if not reals:
        raise ValueError("sup_finite needs at least one real")

    def oracle(eps):
        return Interval(max(a.approx(eps).center for a in reals), eps)

    return Real(oracle, name=f"sup({', '.join(str(a.name) for a in reals)})")


def completeness_sift(reals: Sequence[Real], eps: RationalLike,
                      budget: Optional[Budget] = None) -> Interval:
    """One member ``p ± eps`` of the supremum of a finite family.

    Candidates are centers of ``eps/2``-approximations of each member; the
    first one whose upper end certifiably exceeds every member wins.
    """
    reals = list(reals)
    eps = as_rational(eps)
    if not reals:
        raise ValueError("completeness_sift needs at least one real")
    if eps <= 0:
        raise ValueError("eps must be positive")
    if budget is None:
        budget = Budget(min_epsilon=eps / 16)
    for a in reals:
        p = a.approx(eps / 2).center
        top = embed(p + eps)
        if all(compare(b, top, budget).verdict is Verdict.LESS for b in reals):
            return Interval(p, eps)
    raise BudgetExhausted("no candidate interval dominated the whole family within budget")
