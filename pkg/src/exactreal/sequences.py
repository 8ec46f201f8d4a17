"""Sequences of reals: limits from a modulus of convergence, and
horizon-bounded evidence of convergence in the filter formulation
(every member interval of the limit eventually contains the terms)."""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .interval import RationalLike, as_rational, format_rational, iv_enlarge
from .real import DEFAULT_BUDGET, Budget, Membership, Real, member


class RealSequence:
    """``n -> Real`` for ``n >= 1``; terms are memoized so repeated queries
    share one Real (and its cache)."""

    def __init__(self, term: Callable[[int], Real], name: Optional[str] = None):
        self._term = term
        self._memo: dict[int, Real] = {}
        self._lock = threading.Lock()
        self.name = name

    def __call__(self, n: int) -> Real:
        if n < 1:
            raise IndexError("sequences are indexed from 1")
        with self._lock:
            hit = self._memo.get(n)
        if hit is None:
            hit = self._term(n)
            with self._lock:
                hit = self._memo.setdefault(n, hit)
        return hit

    term = __call__


def real_of_cauchy(seq: Callable[[int], Real], modulus: Callable[[Fraction], int]) -> Real:
    """The limit of ``seq``, given ``|a_n - a_k| <= eps`` for ``n, k >= modulus(eps)``.

    A wrong modulus is not detected here; it shows up later as a consistency
    violation on the returned Real.
    """

    def oracle(eps):
        half = eps / 2
        return iv_enlarge(seq(modulus(half)).approx(half), half)

    return Real(oracle, name=f"lim({getattr(seq, 'name', None) or 'seq'})")


class ConvergenceVerdict(enum.Enum):
    CONVERGED = "converged"
    DIVERGED = "diverged-at-budget"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class MemberCheck:
    """Membership scan for one sampled interval ``center ± radius`` of the
    candidate limit: terms ``first..last`` were all certified inside."""

    center: Fraction
    radius: Fraction
    first: Optional[int]
    last: int
    result: ConvergenceVerdict

    def to_json(self) -> dict:
        return {
            "center": format_rational(self.center),
            "radius": format_rational(self.radius),
            "from": self.first,
            "to": self.last,
            "result": self.result.value,
        }


@dataclass(frozen=True)
class ConvergenceEvidence:
    verdict: ConvergenceVerdict
    n0: Optional[int]
    checks: list[MemberCheck] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "n0": self.n0,
            "checks": [c.to_json() for c in self.checks],
        }


def _tail_start(seq, q, eps, horizon, compare_budget) -> tuple[Optional[int], Membership]:
    """Least n0 with every term in ``[n0, horizon]`` certified inside ``q ± eps``,
    together with the verdict at the horizon itself."""
    at_horizon = member(q, eps, seq(horizon), compare_budget)
    if at_horizon is not Membership.YES:
        return None, at_horizon
    n0 = horizon
    while n0 > 1 and member(q, eps, seq(n0 - 1), compare_budget) is Membership.YES:
        n0 -= 1
    return n0, at_horizon


def check_convergence(seq: Callable[[int], Real], b: Real, horizon: int,
                      budget: Optional[Budget] = None,
                      compare_budget: Optional[Budget] = None) -> ConvergenceEvidence:
    """Evidence that ``seq`` converges to ``b``, relative to ``horizon``.

    Member intervals of ``b`` are sampled at precisions 1, 1/2, ... down to
    the floor of ``budget``.  Each is scanned for a tail of terms inside it.
    ``compare_budget`` governs the individual membership decisions.

    DIVERGED needs a certified miss at the horizon for some sample; UNKNOWN
    means some sample was neither certified in nor out at the horizon.
    """
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    budget = DEFAULT_BUDGET if budget is None else budget
    compare_budget = DEFAULT_BUDGET if compare_budget is None else compare_budget
    checks = []
    for eps in budget.schedule():
        q = b.approx(eps).center
        n0, last = _tail_start(seq, q, eps, horizon, compare_budget)
        if n0 is not None:
            result = ConvergenceVerdict.CONVERGED
        elif last is Membership.NO:
            result = ConvergenceVerdict.DIVERGED
        else:
            result = ConvergenceVerdict.UNKNOWN
        checks.append(MemberCheck(q, eps, n0, horizon, result))
    results = {c.result for c in checks}
    if ConvergenceVerdict.DIVERGED in results:
        return ConvergenceEvidence(ConvergenceVerdict.DIVERGED, None, checks)
    if ConvergenceVerdict.UNKNOWN in results:
        return ConvergenceEvidence(ConvergenceVerdict.UNKNOWN, None, checks)
    return ConvergenceEvidence(ConvergenceVerdict.CONVERGED, max(c.first for c in checks), checks)


def hat_member(seq: Callable[[int], Real], q: RationalLike, eps: RationalLike,
               horizon: int, budget: Optional[Budget] = None) -> Membership:
    """Whether ``q ± eps`` eventually contains the terms, judged on ``1..horizon``:
    YES if a tail ending at the horizon is certified inside, NO if the term at
    the horizon is certified outside."""
    q, eps = as_rational(q), as_rational(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    n0, last = _tail_start(seq, q, eps, horizon, budget)
    if n0 is not None:
        return Membership.YES
    return last
