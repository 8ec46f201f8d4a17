"""Acceptance criteria 1-10.

Each test prints one ``criterion N: PASS|FAIL`` line as it runs, and the
same lines are repeated in a summary section at the end of the session.
"""

import itertools
import json
import math
import random
import subprocess
import sys
from fractions import Fraction as F
from pathlib import Path

import pytest

from exactreal.constructions import (
    completeness_sift,
    diagonalize,
    e_const,
    e_partial,
    liouville,
    liouville_check,
    sqrt_pos,
    sup_finite,
)
from exactreal.interval import Interval, iv_intersects
from exactreal.real import (
    Budget,
    Membership,
    Verdict,
    add,
    compare,
    distance_bound,
    embed,
    member,
    mul,
    neg,
    rational_between,
    recip,
    to_decimal,
)
from exactreal.sequences import ConvergenceVerdict, RealSequence, check_convergence, real_of_cauchy

import conftest
from helpers import SIGN_BUDGET, random_real
from oracles import decimal_value, e_enclosure, liouville_enclosure, sqrt_enclosure


@pytest.fixture
def report(capsys):
    def emit(n, title, failures, detail=""):
        status = "PASS" if not failures else "FAIL"
        line = f"criterion {n}: {status} {title}"
        if detail:
            line += f" ({detail})"
        if failures:
            line += f"; first failure: {failures[0]}"
        conftest.ACCEPTANCE_LINES.append(line)
        with capsys.disabled():
            print("\n" + line)
        assert not failures, line

    return emit


def log_spaced(lo_exp, hi_exp, count):
    """``count`` rationals 10**k with k evenly spaced in [lo_exp, hi_exp]."""
    out = []
    for j in range(count):
        k = F(lo_exp) + (F(hi_exp) - lo_exp) * F(j, count - 1)
        whole = math.floor(k)
        # 10**frac approximated from below by a short rational; stays in range
        frac = F(round(10 ** float(k - whole) * 1000), 1000)
        out.append(min(F(10) ** whole * frac, F(10) ** hi_exp))
    return out


# -- 1 ----------------------------------------------------------------------

def test_criterion_1_oracle_consistency(report):
    rng = random.Random(101)
    epsilons = log_spaced(-30, 0, 10)
    assert epsilons[0] <= F(1, 10**29) and epsilons[-1] == 1
    failures = []
    for k in range(1000):
        a, value = random_real(rng, 5, rational_only=True)
        answers = []
        for eps in rng.sample(epsilons, len(epsilons)):
            i = a.approx(eps)
            if i.radius > eps:
                failures.append(f"real {k}: radius {i.radius} > {eps}")
            if value is not None and not i.lo <= value <= i.hi:
                failures.append(f"real {k}: exact value outside {i}")
            answers.append(i)
        if not all(iv_intersects(x, y) for x, y in itertools.combinations(answers, 2)):
            failures.append(f"real {k}: answers not pairwise intersecting")
    report(1, "oracle consistency, 1000 reals x 10 precisions", failures)


# -- 2 ----------------------------------------------------------------------

def test_criterion_2_field_axioms(report):
    rng = random.Random(202)
    eps = F(1, 10**30)
    zero, one = embed(0), embed(1)
    failures = []
    monotone_checked = 0
    for k in range(200):
        a, b, c = (random_real(rng, 2)[0] for _ in range(3))
        identities = {
            "add assoc": (add(a, add(b, c)), add(add(a, b), c)),
            "add comm": (add(a, b), add(b, a)),
            "mul assoc": (mul(a, mul(b, c)), mul(mul(a, b), c)),
            "mul comm": (mul(a, b), mul(b, a)),
            "distributive": (mul(a, add(b, c)), add(mul(a, b), mul(a, c))),
            "add neutral": (add(a, zero), a),
            "mul neutral": (mul(a, one), a),
            "add inverse": (add(a, neg(a)), zero),
        }
        if compare(zero, a, SIGN_BUDGET).resolved:
            identities["mul inverse"] = (mul(a, recip(a, SIGN_BUDGET)), one)
        for name, (x, y) in identities.items():
            d = distance_bound(x, y, eps)
            if d > 4 * eps:
                failures.append(f"triple {k}: {name} distance {d}")
        lt = compare(a, b)
        if lt.verdict is Verdict.GREATER:
            a, b = b, a
        if lt.resolved:
            monotone_checked += 1
            if compare(add(a, c), add(b, c)).verdict is Verdict.GREATER:
                failures.append(f"triple {k}: a < b but a + c > b + c")
            if compare(zero, c).verdict is Verdict.LESS:
                if compare(mul(a, c), mul(b, c)).verdict is Verdict.GREATER:
                    failures.append(f"triple {k}: a < b, c > 0 but ac > bc")
    report(2, "field axioms and monotonicity, 200 triples", failures,
           f"{monotone_checked} ordered pairs")


# -- 3 ----------------------------------------------------------------------

def test_criterion_3_order_embedding_and_density(report):
    rng = random.Random(303)
    failures = []
    for k in range(500):
        den = rng.randint(1, 10**6)
        p = F(rng.randint(-10**8, 10**8), den)
        gap = F(rng.randint(10**3, 10**4), 10**3) / 10 ** rng.randint(0, 15)
        q = p + gap
        assert q - p >= F(1, 10**15)
        if compare(embed(p), embed(q)).verdict is not Verdict.LESS:
            failures.append(f"pair {k}: {p} < {q} not certified")
            continue
        r = rational_between(embed(p), embed(q))
        left, right = compare(embed(p), embed(r)), compare(embed(r), embed(q))
        if left.verdict is not Verdict.LESS or right.verdict is not Verdict.LESS:
            failures.append(f"pair {k}: flanks of {r} not certified")
    report(3, "order embedding and density, 500 rational pairs", failures)


# -- 4 ----------------------------------------------------------------------

def _sandwich_subject(rng):
    """A real together with an exact enclosure ``(lo, hi)`` of its value."""
    if rng.random() < 0.6:
        a, value = random_real(rng, 3, rational_only=True)
        return a, value, value
    x = rng.randint(2, 500)
    lo, hi = sqrt_enclosure(x, 45)
    return sqrt_pos(embed(x)), lo, hi


def test_criterion_4_membership_sandwich(report):
    rng = random.Random(404)
    failures = []
    tally = {Membership.YES: 0, Membership.NO: 0, Membership.UNKNOWN: 0}
    for k in range(200):
        a, lo, hi = _sandwich_subject(rng)
        eps = F(rng.randint(1, 1000), 10 ** rng.randint(1, 12))
        inside = rng.random() < 0.5
        # offset of q from the value, keeping at least eps/10 clear of q +- eps
        t = eps * F(rng.randint(0, 900), 1000) if inside else eps * F(rng.randint(1100, 5000), 1000)
        q = lo + (t if rng.random() < 0.5 else -t)
        # direct rational sandwich q - eps < value < q + eps on the enclosure
        if q - eps < lo and hi < q + eps:
            expected = Membership.YES
        elif hi <= q - eps or q + eps <= lo:
            expected = Membership.NO
        else:
            failures.append(f"case {k}: enclosure too coarse for the margin")
            continue
        got = member(q, eps, a)
        tally[got] += 1
        if got is not expected:
            failures.append(f"case {k}: member({q}, {eps}) = {got.value}, expected {expected.value}")
    # exact boundaries: q +- eps equal to a rational value
    for k in range(50):
        a, value = random_real(rng, 3, rational_only=True)
        eps = F(rng.randint(1, 100), rng.randint(1, 100))
        q = value + eps if rng.random() < 0.5 else value - eps
        got = member(q, eps, a, Budget(min_epsilon=F(1, 10**25)))
        tally[got] += 1
        if got is not Membership.UNKNOWN:
            failures.append(f"boundary {k}: member returned {got.value}")
    detail = ", ".join(f"{m.value}={n}" for m, n in tally.items())
    report(4, "membership sandwich, 200 cases + 50 boundaries", failures, detail)


# -- 5 ----------------------------------------------------------------------

def test_criterion_5_digit_oracles(report):
    failures = []
    cases = [
        ("sqrt(2)", sqrt_pos(embed(2)), 50, sqrt_enclosure(2, 70)),
        ("e", e_const(), 50, e_enclosure(80)),
        ("liouville", liouville(), 30, liouville_enclosure(5)),
    ]
    for name, real, digits, (lo, hi) in cases:
        text = to_decimal(real, digits)
        s = decimal_value(text)
        unit = F(1, 10**digits)
        if not (abs(s - lo) < unit and abs(s - hi) < unit):
            failures.append(f"{name}: {text} is not within 10^-{digits} of the oracle")
        if text.endswith("?") or len(text.split(".")[1]) != digits:
            failures.append(f"{name}: malformed {text!r}")
    report(5, "digit oracles for sqrt(2), e, Liouville", failures)


# -- 6 ----------------------------------------------------------------------

def test_criterion_6_liouville_inequality(report):
    failures = []
    for n in (1, 2, 3):
        r = liouville_check(n)
        if not r.holds:
            failures.append(f"n = {n}: library reports failure")
        # independent exact check: the whole tail fits under 1/q**n
        lo, hi = liouville_enclosure(n + 2)
        p_over_q = F(r.p, r.q)
        if r.q != 10 ** math.factorial(n) or not (hi - p_over_q < F(1, r.q**n) and lo > p_over_q):
            failures.append(f"n = {n}: oracle disagrees")
    report(6, "Liouville inequality for n = 1, 2, 3", failures)


# -- 7 ----------------------------------------------------------------------

def _diagonal_pool(rng):
    """Fifty reals, most of them inside I_0 = (-1, 1) so the traps have work to do."""
    pool = []
    for k in range(50):
        roll = k % 5
        if roll in (0, 1):
            den = rng.randint(1, 10**6)
            pool.append(embed(F(rng.randint(-den, den), den)))
        elif roll == 2:
            pool.append(sqrt_pos(embed(F(rng.randint(1, 99), 100))))
        elif roll == 3:
            pool.append(add(e_const(), embed(-rng.randint(2, 3))))
        else:
            pool.append(add(liouville(), embed(F(rng.randint(-4, 4), 10))))
    return pool


def test_criterion_7_diagonalization(report):
    rng = random.Random(707)
    pool = _diagonal_pool(rng)
    i0 = Interval(0, 1)
    real, certs = diagonalize(lambda n: pool[n - 1], i0)
    failures = []
    for n in range(1, 51):
        c = certs[n]
        if iv_intersects(c.trap, c.avoided):
            failures.append(f"n = {n}: trap meets avoided interval")
        if c.trap.length != i0.length / 5**n:
            failures.append(f"n = {n}: trap length {c.trap.length}")
        budget = Budget(min_epsilon=c.trap.length / 4)
        verdict = compare(real, pool[n - 1], budget).verdict
        if verdict is Verdict.INDETERMINATE:
            failures.append(f"n = {n}: comparison indeterminate at |I_n|/4")
    report(7, "diagonalization over a pool of 50 reals", failures)


# -- 8 ----------------------------------------------------------------------

def test_criterion_8_completeness(report):
    rng = random.Random(808)
    eps = F(1, 10**6)
    small = embed(F(1, 10**20))
    failures = []
    for k in range(100):
        family = []
        for _ in range(rng.randint(1, 6)):
            if rng.random() < 0.6:
                family.append(embed(F(rng.randint(-1000, 1000), rng.randint(1, 100))))
            else:
                family.append(sqrt_pos(embed(F(rng.randint(1, 1000), rng.randint(1, 100)))))
        sup = sup_finite(family)
        sift = completeness_sift(family, eps)
        if not iv_intersects(sift, sup.approx(eps)):
            failures.append(f"family {k}: sift {sift} misses sup")
        top = add(sup, small)
        if any(compare(a, top).verdict is Verdict.GREATER for a in family):
            failures.append(f"family {k}: a member exceeds sup + 10^-20")
    report(8, "completeness sift vs finite supremum, 100 families", failures)


# -- 9 ----------------------------------------------------------------------

def _factorial_modulus(eps):
    n = 1
    while F(2, math.factorial(n + 1)) > eps:
        n += 1
    return n


def test_criterion_9_convergence(report):
    failures = []
    one_over_n = RealSequence(lambda n: embed(F(1, n)))
    # the finest sample still resolvable by terms up to the horizon
    ev = check_convergence(one_over_n, embed(0), 1000, Budget(min_epsilon=F(1, 512)))
    if ev.verdict is not ConvergenceVerdict.CONVERGED:
        failures.append(f"1/n: {ev.verdict.value}")
    alternating = RealSequence(lambda n: embed((-1) ** n))
    ev = check_convergence(alternating, embed(0), 1000, Budget(min_epsilon=F(1, 512)))
    if ev.verdict is not ConvergenceVerdict.DIVERGED:
        failures.append(f"(-1)^n: {ev.verdict.value}")
    sums = RealSequence(lambda n: embed(e_partial(n)))
    budget = Budget(min_epsilon=F(1, 10**20))
    e = e_const()
    lim = real_of_cauchy(sums, _factorial_modulus)
    for name, cand in (("e", e), ("bridge limit", lim)):
        ev = check_convergence(sums, cand, 40, budget)
        if ev.verdict is not ConvergenceVerdict.CONVERGED:
            failures.append(f"factorial sums vs {name}: {ev.verdict.value}")
    eps = F(1, 10**20)
    if distance_bound(e, lim, eps) > 4 * eps:
        failures.append("two certified limits are not equal at 10^-20")
    report(9, "convergence evidence and uniqueness of limits", failures)


# -- 10 ---------------------------------------------------------------------

def test_criterion_10_cli_golden(report):
    golden = json.loads((Path(__file__).parent / "golden" / "cli.json").read_text(encoding="utf-8"))
    failures = []
    for case in golden:
        proc = subprocess.run([sys.executable, "-m", "exactreal", *case["argv"]],
                              capture_output=True, text=True, encoding="utf-8")
        if (proc.returncode, proc.stdout) != (case["exit"], case["stdout"]):
            failures.append(f"{' '.join(case['argv'])}: exit {proc.returncode}, {proc.stdout!r}")
    report(10, f"CLI golden outputs, {len(golden)} invocations", failures)
