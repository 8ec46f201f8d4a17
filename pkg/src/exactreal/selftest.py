"""Fast invariant suites behind ``exactreal selftest``.

These are smaller versions of the property checks in the test suite, meant
to be run on an installed copy without pytest.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from .constructions import diagonalize, e_const, liouville_check, sqrt_pos
from .errors import SignUnknown
from .expr import parse, random_expression, to_real
from .interval import Interval, iv_intersects, iv_lt_forall
from .real import (
    Budget,
    Verdict,
    compare,
    decimal_expansion,
    distance_bound,
    embed,
    recip,
)


def random_real(rng: random.Random, depth: int):
    while True:
        text = random_expression(rng, depth)
        try:
            return text, to_real(parse(text), Budget(min_epsilon=Fraction(1, 10**20)))
        except SignUnknown:
            continue


def check_consistency(rng, count=40) -> bool:
    for _ in range(count):
        _, a = random_real(rng, 4)
        answers = []
        for k in range(0, 31, 5):
            eps = Fraction(1, 10**k)
            i = a.approx(eps)
            if i.radius > eps:
                return False
            answers.append(i)
        if not all(iv_intersects(x, y) for x, y in itertools.combinations(answers, 2)):
            return False
    return True


def check_field_identities(rng, count=15) -> bool:
    eps = Fraction(1, 10**30)
    for _ in range(count):
        a, b, c = (random_real(rng, 2)[1] for _ in range(3))
        pairs = [
            (a + (b + c), (a + b) + c),
            (a * b, b * a),
            (a * (b * c), (a * b) * c),
            (a * (b + c), a * b + a * c),
            (a + (-a), embed(0)),
            (a * embed(0), embed(0)),
        ]
        try:
            pairs.append((a * recip(a, Budget(min_epsilon=Fraction(1, 10**20))), embed(1)))
        except SignUnknown:
            pass
        if any(distance_bound(x, y, eps) > 4 * eps for x, y in pairs):
            return False
    return True


def check_order_embedding(rng, count=50) -> bool:
    for _ in range(count):
        p = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        q = p + Fraction(rng.randint(1, 10**6), 10**15)
        if compare(embed(p), embed(q)).verdict is not Verdict.LESS:
            return False
        if compare(embed(q), embed(p)).verdict is not Verdict.GREATER:
            return False
    return True


def check_digits(digits=30) -> bool:
    scale = 10**digits
    res = decimal_expansion(sqrt_pos(embed(2)), digits)
    lo = Fraction(math.isqrt(2 * scale**2 * 100), scale * 10)
    hi = lo + Fraction(1, scale * 10)
    value = Fraction(res.text.rstrip("?"))
    if not max(abs(value - lo), abs(value - hi)) < Fraction(1, scale):
        return False
    res = decimal_expansion(e_const(), digits)
    return res.text.startswith("2.71828182845904523536028747135")


def check_liouville() -> bool:
    return all(liouville_check(n).holds for n in (1, 2, 3))


def check_diagonal(rng, count=12) -> bool:
    pool = [random_real(rng, 2)[1] for _ in range(count)]
    i0 = Interval(0, 1)
    real, certs = diagonalize(lambda n: pool[n - 1], i0)
    for n in range(1, count + 1):
        cert = certs[n]
        if iv_intersects(cert.trap, cert.avoided):
            return False
        if cert.trap.length != i0.length / 5**n:
            return False
        c = compare(real, pool[n - 1], Budget(min_epsilon=cert.trap.length / 4))
        if not c.resolved:
            return False
        left, right = c.witness
        if not (iv_lt_forall(left, right) or iv_lt_forall(right, left)):
            return False
    return True


SUITES = [
    ("oracle consistency", lambda rng: check_consistency(rng)),
    ("field identities", lambda rng: check_field_identities(rng)),
    ("order embedding", lambda rng: check_order_embedding(rng)),
    ("digit oracles", lambda rng: check_digits()),
    ("liouville inequality", lambda rng: check_liouville()),
    ("diagonalization", lambda rng: check_diagonal(rng)),
]


def run(seed: int = 0, out=print) -> bool:
    ok = True
    for name, suite in SUITES:
        passed = suite(random.Random(seed))
        ok &= passed
        out(f"{'PASS' if passed else 'FAIL'} {name}")
    return ok
