"""Random reals for property tests.

``random_real`` returns ``(real, value)`` where ``value`` is the exact
Fraction when the expression is rational and None otherwise.
"""

from fractions import Fraction as F

from exactreal.constructions import e_const, liouville, sqrt_pos
from exactreal.errors import SignUnknown
from exactreal.real import Budget, add, embed, mul, neg, recip, sub

SIGN_BUDGET = Budget(min_epsilon=F(1, 10**20))


def random_rational(rng, lo=-100, hi=100):
    den = rng.randint(1, 50)
    return F(rng.randint(lo * den, hi * den), den)


def random_leaf(rng, rational_only=False):
    roll = rng.random()
    if rational_only or roll < 0.7:
        q = random_rational(rng)
        return embed(q), q
    if roll < 0.9:
        return sqrt_pos(embed(F(rng.randint(1, 400), rng.randint(1, 20)))), None
    return (e_const(), None) if roll < 0.95 else (liouville(), None)


def random_real(rng, depth, rational_only=False):
    if depth <= 0 or rng.random() < 0.2:
        return random_leaf(rng, rational_only)
    op = rng.choice(["add", "sub", "neg", "mul", "mul", "div"])
    a, va = random_real(rng, depth - 1, rational_only)
    if op == "neg":
        return neg(a), None if va is None else -va
    b, vb = random_real(rng, depth - 1, rational_only)
    both = va is not None and vb is not None
    if op == "add":
        return add(a, b), va + vb if both else None
    if op == "sub":
        return sub(a, b), va - vb if both else None
    if op == "div" and vb != 0:
        try:
            return mul(a, recip(b, SIGN_BUDGET)), va / vb if both else None
        except SignUnknown:
            pass
    return mul(a, b), va * vb if both else None
