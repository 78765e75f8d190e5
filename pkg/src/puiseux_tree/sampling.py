"""Seeded generators of random exact series, half-plane and tree points.

Exponents are drawn from a small lattice so that random pairs share leading
terms often enough to exercise cancellation and branching.
"""

import random
from fractions import Fraction

from .hplane import HPoint
from .series import make_series
from .tree import TreePoint

_COEFFS = [Fraction(c) for c in (1, -1, 2, -2, 3, -3)] + [Fraction(1, 2), Fraction(-1, 3), Fraction(5, 4)]
_POSITIVE = [Fraction(c) for c in (1, 2, 4)] + [Fraction(1, 4), Fraction(9, 4), Fraction(1, 3), Fraction(3)]
_LADDER = [Fraction(k, 2) for k in range(4, -7, -1)]


def make_rng(*key):
    """Deterministic RNG for a key such as ``(seed, n, probe)``."""
    return random.Random(":".join(str(k) for k in key))


def random_exponent(rng, denominators=(1, 2, 3, 4), span=8):
    d = rng.choice(denominators)
    return Fraction(rng.randint(-span * d, span * d), d)


def random_series(rng, max_terms=4, denominators=(1, 2, 3, 4), span=8, allow_zero=True):
    """Exact series with up to ``max_terms`` terms (never zero unless allowed)."""
    lo = 0 if allow_zero else 1
    n = rng.randint(lo, max_terms)
    pairs = [(random_exponent(rng, denominators, span), rng.choice(_COEFFS)) for _ in range(n)]
    s = make_series(pairs)
    if not allow_zero and s.is_zero:
        return make_series([(random_exponent(rng, denominators, span), 1)])
    return s


def random_positive_series(rng, max_terms=3, denominators=(1, 2, 3, 4), span=4):
    s = random_series(rng, max_terms, denominators, span, allow_zero=False)
    if s.terms[0][1] < 0:
        s = -s
    return s


def _ladder_series(rng, max_terms=3):
    k = rng.randint(0, max_terms)
    exps = rng.sample(_LADDER, k)
    return make_series([(e, rng.choice(_COEFFS)) for e in exps])


def random_hpoint(rng):
    """Point whose coordinates come from a shared exponent ladder."""
    x = _ladder_series(rng)
    h = rng.choice(_LADDER)
    pairs = [(h, rng.choice(_POSITIVE))]
    if rng.random() < 0.5:
        pairs.append((h - rng.choice((Fraction(1, 2), Fraction(1), Fraction(3, 2))), rng.choice(_COEFFS)))
    return HPoint(x, make_series(pairs))


def random_tree_point(rng):
    x = _ladder_series(rng)
    t = Fraction(rng.randint(-12, 8), 4)
    return TreePoint.canonical(x, t)
