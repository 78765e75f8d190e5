"""The Q-tree obtained from the half plane by identifying points at
pseudo-distance zero.

A class is stored canonically as ``(u, t)``: ``t = log y`` of any
representative and ``u`` its real part with every term at exponent ``<= t``
removed.  Two points ``x + iy``, ``x' + iy'`` are identified exactly when
``log y = log y'`` and ``log|x - x'| <= log y``, which is why the
truncation is strict.

Geodesics are up-then-down paths: climb the vertical ray of one endpoint to
the merge height, then descend the other.  Everything is exact; there are no
tolerances in this module.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import OutOfRange
from .series import NEG_INF, PuiseuxSeries, log_abs, sub, truncate_above

__all__ = [
    "TreePoint",
    "SegmentSpec",
    "project",
    "tree_distance",
    "merge_height",
    "param_point",
    "segment",
    "median",
    "gromov_product",
    "is_on_segment",
    "four_point_ok",
    "representative",
]


@dataclass(frozen=True)
class TreePoint:
    u: PuiseuxSeries
    t: Fraction

    def __post_init__(self):
        if not isinstance(self.t, Fraction):
            object.__setattr__(self, "t", Fraction(self.t))
        if not self.u.is_exact:
            raise ValueError("tree point needs an exact series")
        if self.u.terms and self.u.terms[-1][0] <= self.t:
            raise ValueError("u must be truncated strictly above t (use TreePoint.canonical)")

    @classmethod
    def canonical(cls, u, t):
        t = Fraction(t)
        return cls(truncate_above(u, t), t)

    def to_text(self):
        from .textio import format_tree_point

        return format_tree_point(self)


@dataclass(frozen=True)
class SegmentSpec:
    a: TreePoint
    b: TreePoint
    merge: Fraction

    @property
    def length(self):
        return (self.merge - self.a.t) + (self.merge - self.b.t)


def project(z):
    """Canonical class of a half-plane point."""
    t = log_abs(z.y)
    return TreePoint(truncate_above(z.x, t), t)


def representative(p):
    """The half-plane point ``u + i X^t`` of a tree point."""
    from .hplane import HPoint
    from .series import monomial

    return HPoint(p.u, monomial(p.t))


def _log_gap(p, q):
    return log_abs(sub(p.u, q.u))


def tree_distance(p, q):
    gap = _log_gap(p, q)
    vertical = abs(p.t - q.t)
    if gap == NEG_INF:
        return vertical
    return max(2 * gap - p.t - q.t, vertical)


def merge_height(p, q):
    """Lowest height where the vertical rays of ``p`` and ``q`` meet."""
    gap = _log_gap(p, q)
    h = max(p.t, q.t)
    return h if gap == NEG_INF else max(gap, h)


def segment(a, b):
    return SegmentSpec(a, b, merge_height(a, b))


def param_point(a, b, s):
    """Point at distance ``s`` from ``a`` on the geodesic ``[a, b]``."""
    s = Fraction(s)
    h = merge_height(a, b)
    up = h - a.t
    total = up + (h - b.t)
    if s < 0 or s > total:
        raise OutOfRange(f"parameter {s} outside [0, {total}]")
    if s <= up:
        return TreePoint.canonical(a.u, a.t + s)
    return TreePoint.canonical(b.u, h - (s - up))


def gromov_product(p, q, base):
    return (tree_distance(base, p) + tree_distance(base, q) - tree_distance(p, q)) / 2


def median(p1, p2, p3):
    """The unique point on all three geodesics between the arguments."""
    m = param_point(p1, p2, gromov_product(p2, p3, p1))
    # a tree metric forces all three Gromov equations
    if (tree_distance(p2, m) != gromov_product(p1, p3, p2)
            or tree_distance(p3, m) != gromov_product(p1, p2, p3)):
        raise RuntimeError("median fails the Gromov product equations")
    return m


def is_on_segment(p, a, b):
    return tree_distance(a, p) + tree_distance(p, b) == tree_distance(a, b)


def four_point_ok(p1, p2, p3, p4):
    """Four-point condition: the two largest pairing sums coincide."""
    d = tree_distance
    sums = sorted([d(p1, p2) + d(p3, p4), d(p1, p3) + d(p2, p4), d(p1, p4) + d(p2, p3)])
    return sums[1] == sums[2]
