"""The non-Archimedean upper half plane over the Puiseux series field.

Two independent routes to the pseudo-distance live here:

* :func:`hp_distance` -- the closed max-of-logs formula, exact;
* :func:`cross_ratio_log` -- ``log`` of the cross-ratio of the two points
  with the endpoints of the line through them, evaluated in ``F[i]`` with
  truncated inverses and square roots.  Used only as an oracle.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import Indeterminate, NonRealCrossRatio, SamePoint
from .series import (
    DEFAULT_WINDOW,
    NEG_INF,
    ONE,
    ZERO,
    PuiseuxSeries,
    cmp,
    invert,
    log_abs,
    mul,
    sqrt,
    sub,
)

__all__ = [
    "HPoint",
    "FComplex",
    "Vertical",
    "Circle",
    "hp_distance",
    "fline_through",
    "cadd",
    "csub",
    "cmul",
    "cdiv",
    "cross_ratio",
    "cross_ratio_log",
]


@dataclass(frozen=True)
class HPoint:
    """``x + i y`` with exact ``x`` and exact ``y > 0``."""

    x: PuiseuxSeries
    y: PuiseuxSeries

    def __post_init__(self):
        if not (self.x.is_exact and self.y.is_exact):
            raise ValueError("point coordinates must be exact series")
        if cmp(self.y, ZERO) <= 0:
            raise ValueError("imaginary part y must be positive")

    def to_text(self):
        from .textio import format_point

        return format_point(self)


@dataclass(frozen=True)
class FComplex:
    re: PuiseuxSeries
    im: PuiseuxSeries = ZERO

    @classmethod
    def from_point(cls, z):
        return cls(z.x, z.y)


@dataclass(frozen=True)
class Vertical:
    foot: PuiseuxSeries


@dataclass(frozen=True)
class Circle:
    center: PuiseuxSeries
    radius: PuiseuxSeries
    w: PuiseuxSeries
    w_prime: PuiseuxSeries


def _log_sq_ratio(dx, y, y2):
    lx = log_abs(dx)
    if lx == NEG_INF:
        return NEG_INF
    return 2 * lx - log_abs(y) - log_abs(y2)


def hp_distance(z, z2):
    """``max(log((x-x')^2/(y y')), |log y - log y'|)`` as an exact Fraction."""
    ly, ly2 = log_abs(z.y), log_abs(z2.y)
    vertical = abs(ly - ly2)
    horizontal = _log_sq_ratio(sub(z.x, z2.x), z.y, z2.y)
    return max(vertical, horizontal)


def fline_through(z, z2, window=DEFAULT_WINDOW):
    """The vertical ray or half-circle through two distinct points."""
    if z.x == z2.x:
        if z.y == z2.y:
            raise SamePoint("the two points coincide")
        return Vertical(z.x)
    dx = sub(z.x, z2.x)
    numerator = z.x * z.x + z.y * z.y - z2.x * z2.x - z2.y * z2.y
    center = mul(numerator, invert(dx * 2, window))
    rel = sub(z.x, center)
    radius = sqrt(rel * rel + z.y * z.y, window)
    return Circle(center, radius, sub(center, radius), center + radius)


def cadd(a, b):
    return FComplex(a.re + b.re, a.im + b.im)


def csub(a, b):
    return FComplex(sub(a.re, b.re), sub(a.im, b.im))


def cmul(a, b):
    return FComplex(sub(mul(a.re, b.re), mul(a.im, b.im)), mul(a.re, b.im) + mul(a.im, b.re))


def cdiv(a, b, window=DEFAULT_WINDOW):
    """``a / b`` via ``a * conj(b) / |b|^2``; the norm is inverted to ``window``."""
    if b.re.is_zero and b.im.is_zero:
        raise ZeroDivisionError("complex division by zero")
    norm = b.re * b.re + b.im * b.im
    inv = invert(norm, window)
    num = cmul(a, FComplex(b.re, -b.im))
    return FComplex(mul(num.re, inv), mul(num.im, inv))


def _ordered(z, z2, line):
    # w, z, z', w' must appear in this order along the line
    if isinstance(line, Vertical):
        return (z, z2) if cmp(z.y, z2.y) <= 0 else (z2, z)
    return (z, z2) if cmp(z.x, z2.x) < 0 else (z2, z)


def cross_ratio(z, z2, window=DEFAULT_WINDOW):
    """``CR(w, z, z', w') = ((z'-w)(z-w')) / ((z-w)(z'-w'))`` in ``F[i]``.

    For a vertical line ``w'`` is at infinity and its two factors cancel.
    Returns ``(cr, line)``; the points are reordered along the line first.
    """
    line = fline_through(z, z2, window)
    lo, hi = _ordered(z, z2, line)
    p, q = FComplex.from_point(lo), FComplex.from_point(hi)
    if isinstance(line, Vertical):
        w = FComplex(line.foot)
        return cdiv(csub(q, w), csub(p, w), window), line
    w, w2 = FComplex(line.w), FComplex(line.w_prime)
    num = cmul(csub(q, w), csub(p, w2))
    den = cmul(csub(p, w), csub(q, w2))
    return cdiv(num, den, window), line


MAX_WORK_FACTOR = 16


def cross_ratio_log(z, z2, window=DEFAULT_WINDOW):
    """``log CR(w, z, z', w')``: the pseudo-distance by the cross-ratio route.

    The imaginary part of the computed cross-ratio must sit more than
    ``window/2`` below the real part, else :class:`NonRealCrossRatio`.
    Endpoints far above both points cancel against the centre, so the
    series work is redone at doubled windows (up to ``MAX_WORK_FACTOR``
    times ``window``) while the outcome is :class:`Indeterminate`.
    """
    window = Fraction(window)
    work = window
    while True:
        try:
            return _cross_ratio_log_at(z, z2, window, work)
        except Indeterminate:
            if work >= MAX_WORK_FACTOR * window:
                raise
            work *= 2


def _cross_ratio_log_at(z, z2, window, work):
    cr, _ = cross_ratio(z, z2, work)
    val = log_abs(cr.re)
    limit = val - window / 2
    im = cr.im
    if im.terms:
        if im.terms[0][0] >= limit:
            raise NonRealCrossRatio(f"imaginary part at X^({im.terms[0][0]}) vs real part at X^({val})")
    elif im.precision is not None and im.precision >= limit:
        raise Indeterminate("imaginary part of the cross-ratio is not resolved by the window")
    lead_c = cr.re.terms[0][1]
    below_one = lead_c < 0 or val < 0 or (val == 0 and lead_c < 1)
    if val == 0 and lead_c == 1:
        try:
            below_one = cmp(cr.re, ONE) < 0
        except Indeterminate:
            pass  # 1 + O(...): consistent with CR >= 1
    if below_one:
        raise NonRealCrossRatio("cross-ratio below 1: endpoint convention violated")
    return val
