"""Exact arithmetic on real Puiseux series with rational coefficients.

A series is a finite sum ``c_1 X^e_1 + c_2 X^e_2 + ...`` with rational
exponents ``e_1 > e_2 > ...`` and nonzero rational coefficients.  ``X`` is
infinitely large, so a series is positive iff its leading coefficient is.

Most values are *exact* (finitely supported).  Inversion and square roots
generally are not; they return a *truncated* series carrying a precision
bound ``eps`` meaning "every term with exponent <= eps is unknown".  Such
bounds propagate through addition and multiplication, and any question that
cannot be decided from the known terms raises :class:`Indeterminate`.

``log_abs`` is the leading exponent.  ``-log_abs`` is a Q-valuation, and
``log_abs(0)`` is ``NEG_INF``.
"""

from fractions import Fraction
from math import ceil, floor, isqrt, lcm
from numbers import Rational

from . import kernels
from .errors import Indeterminate, NegativeInput, NonRationalSqrt

__all__ = [
    "NEG_INF",
    "DEFAULT_WINDOW",
    "PuiseuxSeries",
    "make_series",
    "monomial",
    "constant",
    "ZERO",
    "ONE",
    "X",
    "add",
    "neg",
    "sub",
    "mul",
    "log_abs",
    "cmp",
    "invert",
    "sqrt",
    "truncate_above",
]

NEG_INF = float("-inf")
DEFAULT_WINDOW = Fraction(32)


def _q(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {value!r}")


class PuiseuxSeries:
    """Immutable element of the field of real Puiseux series.

    ``terms`` is a tuple of ``(exponent, coefficient)`` Fraction pairs in
    strictly descending exponent order with no zero coefficients.
    ``precision`` is ``None`` for exact series.
    """

    __slots__ = ("_terms", "_precision", "_hash")

    def __init__(self, terms=(), precision=None):
        # trusted constructor: callers must pass canonical data
        self._terms = tuple(terms)
        self._precision = precision
        self._hash = None

    @property
    def terms(self):
        return self._terms

    @property
    def precision(self):
        return self._precision

    @property
    def is_exact(self):
        return self._precision is None

    @property
    def is_zero(self):
        """True only for the exact zero series."""
        return not self._terms and self._precision is None

    @property
    def leading(self):
        return self._terms[0] if self._terms else None

    def exponents(self):
        return [e for e, _ in self._terms]

    def denominator_lcm(self):
        """Least common denominator of the stored exponents (1 for zero)."""
        m = 1
        for e, _ in self._terms:
            m = lcm(m, e.denominator)
        return m

    def exact_part(self):
        """The known terms as an exact series (drops the precision bound)."""
        return PuiseuxSeries(self._terms)

    def coefficient(self, exponent):
        exponent = _q(exponent)
        if self._precision is not None and exponent <= self._precision:
            raise Indeterminate(f"coefficient at X^({exponent}) is below precision")
        for e, c in self._terms:
            if e == exponent:
                return c
            if e < exponent:
                break
        return Fraction(0)

    # arithmetic ------------------------------------------------------

    def __neg__(self):
        return neg(self)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return sub(self, other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return sub(other, self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # exact division only: by a scalar or an exact monomial
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.is_exact and len(other.terms) == 1:
            return mul(self, invert(other, DEFAULT_WINDOW))
        raise TypeError("division by a non-monomial series needs invert(b, window)")

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = ONE
        base = self
        while k:
            if k & 1:
                result = mul(result, base)
            base = mul(base, base)
            k >>= 1
        return result

    # order -----------------------------------------------------------

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return cmp(self, other) < 0

    def __le__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return cmp(self, other) <= 0

    def __gt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return cmp(self, other) > 0

    def __ge__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return cmp(self, other) >= 0

    # structural equality; use cmp() for order-theoretic equality
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms and self._precision == other._precision

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._terms, self._precision))
        return self._hash

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        from .textio import format_series

        return f"PuiseuxSeries({format_series(self)!r})"

    def __str__(self):
        from .textio import format_series

        return format_series(self)

    def __reduce__(self):
        return (PuiseuxSeries, (self._terms, self._precision))


def _coerce(value):
    if isinstance(value, PuiseuxSeries):
        return value
    if isinstance(value, (int, Rational)) and not isinstance(value, bool):
        return constant(value)
    return NotImplemented


def _canonical(acc, cutoff=None):
    items = [(e, c) for e, c in acc.items() if c and (cutoff is None or e > cutoff)]
    items.sort(reverse=True)
    return tuple(items)


def make_series(pairs, precision=None):
    """Build a series from ``(exponent, coefficient)`` pairs in any order.

    Duplicate exponents are summed, zero coefficients dropped.  With a
    ``precision`` bound, terms at or below it are discarded.
    """
    acc = {}
    for e, c in pairs:
        e = _q(e)
        acc[e] = acc.get(e, 0) + _q(c)
    if precision is not None:
        precision = _q(precision)
    return PuiseuxSeries(_canonical(acc, precision), precision)


def monomial(exponent, coefficient=1):
    return make_series([(exponent, coefficient)])


def constant(c):
    return make_series([(0, c)])


ZERO = PuiseuxSeries()
ONE = constant(1)
X = monomial(1)


def _max_prec(p, q):
    if p is None:
        return q
    if q is None:
        return p
    return max(p, q)


def add(a, b):
    precision = _max_prec(a.precision, b.precision)
    acc = dict(a.terms)
    for e, c in b.terms:
        acc[e] = acc.get(e, 0) + c
    return PuiseuxSeries(_canonical(acc, precision), precision)


def neg(a):
    return PuiseuxSeries(tuple((e, -c) for e, c in a.terms), a.precision)


def sub(a, b):
    return add(a, neg(b))


def _denominators(values):
    m = 1
    for v in values:
        m = lcm(m, v.denominator)
    return m


def _mul_terms(a_terms, b_terms, cutoff=None):
    """Cauchy product of two descending term lists, keeping exponents > cutoff.

    Exponents and coefficients are scaled to integers and handed to the
    active kernel (see :mod:`puiseux_tree.kernels`).
    """
    if not a_terms or not b_terms:
        return ()
    d = lcm(_denominators(e for e, _ in a_terms), _denominators(e for e, _ in b_terms))
    qa = _denominators(c for _, c in a_terms)
    qb = _denominators(c for _, c in b_terms)
    ae = [e.numerator * (d // e.denominator) for e, _ in a_terms]
    be = [e.numerator * (d // e.denominator) for e, _ in b_terms]
    ac = [c.numerator * (qa // c.denominator) for _, c in a_terms]
    bc = [c.numerator * (qb // c.denominator) for _, c in b_terms]
    cut = None if cutoff is None else floor(cutoff * d)
    exps, coefs = kernels.mul_int(ae, ac, be, bc, cut)
    q = qa * qb
    return tuple((Fraction(e, d), Fraction(c, q)) for e, c in zip(exps, coefs))


def _top(a):
    # upper bound on the leading exponent of a non-zero series
    return a.terms[0][0] if a.terms else a.precision


def mul(a, b):
    """Product; the precision bound is the coarsest error term
    ``top(a) + prec(b)`` / ``top(b) + prec(a)``."""
    if a.is_zero or b.is_zero:
        return ZERO
    precision = None
    if b.precision is not None:
        precision = _max_prec(precision, _top(a) + b.precision)
    if a.precision is not None:
        precision = _max_prec(precision, _top(b) + a.precision)
    return PuiseuxSeries(_mul_terms(a.terms, b.terms, precision), precision)


def log_abs(a):
    """Leading exponent of ``a`` (a Fraction), or ``NEG_INF`` for exact zero."""
    if a.terms:
        return a.terms[0][0]
    if a.precision is None:
        return NEG_INF
    raise Indeterminate(f"series vanishes up to O(X^({a.precision}))")


def sign(a):
    if a.terms:
        return 1 if a.terms[0][1] > 0 else -1
    if a.precision is None:
        return 0
    raise Indeterminate(f"sign undecided: series vanishes up to O(X^({a.precision}))")


def cmp(a, b):
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    return -sign(sub(b, a))


def truncate_above(a, e):
    """Exact series of the terms of ``a`` with exponent strictly above ``e``."""
    e = _q(e)
    return PuiseuxSeries(tuple(t for t in a.terms if t[0] > e))


_INT_SCALE_BITS = 24


def _expand_unit(a, window, kind):
    """Expand ``1/(1+u)`` (``kind="inv"``) or ``sqrt(1+u)`` (``kind="sqrt"``)
    where ``a = c X^e (1 + u)`` and ``log_abs(u) < 0``.

    The exponents of ``u`` lie on the lattice ``-j/D``, so the expansion is
    a series in ``X^(-1/D)`` computed by an integer recurrence.  Terms are
    kept while their relative exponent stays above ``-window`` (or the
    relative precision of ``a``, if coarser).  Returns the relative term
    list and the relative precision (``None`` if exact).
    """
    e, c = a.terms[0]
    rel_prec = None if a.precision is None else a.precision - e
    if len(a.terms) == 1 and rel_prec is None:
        return ((Fraction(0), Fraction(1)),), None
    cutoff = -window if rel_prec is None else max(-window, rel_prec)
    d = _denominators(ex - e for ex, _ in a.terms[1:])
    g = [co / c for _, co in a.terms[1:]]
    js = [int((e - ex) * d) for ex, _ in a.terms[1:]]
    count = ceil(-cutoff * d)
    q = _denominators(g)
    if q.bit_length() > _INT_SCALE_BITS:
        # q^n scaling would swamp the true coefficient sizes
        rec = kernels.inv_rat if kind == "inv" else kernels.sqrt_rat
        coeffs = rec(js, g, count)
        rel = [(Fraction(-n, d), fn) for n, fn in enumerate(coeffs) if fn]
        return tuple(rel), cutoff
    gs = [x.numerator * (q // x.denominator) for x in g]
    if kind == "inv":
        coeffs = kernels.inv_rec(js, gs, q, count)
        scale = q
    else:
        coeffs = kernels.sqrt_rec(js, gs, q, count)
        scale = 4 * q
    rel = []
    denom = 1
    for n, fn in enumerate(coeffs):
        if fn:
            rel.append((Fraction(-n, d), Fraction(fn, denom)))
        denom *= scale
    return tuple(rel), cutoff


def _check_window(window):
    window = _q(window)
    if window <= 0:
        raise ValueError("window must be positive")
    return window


def invert(a, window=DEFAULT_WINDOW):
    """Multiplicative inverse of ``a`` known to ``window`` below its leading
    exponent.  Exact when the inverse is a finite series that the window
    captures completely."""
    window = _check_window(window)
    if a.is_zero:
        raise ZeroDivisionError("inverse of the zero series")
    if not a.terms:
        raise Indeterminate("leading term of divisor is unknown")
    e, c = a.terms[0]
    rel, rel_prec = _expand_unit(a, window, "inv")
    result = PuiseuxSeries(tuple((ex - e, co / c) for ex, co in rel),
                           None if rel_prec is None else rel_prec - e)
    if result.precision is not None and a.is_exact:
        candidate = result.exact_part()
        if mul(a, candidate) == ONE:
            return candidate
    return result


def _rational_sqrt(q):
    if q < 0:
        raise NegativeInput(f"{q} is negative")
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn != n or rd * rd != d:
        raise NonRationalSqrt(f"{q} is not the square of a rational")
    return Fraction(rn, rd)


def sqrt(a, window=DEFAULT_WINDOW):
    """Positive square root of ``a`` to a relative ``window``.

    Raises :class:`NonRationalSqrt` when the leading coefficient is not a
    rational square; coefficients never leave Q.
    """
    window = _check_window(window)
    if a.is_zero:
        return ZERO
    if not a.terms:
        raise Indeterminate("leading term of radicand is unknown")
    e, c = a.terms[0]
    if c < 0:
        raise NegativeInput("square root of a negative series")
    root_c = _rational_sqrt(c)
    rel, rel_prec = _expand_unit(a, window, "sqrt")
    half = e / 2
    result = PuiseuxSeries(tuple((ex + half, co * root_c) for ex, co in rel),
                           None if rel_prec is None else rel_prec + half)
    if result.precision is not None and a.is_exact:
        candidate = result.exact_part()
        if mul(candidate, candidate) == a:
            return candidate
    return result
