"""Independent reference computations used to freeze expected values."""

from fractions import Fraction

import sympy

from puiseux_tree.series import make_series

x = sympy.Symbol("x", positive=True)


def to_sympy(s):
    return sum((sympy.Rational(c.numerator, c.denominator) * x ** sympy.Rational(e.numerator, e.denominator)
                for e, c in s.terms), sympy.Integer(0))


def from_sympy(expr):
    pairs = []
    for term, coeff in sympy.expand(expr).as_coefficients_dict().items():
        if term == 1:
            e = sympy.Integer(0)
        elif term == x:
            e = sympy.Integer(1)
        else:
            base, e = term.as_base_exp()
            assert base == x, term
        pairs.append((Fraction(int(e.p), int(e.q)), Fraction(int(coeff.p), int(coeff.q))))
    return make_series(pairs)


def sympy_product(a, b):
    return from_sympy(sympy.expand(to_sympy(a) * to_sympy(b)))


def naive_expansion(u_terms, coefficient, cutoff):
    """sum_k coefficient(k) u^k by repeated multiplication, keeping
    relative exponents > cutoff.  Slow but obviously right."""
    acc = {Fraction(0): Fraction(1)}
    power = {Fraction(0): Fraction(1)}
    k = 0
    while power:
        k += 1
        nxt = {}
        for e1, c1 in power.items():
            for e2, c2 in u_terms:
                e = e1 + e2
                if e > cutoff:
                    nxt[e] = nxt.get(e, 0) + c1 * c2
        power = {e: c for e, c in nxt.items() if c}
        for e, c in power.items():
            acc[e] = acc.get(e, 0) + coefficient(k) * c
    return make_series(acc.items(), cutoff)
