"""Pure-Python kernels on integer-scaled series data.

Callers scale exponents and coefficients by common denominators so that
everything here is plain ``int`` arithmetic.

* ``mul_int`` -- Cauchy product of two term lists sorted by strictly
  descending exponent, keeping exponents ``> cutoff``.
* ``inv_rec`` / ``sqrt_rec`` -- coefficients of ``1/(1+u)`` and
  ``sqrt(1+u)`` where ``u = sum_j (G_j / q) Y^j`` (``Y`` a formal variable
  standing for ``X^(-1/D)``).  They return integers ``F_n`` with
  ``1/(1+u) = sum F_n / q^n Y^n`` and ``S_n`` with
  ``sqrt(1+u) = sum S_n / (4^n q^n) Y^n``.
"""

from fractions import Fraction


def mul_int(ae, ac, be, bc, cutoff=None):
    acc = {}
    get = acc.get
    for ea, ca in zip(ae, ac):
        for eb, cb in zip(be, bc):
            e = ea + eb
            if cutoff is not None and e <= cutoff:
                break
            acc[e] = get(e, 0) + ca * cb
    items = sorted(((e, c) for e, c in acc.items() if c), reverse=True)
    return [e for e, _ in items], [c for _, c in items]


def inv_rec(js, gs, q, count):
    # F_n = -sum_j G_j q^(j-1) F_(n-j)
    weights = [(j, g * q ** (j - 1)) for j, g in zip(js, gs)]
    f = [1]
    for n in range(1, count):
        total = 0
        for j, w in weights:
            if j > n:
                break
            fn = f[n - j]
            if fn:
                total -= w * fn
        f.append(total)
    return f


def sqrt_rec(js, gs, q, count):
    # n s_n = sum_j (3j/2 - n) g_j s_(n-j); with S_n = 4^n q^n s_n the
    # division by 2n is exact
    weights = [(j, g * 4**j * q ** (j - 1)) for j, g in zip(js, gs)]
    s = [1]
    for n in range(1, count):
        total = 0
        for j, w in weights:
            if j > n:
                break
            sn = s[n - j]
            if sn:
                total += (3 * j - 2 * n) * w * sn
        s.append(total // (2 * n))
    return s


def inv_rat(js, gs, count):
    # same recurrence on normalized rationals; for large common denominators
    # where the q^n scaling above blows up
    f = [Fraction(1)]
    for n in range(1, count):
        total = Fraction(0)
        for j, g in zip(js, gs):
            if j > n:
                break
            fn = f[n - j]
            if fn:
                total -= g * fn
        f.append(total)
    return f


def sqrt_rat(js, gs, count):
    s = [Fraction(1)]
    for n in range(1, count):
        total = Fraction(0)
        for j, g in zip(js, gs):
            if j > n:
                break
            sn = s[n - j]
            if sn:
                total += (3 * j - 2 * n) * g * sn
        s.append(total / (2 * n))
    return s
