# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels, same contracts as ``_kernels_py``.

``mul_int`` accumulates densely in int64 with overflow checks and reruns
with Python integers (still compiled loops) when a value leaves int64.
The recurrences work on Python integers throughout.
"""

from libc.stdlib cimport calloc, free

cdef extern from *:
    """
    static inline int pt_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int pt_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int pt_mul_ovf(long long a, long long b, long long *r) nogil
    int pt_add_ovf(long long a, long long b, long long *r) nogil

cdef long long MAX_SPAN = 1 << 20


cdef long long *_to_c(list xs) except? NULL:
    cdef Py_ssize_t n = len(xs), i
    cdef long long *out = <long long *> calloc(n if n > 0 else 1, sizeof(long long))
    if out == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            out[i] = xs[i]
    except OverflowError:
        free(out)
        raise
    return out


cdef tuple _mul_int_obj(list ae, list ac, list be, list bc, object cutoff):
    cdef Py_ssize_t na = len(ae), nb = len(be), i, j, k, span
    cdef object hi = ae[0] + be[0]
    cdef object lo = ae[na - 1] + be[nb - 1]
    cdef object e, ca, ea
    cdef list acc
    cdef dict sparse
    if cutoff is not None and lo <= cutoff:
        lo = cutoff + 1
    if hi < lo:
        return [], []
    if hi - lo < MAX_SPAN:
        span = hi - lo + 1
        acc = [0] * span
        for i in range(na):
            ea = ae[i]
            ca = ac[i]
            for j in range(nb):
                e = ea + be[j]
                if e < lo:
                    break
                k = hi - e
                acc[k] = acc[k] + ca * bc[j]
        exps = []
        coefs = []
        for k in range(span):
            if acc[k]:
                exps.append(hi - k)
                coefs.append(acc[k])
        return exps, coefs
    sparse = {}
    for i in range(na):
        ea = ae[i]
        ca = ac[i]
        for j in range(nb):
            e = ea + be[j]
            if e < lo:
                break
            sparse[e] = sparse.get(e, 0) + ca * bc[j]
    items = sorted([(e, c) for e, c in sparse.items() if c], reverse=True)
    return [t[0] for t in items], [t[1] for t in items]


def mul_int(list ae, list ac, list be, list bc, cutoff=None):
    cdef Py_ssize_t na = len(ae), nb = len(be), i, j, span = 0
    cdef long long hi = 0, lo = 0, e, p, c_cut = 0
    cdef bint has_cut = cutoff is not None
    cdef long long *cae = NULL
    cdef long long *cac = NULL
    cdef long long *cbe = NULL
    cdef long long *cbc = NULL
    cdef long long *acc = NULL
    cdef bint overflow = False
    if na == 0 or nb == 0:
        return [], []
    try:
        try:
            cae = _to_c(ae)
            cac = _to_c(ac)
            cbe = _to_c(be)
            cbc = _to_c(bc)
            if has_cut:
                c_cut = cutoff
        except OverflowError:
            overflow = True
        if not overflow:
            if pt_add_ovf(cae[0], cbe[0], &hi) or pt_add_ovf(cae[na - 1], cbe[nb - 1], &lo):
                overflow = True
            else:
                if has_cut and lo <= c_cut:
                    lo = c_cut + 1
                if hi < lo:
                    return [], []
                if hi - lo >= MAX_SPAN:
                    overflow = True
        if not overflow:
            span = <Py_ssize_t> (hi - lo + 1)
            acc = <long long *> calloc(span, sizeof(long long))
            if acc == NULL:
                raise MemoryError()
            with nogil:
                for i in range(na):
                    for j in range(nb):
                        e = cae[i] + cbe[j]
                        if e < lo:
                            break
                        if pt_mul_ovf(cac[i], cbc[j], &p) or pt_add_ovf(acc[hi - e], p, &acc[hi - e]):
                            overflow = True
                            break
                    if overflow:
                        break
        if overflow:
            return _mul_int_obj(ae, ac, be, bc, cutoff)
        exps = []
        coefs = []
        for i in range(span):
            if acc[i] != 0:
                exps.append(hi - i)
                coefs.append(acc[i])
        return exps, coefs
    finally:
        free(cae)
        free(cac)
        free(cbe)
        free(cbc)
        free(acc)


def inv_rec(list js, list gs, object q, Py_ssize_t count):
    cdef Py_ssize_t n, k, m = len(js), j
    cdef list weights = [gs[k] * q ** (js[k] - 1) for k in range(m)]
    cdef list f = [1]
    cdef object total, fn
    for n in range(1, count):
        total = 0
        for k in range(m):
            j = js[k]
            if j > n:
                break
            fn = f[n - j]
            if fn:
                total -= weights[k] * fn
        f.append(total)
    return f


def sqrt_rec(list js, list gs, object q, Py_ssize_t count):
    cdef Py_ssize_t n, k, m = len(js), j
    cdef list weights = [gs[k] * 4 ** js[k] * q ** (js[k] - 1) for k in range(m)]
    cdef list s = [1]
    cdef object total, sn
    for n in range(1, count):
        total = 0
        for k in range(m):
            j = js[k]
            if j > n:
                break
            sn = s[n - j]
            if sn:
                total += (3 * j - 2 * n) * weights[k] * sn
        s.append(total // (2 * n))
    return s
