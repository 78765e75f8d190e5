"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Each case is run on every available backend; results must be identical.
"""

import argparse
import time
from fractions import Fraction

from puiseux_tree import checks, kernels
from puiseux_tree.sampling import make_rng, random_series
from puiseux_tree.series import invert, make_series, mul, sqrt


def _dense(n, d, seed):
    rng = make_rng("bench", seed)
    return make_series([(Fraction(-k, d), rng.randint(-9, 9) or 1) for k in range(n)])


def case_mul_small():
    rng = make_rng("bench-small")
    pairs = [(random_series(rng, 6), random_series(rng, 6)) for _ in range(3000)]
    return lambda: [mul(a, b) for a, b in pairs]


def case_mul_dense():
    a, b = _dense(400, 12, 1), _dense(400, 12, 2)
    return lambda: mul(a, b)


def case_mul_bigint():
    a = make_series([(Fraction(-k, 3), 10**30 + k) for k in range(300)])
    b = make_series([(Fraction(-k, 4), 3**70 - k) for k in range(300)])
    return lambda: mul(a, b)


def case_invert():
    a = make_series([(0, 1), (Fraction(-1, 6), 2), (Fraction(-5, 4), -3), (-2, 1)])
    return lambda: invert(a, 48)


def case_sqrt():
    a = make_series([(2, 4), (Fraction(3, 2), 1), (Fraction(-1, 3), -5)])
    return lambda: sqrt(a, 48)


def case_crossratio():
    return lambda: checks.verify_cross_ratio(60, 3).witness


CASES = [
    ("mul, 3000 small pairs", case_mul_small),
    ("mul, 400x400 dense terms", case_mul_dense),
    ("mul, 300x300 big coefficients", case_mul_bigint),
    ("invert, window 48", case_invert),
    ("sqrt, window 48", case_sqrt),
    ("cross-ratio check, 60 pairs", case_crossratio),
]


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = kernels.available()
    print(f"backends: {', '.join(backends)}")
    header = f"{'case':34}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) > 1:
        header += f"{'speedup':>10}"
    print(header)
    for label, make in CASES:
        fn = make()
        times, results = [], []
        for b in backends:
            kernels.use_backend(b)
            t, r = best_of(fn, args.repeat)
            times.append(t)
            results.append(r)
        if any(r != results[0] for r in results):
            raise SystemExit(f"backends disagree on {label!r}")
        row = f"{label:34}" + "".join(f"{t * 1000:10.1f}ms" for t in times)
        if len(backends) > 1:
            row += f"{times[1] / times[0]:9.1f}x"
        print(row)
    kernels.use_backend(backends[0])


if __name__ == "__main__":
    main()
