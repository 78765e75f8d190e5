"""Kernel selection: the compiled extension when it was built, else the
pure-Python fallback.  Both give identical results."""

from . import _kernels_py

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS = {"python": _kernels_py}
if _ckernels is not None:
    _BACKENDS["compiled"] = _ckernels

backend = "compiled" if _ckernels is not None else "python"
mul_int = _BACKENDS[backend].mul_int
inv_rec = _BACKENDS[backend].inv_rec
sqrt_rec = _BACKENDS[backend].sqrt_rec
# rational recurrences: Fraction arithmetic dominates, nothing to compile
inv_rat = _kernels_py.inv_rat
sqrt_rat = _kernels_py.sqrt_rat


def available():
    return sorted(_BACKENDS)


def use_backend(name):
    """Switch the kernel used by all series arithmetic in this process."""
    global backend, mul_int, inv_rec, sqrt_rec
    if name not in _BACKENDS:
        raise ValueError(f"kernel backend {name!r} not available; have {available()}")
    backend = name
    mul_int = _BACKENDS[name].mul_int
    inv_rec = _BACKENDS[name].inv_rec
    sqrt_rec = _BACKENDS[name].sqrt_rec
