"""Exact real Puiseux series, the hyperbolic plane over them, and the
Q-tree obtained by collapsing pseudo-distance zero."""

from .errors import (
    Indeterminate,
    NegativeInput,
    NonRationalSqrt,
    NonRealCrossRatio,
    OutOfRange,
    PuiseuxError,
    SamePoint,
    SameSeries,
)
from .hplane import FComplex, HPoint, cross_ratio_log, fline_through, hp_distance
from .series import (
    NEG_INF,
    ONE,
    X,
    ZERO,
    PuiseuxSeries,
    cmp,
    invert,
    log_abs,
    make_series,
    monomial,
    sqrt,
    truncate_above,
)
from .textio import format_series, parse_series
from .tree import TreePoint, median, merge_height, param_point, project, tree_distance

__version__ = "0.1.0"
