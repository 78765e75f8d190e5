from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from puiseux_tree.counterexample import sequence
from puiseux_tree.errors import OutOfRange
from puiseux_tree.hplane import HPoint, hp_distance
from puiseux_tree.series import ZERO, log_abs, monomial, truncate_above
from puiseux_tree.textio import parse_series as S
from puiseux_tree.tree import (
    SegmentSpec,
    TreePoint,
    four_point_ok,
    gromov_product,
    is_on_segment,
    median,
    merge_height,
    param_point,
    project,
    representative,
    segment,
    tree_distance,
)

from conftest import positive_series, series

heights = st.fractions(-3, 3, max_denominator=4)


@st.composite
def tree_points(draw):
    return TreePoint.canonical(draw(series(3)), draw(heights))


@st.composite
def hpoints(draw):
    return HPoint(draw(series(3)), draw(positive_series(2)))


def TP(u, t):
    return TreePoint(S(u) if isinstance(u, str) else u, F(t))


P0 = project(sequence(0).p)
P1 = project(sequence(1).p)
P2 = project(sequence(2).p)
P3 = project(sequence(3).p)
DEEP0 = project(HPoint(ZERO, monomial(-2)))


class TestTreePoint:
    def test_rejects_uncanonical(self):
        with pytest.raises(ValueError):
            TreePoint(S("X + 1"), F(0))

    def test_canonical_truncates(self):
        assert TreePoint.canonical(S("X + 1 + X^(-1)"), 0) == TP("X", 0)

    def test_equality_is_componentwise(self):
        assert TP("X", 0) != TP("X", F(1, 2))
        assert TP("X", 0) == TreePoint(S("X"), 0)

    def test_segment_spec(self):
        spec = segment(P2, DEEP0)
        assert spec == SegmentSpec(P2, DEEP0, F(-1, 2))
        assert spec.length == tree_distance(P2, DEEP0)


class TestProject:
    def test_sequence_point(self):
        assert P2 == TP("X^(-1/2)", F(-3, 4))

    def test_trivial(self):
        assert project(HPoint(ZERO, S("1"))) == TP("0", 0)

    def test_consecutive_lines_identified(self):
        assert project(HPoint(sequence(1).a, sequence(2).b)) == P2

    @given(hpoints())
    def test_representative_at_distance_zero(self, z):
        assert hp_distance(z, representative(project(z))) == 0

    @given(hpoints(), hpoints())
    def test_distance_descends(self, z, z2):
        assert tree_distance(project(z), project(z2)) == hp_distance(z, z2)

    @given(hpoints(), series(3), positive_series(2), st.fractions(0, 2, max_denominator=4))
    def test_identified_points_share_class(self, z, dx, dy, drop):
        # move x by something no larger than y, and y within its order
        t = log_abs(z.y)
        shift = monomial(t - drop - (log_abs(dx) if not dx.is_zero else 0))
        y2 = dy * monomial(t - log_abs(dy))
        z2 = HPoint(z.x + dx * shift, y2)
        assert hp_distance(z, z2) == 0
        assert project(z) == project(z2)


class TestDistance:
    def test_same_vertical(self):
        assert tree_distance(TP("0", 0), TP("0", -2)) == 2

    def test_sequence(self):
        assert tree_distance(P0, P2) == F(3, 4)

    def test_branching(self):
        assert tree_distance(TP("X^(-1/2)", F(-3, 4)), TP("0", -2)) == F(7, 4)

    @given(tree_points(), tree_points())
    def test_positive_definite(self, p, q):
        assert (tree_distance(p, q) == 0) == (p == q)


class TestMergeHeight:
    def test_equal_points(self):
        assert merge_height(TP("0", -1), TP("0", -1)) == -1

    def test_branch_of_l0_and_l2(self):
        p = project(HPoint(ZERO, monomial(-2)))
        q = project(HPoint(sequence(2).a, monomial(-2)))
        assert merge_height(p, q) == F(-1, 2)

    def test_nested(self):
        assert merge_height(TP("0", 0), TP("0", -3)) == 0

    @given(tree_points(), tree_points())
    def test_identity(self, p, q):
        h = merge_height(p, q)
        assert (h - p.t) + (h - q.t) == tree_distance(p, q)


class TestParamPoint:
    def test_endpoints(self):
        d = tree_distance(P2, DEEP0)
        assert param_point(P2, DEEP0, 0) == P2
        assert param_point(P2, DEEP0, d) == DEEP0

    def test_descend_l0(self):
        assert param_point(P0, DEEP0, F(1, 2)) == TP("0", F(-1, 2)) == P1

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            param_point(P0, DEEP0, 3)
        with pytest.raises(OutOfRange):
            param_point(P0, DEEP0, -1)

    @given(tree_points(), tree_points(), st.fractions(0, 1), st.fractions(0, 1))
    def test_isometry(self, a, b, x, y):
        d = tree_distance(a, b)
        s, s2 = x * d, y * d
        assert tree_distance(param_point(a, b, s), param_point(a, b, s2)) == abs(s - s2)

    @given(tree_points(), tree_points(), st.fractions(0, 1))
    def test_additive(self, a, b, x):
        p = param_point(a, b, x * tree_distance(a, b))
        assert is_on_segment(p, a, b)


class TestMedian:
    def test_degenerate(self):
        assert median(P2, P2, DEEP0) == P2

    def test_branch_point(self):
        assert median(P0, P2, DEEP0) == TP("0", F(-1, 2)) == P1

    def test_vertical_middle(self):
        top, mid, low = TP("0", 2), TP("0", 0), TP("0", -5)
        assert median(top, low, mid) == mid
        assert median(low, mid, top) == mid

    @given(tree_points(), tree_points(), tree_points())
    def test_symmetric(self, a, b, c):
        m = median(a, b, c)
        assert m == median(b, c, a) == median(c, a, b)
        assert is_on_segment(m, a, b) and is_on_segment(m, b, c) and is_on_segment(m, a, c)


class TestGromov:
    def test_same_point(self):
        assert gromov_product(P2, P2, P0) == tree_distance(P0, P2)

    def test_example(self):
        assert gromov_product(P2, DEEP0, P0) == F(1, 2)

    def test_base_is_argument(self):
        assert gromov_product(P2, DEEP0, P2) == 0

    @given(tree_points(), tree_points(), tree_points())
    def test_nonnegative(self, a, b, c):
        assert gromov_product(a, b, c) >= 0


class TestSegments:
    def test_endpoint(self):
        assert is_on_segment(P2, P2, DEEP0)

    def test_branch_point_on_geodesic(self):
        assert is_on_segment(P1, P0, DEEP0)

    def test_off_segment(self):
        assert not is_on_segment(TP("X^(-1/2)", F(-3, 4)), TP("0", 0), TP("0", -2))

    @given(tree_points(), tree_points(), tree_points(), st.fractions(0, 1))
    def test_cover(self, x, y, z, r):
        p = param_point(y, z, r * tree_distance(y, z))
        assert is_on_segment(p, x, y) or is_on_segment(p, x, z)


class TestFourPoint:
    def test_identical(self):
        assert four_point_ok(P1, P1, P1, P1)

    def test_sequence(self):
        assert four_point_ok(P0, P1, P2, P3)

    def test_vertical(self):
        assert four_point_ok(*(TreePoint.canonical(S("X^2"), t) for t in (5, 3, 2, -1)))

    @given(tree_points(), tree_points(), tree_points(), tree_points())
    def test_random(self, a, b, c, d):
        assert four_point_ok(a, b, c, d)


@given(series(3), heights)
def test_canonical_is_truncation(u, t):
    assert TreePoint.canonical(u, t).u == truncate_above(u, t)
