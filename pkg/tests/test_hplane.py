from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from puiseux_tree.errors import NonRationalSqrt, SamePoint
from puiseux_tree.hplane import (
    Circle,
    FComplex,
    HPoint,
    Vertical,
    cdiv,
    cmul,
    cross_ratio,
    cross_ratio_log,
    csub,
    fline_through,
    hp_distance,
)
from puiseux_tree.series import NEG_INF, ONE, X, ZERO, log_abs, monomial
from puiseux_tree.textio import parse_point as P
from puiseux_tree.textio import parse_series as S

from conftest import positive_series, series

I = FComplex(ZERO, ONE)


@st.composite
def points(draw):
    return HPoint(draw(series(3)), draw(positive_series(2)))


def sum_form_distance(z, z2):
    """log(((x-x')^2 + y^2 + y'^2) / (y y')) evaluated with full series arithmetic."""
    dx = z.x - z2.x
    num = dx * dx + z.y * z.y + z2.y * z2.y
    return log_abs(num) - log_abs(z.y) - log_abs(z2.y)


class TestDistance:
    def test_first_sequence_step(self):
        assert hp_distance(P("0;1"), P("X^(-1/2);X^(-1/2)")) == F(1, 2)

    def test_identity(self):
        z = P("X^2 - 3 ; 1/3*X^(-1)")
        assert hp_distance(z, z) == 0

    def test_distinct_points_at_distance_zero(self):
        assert hp_distance(P("0;1"), P("1;1")) == 0

    def test_vertical_only(self):
        assert hp_distance(P("5;X^3"), P("5;X^(-2)")) == 5

    @given(points(), points())
    def test_matches_sum_form(self, z, z2):
        assert hp_distance(z, z2) == sum_form_distance(z, z2)

    @given(points(), points())
    def test_symmetric_and_nonnegative(self, z, z2):
        assert hp_distance(z, z2) == hp_distance(z2, z) >= 0

    @given(points(), points(), points())
    def test_triangle(self, a, b, c):
        assert hp_distance(a, c) <= hp_distance(a, b) + hp_distance(b, c)

    @given(series(3), series(3), positive_series(2))
    def test_horizontal_shift_within_scale(self, x, x2, y):
        dx = log_abs(x - x2)
        assume(dx == NEG_INF or dx <= log_abs(y))
        assert hp_distance(HPoint(x, y), HPoint(x2, y)) == 0

    def test_point_requires_positive_height(self):
        with pytest.raises(ValueError):
            HPoint(ZERO, ZERO)
        with pytest.raises(ValueError):
            HPoint(ZERO, -X)


class TestLine:
    def test_vertical(self):
        assert fline_through(P("0;1"), P("0;X")) == Vertical(ZERO)

    def test_irrational_radius(self):
        # centre 1, squared radius 2
        with pytest.raises(NonRationalSqrt):
            fline_through(P("0;1"), P("2;1"))

    def test_circle(self):
        line = fline_through(P("0;X"), P("1;1"))
        assert isinstance(line, Circle)
        assert line.center == S("-1/2*X^2 + 1")
        assert line.radius.terms[0] == (2, F(1, 2))
        assert line.w < ZERO < ONE < line.w_prime
        # both points lie on the circle up to the window
        for z in (P("0;X"), P("1;1")):
            dx = z.x - line.center
            resid = dx * dx + z.y * z.y - line.radius * line.radius
            assert resid.terms == ()

    def test_same_point(self):
        with pytest.raises(SamePoint):
            fline_through(P("1;X"), P("1;X"))


class TestComplex:
    def test_i_squared(self):
        assert cmul(I, I) == FComplex(-ONE, ZERO)

    def test_unit_divisor(self):
        a = FComplex(S("X + 2"), S("X^(-1)"))
        assert cdiv(a, FComplex(ONE), 5) == a

    def test_reciprocal_of_i(self):
        assert cdiv(FComplex(ONE), I, 5) == FComplex(ZERO, -ONE)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            cdiv(I, FComplex(ZERO, ZERO))

    def test_sub(self):
        assert csub(FComplex(X, ONE), FComplex(X, X)) == FComplex(ZERO, ONE - X)


class TestCrossRatio:
    def test_vertical_is_height_ratio(self):
        cr, line = cross_ratio(P("0;1"), P("0;X"))
        assert isinstance(line, Vertical)
        assert cr == FComplex(X, ZERO)
        assert cross_ratio_log(P("0;1"), P("0;X")) == 1 == hp_distance(P("0;1"), P("0;X"))

    def test_order_of_arguments_irrelevant(self):
        assert cross_ratio_log(P("0;X"), P("0;1")) == 1

    def test_same_point(self):
        with pytest.raises(SamePoint):
            cross_ratio_log(P("0;1"), P("0;1"))

    def test_circle_agrees_with_formula(self):
        z, z2 = P("0;X"), P("1;1")
        assert hp_distance(z, z2) == 1
        assert cross_ratio_log(z, z2) == 1

    def test_sequence_points(self):
        z, z2 = P("0;1"), P("X^(-1/2);X^(-1/2)")
        assert cross_ratio_log(z, z2) == hp_distance(z, z2) == F(1, 2)

    def test_zero_distance_pair(self):
        # squared radius 1/4 + 1: leading coefficient 1
        z, z2 = P("0;1"), P("1;X^(-1)")
        assert hp_distance(z, z2) == 1
        assert cross_ratio_log(z, z2) == 1

    @given(points(), points())
    def test_oracle_equivalence(self, z, z2):
        assume(z != z2)
        try:
            value = cross_ratio_log(z, z2, 24)
        except NonRationalSqrt:
            assume(False)
        assert value == hp_distance(z, z2)
