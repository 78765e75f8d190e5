from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from puiseux_tree.series import make_series
from puiseux_tree.counterexample import sequence

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda x: int(x.split()[2])):
            terminalreporter.write_line(line)


def exponents(denominators=(1, 2, 3, 4), span=6):
    return st.builds(
        lambda d, k: Fraction(k, d),
        st.sampled_from(denominators),
        st.integers(-span * 4, span * 4),
    ).filter(lambda e: abs(e) <= span)


coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(bool)


@st.composite
def series(draw, max_terms=4, nonzero=False):
    pairs = draw(st.lists(st.tuples(exponents(), coefficients), min_size=1 if nonzero else 0, max_size=max_terms))
    s = make_series(pairs)
    if nonzero and s.is_zero:
        s = make_series([pairs[0]])
    return s


@st.composite
def positive_series(draw, max_terms=3):
    s = draw(series(max_terms, nonzero=True))
    return -s if s.terms[0][1] < 0 else s


@pytest.fixture
def seq():
    return sequence
