import pytest
from hypothesis import settings, strategies as st

from umbra.poly import Poly
from umbra.scalar import LambdaRat
from umbra.series import Series

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_ints = st.integers(-6, 6)
int_polys = st.lists(small_ints, max_size=4).map(tuple)


@st.composite
def lambda_rats(draw, nonzero=False):
    num = draw(int_polys)
    den = draw(int_polys.filter(lambda d: any(d)))
    value = LambdaRat(num, den)
    if nonzero and value.is_zero():
        value = LambdaRat((1, 1))
    return value


@st.composite
def polys(draw, max_degree=4):
    return Poly(draw(st.lists(lambda_rats(), max_size=max_degree + 1)))


@st.composite
def delta_series(draw, trunc=5):
    """Delta series with small integer coefficients and a unit linear term."""
    lead = draw(st.sampled_from([1, -1, 2, -3]))
    rest = draw(st.lists(small_ints, min_size=trunc - 1, max_size=trunc - 1))
    return Series([0, lead] + rest, trunc)


@st.composite
def unit_series(draw, trunc=5):
    head = draw(lambda_rats(nonzero=True))
    rest = draw(st.lists(lambda_rats(), min_size=trunc, max_size=trunc))
    return Series([head] + rest, trunc)


_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_line():
    def record(number, passed, detail=""):
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'} {detail}".rstrip()
        print(line)
        _ACCEPTANCE_LINES.append(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
