from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from tropcone.maxplus import BOTTOM
from tropcone.instances import paper_fixtures

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

_ = BOTTOM

# the four extreme rays of the running 3-dimensional example
G0 = (_, 0, _)
G1 = (-2, 1, 0)
G2 = (2, 2, 0)
G3 = (0, _, 0)


@pytest.fixture(scope="session")
def fixtures():
    return paper_fixtures()


@pytest.fixture
def fig1(fixtures):
    return fixtures["fig1"].value


finite = st.one_of(
    st.integers(-20, 20),
    st.fractions(min_value=-20, max_value=20, max_denominator=6),
)
scalars = st.one_of(st.just(BOTTOM), finite)


def vectors(d, elements=scalars):
    return st.lists(elements, min_size=d, max_size=d).map(tuple)


def nonzero_vectors(d):
    return vectors(d).filter(lambda v: any(x != BOTTOM for x in v))


def half(x):
    return Fraction(x, 2)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, text = RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {text}")
