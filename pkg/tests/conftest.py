from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lspecial.poly import BivarPoly, Space
from lspecial.quartic import build_construction, solve_beta
from lspecial.scalars import Scalar

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_rationals = st.fractions(min_value=-9, max_value=9, max_denominator=7)
nonzero_rationals = small_rationals.filter(lambda q: q != 0)
gaussian = st.builds(Scalar.rational, small_rationals, small_rationals)
real_exact = st.builds(Scalar.rational, small_rationals)
betas = st.fractions(min_value=Fraction(1, 50), max_value=Fraction(49, 50), max_denominator=50).filter(
    lambda b: 0 < b < 1
)


def polys(max_deg=4, coeffs=gaussian, space=Space.XY, max_terms=8):
    monos = st.tuples(st.integers(0, max_deg), st.integers(0, max_deg)).filter(lambda m: m[0] + m[1] <= max_deg)
    return st.dictionaries(monos, coeffs, max_size=max_terms).map(lambda t: BivarPoly(t, space, True))


@pytest.fixture
def xy():
    return BivarPoly.var(0), BivarPoly.var(1)


@pytest.fixture
def zw():
    return BivarPoly.var(0, Space.ZW), BivarPoly.var(1, Space.ZW)


@pytest.fixture(scope="session")
def beta0():
    return solve_beta()


@pytest.fixture(scope="session")
def construction(beta0):
    return build_construction(beta0)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for name, ok in RESULTS:
            terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
