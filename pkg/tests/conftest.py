from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=8)
nonneg = st.fractions(min_value=0, max_value=3, max_denominator=8)


def vectors(dim):
    return st.tuples(*[rationals] * dim)


# lines collected by tests/test_acceptance.py
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture
def F():
    return Fraction


RATIOS = [Fraction(p, q) for p, q in [(1, 2), (-1, 2), (1, 3), (-2, 3), (3, 4), (-1, 5)]]


@st.composite
def seqreps(draw, space, geo=True):
    """Random sequence reps: explicit head, optional geometric and constant tails."""
    from basenorm.sequences import Geo, SeqRep

    entries = draw(st.dictionaries(st.integers(1, 8), rationals, max_size=5))
    top = max(entries, default=0)
    g = None
    if geo and draw(st.booleans()):
        g = Geo(draw(rationals), draw(st.sampled_from(RATIOS)), top + draw(st.integers(1, 3)))
    tail = Fraction(0)
    if space in ("c", "linf"):
        tail = draw(rationals)
    return SeqRep(space, entries, tail, g)
