"""Shared strategies for exact-scalar and small-matrix generation."""

from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from fixpres import GaussianRational, Matrix

settings.register_profile(
    "default",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


fractions_st = st.fractions(
    min_value=Fraction(-9), max_value=Fraction(9), max_denominator=4
)

scalars = st.builds(GaussianRational, fractions_st, fractions_st)

nonzero_scalars = scalars.filter(bool)


@st.composite
def matrices(draw, rows=None, cols=None, max_side=4):
    r = rows if rows is not None else draw(st.integers(1, max_side))
    c = cols if cols is not None else draw(st.integers(1, max_side))
    entries = draw(st.lists(scalars, min_size=r * c, max_size=r * c))
    return Matrix(r, c, tuple(entries))


@st.composite
def square_matrices(draw, max_side=4):
    n = draw(st.integers(1, max_side))
    return draw(matrices(rows=n, cols=n))
