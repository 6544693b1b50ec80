"""Shared hypothesis strategies for small instances."""

from hypothesis import strategies as st

from quivergrass.core import ParahoricData


@st.composite
def instances(draw, max_n=4, max_omega=2):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(0, n))
    omega = draw(st.integers(1, max_omega))
    s = draw(st.sets(st.integers(1, n), min_size=1, max_size=n))
    return ParahoricData(n, k, omega, tuple(sorted(s)))


@st.composite
def nested_instances(draw, max_n=4, max_omega=2):
    """An instance together with a nonempty subset of its vertex set."""
    P = draw(instances(max_n=max_n, max_omega=max_omega))
    sub = draw(st.sets(st.sampled_from(P.S), min_size=1))
    return P, tuple(sorted(sub))
