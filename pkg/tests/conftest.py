import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from cubesign.poly import Poly

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def poly_strategy(nvars, max_terms=6, max_coeff=4):
    """Arbitrary canonical polynomials in `nvars` variables."""
    coeff = st.integers(min_value=-max_coeff, max_value=max_coeff)
    mask = st.integers(min_value=0, max_value=(1 << nvars) - 1)
    return st.dictionaries(mask, coeff, max_size=max_terms).map(
        lambda terms: Poly(nvars, terms)
    )


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
