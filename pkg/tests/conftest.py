import os
import sys

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from ipdreams.core import PartialPermutation

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def two_dots():
    """Dots at (1, 2) and (3, 4) in the 4x4 triangle, our running example."""
    return PartialPermutation.from_dots(4, [(1, 2), (3, 4)])


@st.composite
def partial_perms(draw, max_n=5, min_n=1):
    n = draw(st.integers(min_n, max_n))
    free = list(range(1, n + 1))
    target = []
    for i in range(1, n + 1):
        opts = [None] + [c for c in free if c >= i]
        t = draw(st.sampled_from(opts))
        if t is not None:
            free.remove(t)
        target.append(t)
    return PartialPermutation(n, tuple(target))
