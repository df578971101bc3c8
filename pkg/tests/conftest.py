import pytest
from hypothesis import settings

from gpcops import build_gp

settings.register_profile("ci", max_examples=60, derandomize=True, deadline=None)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def gp_graph():
    """Memoized GP builder shared across the suite."""
    cache = {}

    def build(n, k):
        if (n, k) not in cache:
            cache[(n, k)] = build_gp(n, k)
        return cache[(n, k)]

    return build


@pytest.fixture(scope="session")
def table40():
    """Full published-table reproduction, n <= 40; the expensive shared solve."""
    from gpcops.tables import full_table

    return full_table(40, slow=True)
