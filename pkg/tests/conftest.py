import pytest
from hypothesis import settings

from jgarside import BraidParams, Budgets, certify_family

settings.register_profile("suite", deadline=None, derandomize=True,
                          max_examples=60)
settings.load_profile("suite")

# the divisor BFS of the largest swept monoids needs headroom beyond the
# interactive default
CERT_BUDGETS = Budgets(bfs_nodes=1_200_000)

SWEPT_PAIRS = ((1, 1), (1, 2), (1, 3), (2, 3), (1, 4),
               (3, 4), (1, 5), (2, 5), (3, 5), (4, 5))
CERT_PAIRS = tuple((n, m) for n, m in SWEPT_PAIRS if m <= 4)


@pytest.fixture(scope="session")
def certified():
    """Session-wide cache of certified star-star contexts, shared between
    the acceptance criteria and the unit tests so the expensive divisor
    enumerations run once."""
    cache = {}

    def get(n, m, kind="classical"):
        key = (n, m, kind)
        if key not in cache:
            cache[key] = certify_family(
                BraidParams(n, m, "star-star", kind), CERT_BUDGETS)
        return cache[key]

    return get
