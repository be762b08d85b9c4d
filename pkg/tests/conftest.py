import pytest

from igraphkit.search import generate_nonisomorphic


@pytest.fixture(scope="session")
def corpus6():
    """All non-isomorphic graphs on 1..6 vertices, keyed by order."""
    return {n: generate_nonisomorphic(n) for n in range(1, 7)}


@pytest.fixture(scope="session")
def corpus7(corpus6):
    out = dict(corpus6)
    out[7] = generate_nonisomorphic(7)
    return out
