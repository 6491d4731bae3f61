import pytest

from graphenergy.search import SearchSpec, enumerate_graphs


@pytest.fixture(scope="session")
def graphs_by_n():
    """One representative per isomorphism class, for n = 1..8.

    Computed once per test session; the n=8 level is the expensive part.
    """
    return {n: list(enumerate_graphs(SearchSpec(n=n))) for n in range(1, 9)}
