import pytest

from shellorder import FacetSequence, KSubset


def make_ksubset(n: int, digits: str) -> KSubset:
    return KSubset(n, tuple(int(c) for c in digits))


@pytest.fixture(scope="session")
def bjorner() -> FacetSequence:
    """Björner's 11-facet shellable complex, in its standard shelling order."""
    facets = "123 125 126 234 235 134 136 145 246 356 456".split()
    return FacetSequence(tuple(make_ksubset(6, d) for d in facets))
