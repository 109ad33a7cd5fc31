import pytest

from mpartition import enumerate_connected_chordal


@pytest.fixture(scope="session")
def corpus7():
    """All connected chordal graphs on at most 7 vertices (354 graphs)."""
    return list(enumerate_connected_chordal(7))


@pytest.fixture(scope="session")
def corpus8():
    """All connected chordal graphs on at most 8 vertices (1968 graphs)."""
    return list(enumerate_connected_chordal(8))
