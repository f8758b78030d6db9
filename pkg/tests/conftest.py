"""Shared fixtures: the standard suite of simplicial complexes used by the
intertwining and Tor-consistency tests."""

import pytest

from permcomplex import simplicial


def standard_suite():
    """Full simplices, skeletons, polygon boundaries, and 20 seeded random
    complexes, all on at most 5 vertices (37 complexes)."""
    suite = []
    for m in range(2, 6):
        suite.append(simplicial.full_simplex(m))
        for d in range(m - 1):
            suite.append(simplicial.skeleton(m, d))
    for cycle in ([1, 2, 3, 4], [1, 3, 2, 4], [1, 2, 3, 4, 5]):
        suite.append(simplicial.polygon_boundary(cycle))
    suite.extend(simplicial.random_suite(seed=0, count=20, max_m=5))
    return suite


@pytest.fixture(scope="session")
def complex_suite():
    return standard_suite()
