import pytest

from groupineq.catalog import load_catalog
from groupineq.perm_core import all_subgroups


@pytest.fixture(scope="session")
def cat():
    return load_catalog()


@pytest.fixture(scope="session")
def lattice_for(cat):
    """Memoised name -> SubgroupLattice so expensive lattices build once."""
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = all_subgroups(cat.realize(name))
        return cache[name]

    return get
