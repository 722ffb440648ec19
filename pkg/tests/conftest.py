import pytest

from toriclogk import LatticePolytope, build, builtin_polytope


@pytest.fixture
def p2() -> LatticePolytope:
    return builtin_polytope("p2")


@pytest.fixture
def bl1p2() -> LatticePolytope:
    return builtin_polytope("bl1p2")


@pytest.fixture
def bl2p2() -> LatticePolytope:
    return builtin_polytope("bl2p2")


@pytest.fixture
def square() -> LatticePolytope:
    return builtin_polytope("p1xp1")


@pytest.fixture
def segment01() -> LatticePolytope:
    return build([(0,), (1,)])
