import pytest

from sgclass import (CayleyTable, chain_table, cyclic_table, null_table,
                     taimanov_table)
from sgclass.harness import enumerate_commutative


@pytest.fixture
def z3():
    return cyclic_table(3)


@pytest.fixture
def z4():
    return cyclic_table(4)


@pytest.fixture
def l3():
    return chain_table(3)


@pytest.fixture
def n3():
    return null_table(3)


@pytest.fixture
def t5():
    return taimanov_table(5)


@pytest.fixture
def lz2():
    # left-zero: associative, not commutative
    return CayleyTable([[0, 0], [1, 1]])


@pytest.fixture(scope="session")
def corpus3():
    """One table per isomorphism class, orders 1..3."""
    return [t for n in (1, 2, 3) for t in enumerate_commutative(n, up_to_iso=True)]


@pytest.fixture(scope="session")
def corpus4():
    """One table per isomorphism class, orders 1..4."""
    return [t for n in (1, 2, 3, 4) for t in enumerate_commutative(n, up_to_iso=True)]


@pytest.fixture(scope="session")
def corpus5():
    """One table per isomorphism class, orders 1..5."""
    return [t for n in (1, 2, 3, 4, 5) for t in enumerate_commutative(n, up_to_iso=True)]
