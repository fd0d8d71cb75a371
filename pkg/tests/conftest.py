# ==============================================================================
# conftest.py — Shared algebras for the test suite
# ==============================================================================

import pytest

from algraphs.core.algebra import FiniteAlgebra
from algraphs.core.builders import (
    cyclic,
    direct_product,
    monogenic_semigroup,
    quasigroup_unary,
    quaternion8,
    symmetric,
    volkov_semigroup,
)
from algraphs.verify.catalog import LOOP5_TABLE


@pytest.fixture
def c6() -> FiniteAlgebra:
    return cyclic(6)


@pytest.fixture
def klein() -> FiniteAlgebra:
    """C2 × C2 with elements (0,0), (0,1), (1,0), (1,1)."""
    return direct_product(cyclic(2), cyclic(2))


@pytest.fixture
def m41() -> FiniteAlgebra:
    """The monogenic semigroup with x^4 = x^5."""
    return monogenic_semigroup(4, 1)


@pytest.fixture
def volkov() -> FiniteAlgebra:
    return volkov_semigroup()


@pytest.fixture
def s3() -> FiniteAlgebra:
    return symmetric(3)


@pytest.fixture
def q8() -> FiniteAlgebra:
    return quaternion8()


@pytest.fixture
def loop5() -> FiniteAlgebra:
    return quasigroup_unary(LOOP5_TABLE, name="Q1(L5)")
