# ==============================================================================
# catalog.py — Populations of algebras the suites are checked on
# ==============================================================================
# Purpose: Deterministic families of groups, all small semigroups up to
#          (anti-)isomorphism, and the independence-algebra test set.
# Sections: Imports, Public exports, Limits, Groups, Semigroups,
#           Independence Algebras, Families
# ==============================================================================

# ==============================================================================
# Imports
# ==============================================================================

# Standard Library --------------------------------------------------------------
from __future__ import annotations

from itertools import permutations, product
from typing import Literal

# Third-Party -------------------------------------------------------------------
import numpy as np
from numpy.typing import NDArray

# Internal ----------------------------------------------------------------------
from ..core.algebra import FiniteAlgebra
from ..core.arith import prime_factorization
from ..core.builders import (
    alternating,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    monogenic_semigroup,
    quasigroup_unary,
    quaternion8,
    semigroup_from_table,
    symmetric,
    volkov_semigroup,
)
from ..core.exceptions import InputError, ResourceLimitExceeded
from ..core.logger import logger

# ==============================================================================
# Public exports
# ==============================================================================
__all__ = [
    "Family",
    "FAMILIES",
    "DEFAULT_MAX_ORDER",
    "GROUP_CATALOG_CAP",
    "SEMIGROUP_CATALOG_CAP",
    "LOOP5_TABLE",
    "group_catalog",
    "semigroup_catalog",
    "independence_catalog",
    "catalog",
]

Family = Literal["groups", "semigroups", "independence", "all"]
FAMILIES: tuple[str, ...] = ("groups", "semigroups", "independence", "all")


# ==============================================================================
# Limits
# ==============================================================================

GROUP_CATALOG_CAP = 64
SEMIGROUP_CATALOG_CAP = 3

DEFAULT_MAX_ORDER: dict[str, int] = {
    "groups": 24,
    "semigroups": 3,
    "independence": 27,
    "all": 24,
}


def _check_order(max_order: int, cap: int, limit: str) -> None:
    if max_order < 1:
        raise InputError(f"max_order must be positive, got {max_order}")
    if max_order > cap:
        raise ResourceLimitExceeded(limit, cap, f"{limit}={cap} exceeded (asked for {max_order})")


# ==============================================================================
# Groups
# ==============================================================================

def _primes_upto(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if prime_factorization(p) == {p: 1}]


def _cyclic_factorisations(max_order: int) -> list[tuple[int, ...]]:
    """Non-decreasing tuples of at least two cyclic orders ≥ 2 with product ≤ max_order."""
    found: list[tuple[int, ...]] = []

    def extend(current: tuple[int, ...], product_so_far: int) -> None:
        if len(current) >= 2:
            found.append(current)
        start = current[-1] if current else 2
        for m in range(start, max_order // product_so_far + 1):
            extend(current + (m,), product_so_far * m)

    extend((), 1)
    # equal prime factors are the elementary abelian groups, built separately
    return sorted(
        (t for t in found if not (len(set(t)) == 1 and prime_factorization(t[0]) == {t[0]: 1})),
        key=lambda t: (int(np.prod(t)), t),
    )


def group_catalog(max_order: int = 24, include_a5: bool = False) -> list[FiniteAlgebra]:
    """
    Cyclic groups, dihedral groups of order ≥ 6, elementary abelian groups of
    rank ≥ 2, direct products of cyclic groups, Q8, S3 and S4, all of order
    at most `max_order`. A5 is added only when asked for.

    Raises:
        InputError: If max_order < 1.
        ResourceLimitExceeded: If max_order exceeds GROUP_CATALOG_CAP.
    """
    _check_order(max_order, GROUP_CATALOG_CAP, "group_catalog_order")
    groups = [cyclic(n) for n in range(1, max_order + 1)]
    groups += [dihedral(n) for n in range(6, max_order + 1, 2)]
    for p in _primes_upto(max_order):
        k = 2
        while p**k <= max_order:
            groups.append(elementary_abelian(p, k))
            k += 1
    groups += [direct_product(*(cyclic(m) for m in t)) for t in _cyclic_factorisations(max_order)]
    if max_order >= 8:
        groups.append(quaternion8())
    if max_order >= 6:
        groups.append(symmetric(3))
    if max_order >= 24:
        groups.append(symmetric(4))
    if include_a5:
        groups.append(alternating(5))
    logger.debug(f"group catalog up to order {max_order}: {len(groups)} groups")
    return groups


# ==============================================================================
# Semigroups
# ==============================================================================

def _associative_tables(n: int) -> NDArray[np.intp]:
    tables = np.array(list(product(range(n), repeat=n * n)), dtype=np.intp).reshape(-1, n, n)
    k = np.arange(len(tables))[:, None, None, None]
    x = np.arange(n)[None, :, None, None]
    z = np.arange(n)[None, None, None, :]
    # left[k, x, y, z] = (xy)z and right[k, x, y, z] = x(yz) in table k
    left = tables[k, tables[:, :, :, None], z]
    right = tables[k, x, tables[:, None, :, :]]
    return tables[(left == right).all(axis=(1, 2, 3))]


def _canonical(table: NDArray[np.intp], perms: list[NDArray[np.intp]]) -> tuple[int, ...]:
    """Smallest relabelling of the table or of its transpose."""
    best: tuple[int, ...] | None = None
    for source in (table, table.T):
        for p in perms:
            inverse = np.argsort(p)
            relabelled = p[source[np.ix_(inverse, inverse)]]
            key = tuple(int(v) for v in relabelled.ravel())
            if best is None or key < best:
                best = key
    assert best is not None
    return best


def _semigroups_of_order(n: int) -> list[FiniteAlgebra]:
    perms = [np.array(p, dtype=np.intp) for p in permutations(range(n))]
    classes = sorted({_canonical(t, perms) for t in _associative_tables(n)})
    return [
        semigroup_from_table(f"Sg{n}.{i}", np.array(key, dtype=np.intp).reshape(n, n))
        for i, key in enumerate(classes, start=1)
    ]


def semigroup_catalog(max_order: int = 3) -> list[FiniteAlgebra]:
    """
    Every semigroup on at most `max_order` elements, one per class up to
    isomorphism and anti-isomorphism, then the monogenic semigroups M(m, r)
    with m + r - 1 ≤ 6 and the three-element semigroup {a, b, e}.

    Raises:
        InputError: If max_order < 1.
        ResourceLimitExceeded: If max_order exceeds SEMIGROUP_CATALOG_CAP.
    """
    _check_order(max_order, SEMIGROUP_CATALOG_CAP, "semigroup_catalog_order")
    semigroups: list[FiniteAlgebra] = []
    for n in range(1, max_order + 1):
        found = _semigroups_of_order(n)
        logger.debug(f"{len(found)} semigroups of order {n} up to (anti-)isomorphism")
        semigroups += found
    semigroups += [monogenic_semigroup(m, r) for m in range(1, 7) for r in range(1, 8 - m)]
    semigroups.append(volkov_semigroup())
    return semigroups


# ==============================================================================
# Independence Algebras
# ==============================================================================

LOOP5_TABLE = np.array(
    [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ],
    dtype=np.intp,
)
"""A Latin square of order 5 with identity 0 that is not a group table."""


def independence_catalog(max_order: int = 27) -> list[FiniteAlgebra]:
    """
    Elementary abelian 2- and 3-groups, the unary algebras of right
    multiplications of the groups of order ≤ 4, and the same construction on
    a non-associative loop of order 5 as a negative control.
    """
    if max_order < 1:
        raise InputError(f"max_order must be positive, got {max_order}")
    members = [cyclic(2), *(elementary_abelian(2, k) for k in (2, 3, 4))]
    members += [cyclic(3), *(elementary_abelian(3, k) for k in (2, 3))]
    members += [
        quasigroup_unary(g)
        for g in (cyclic(1), cyclic(2), cyclic(3), cyclic(4), elementary_abelian(2, 2))
    ]
    members.append(quasigroup_unary(LOOP5_TABLE, name="Q1(L5)"))
    return [a for a in members if a.size <= max_order]


# ==============================================================================
# Families
# ==============================================================================

def catalog(family: Family, max_order: int | None = None, include_a5: bool = False) -> list[FiniteAlgebra]:
    """
    The algebras of a family, first occurrence kept when names repeat.

    For `all`, the semigroup part is capped at SEMIGROUP_CATALOG_CAP.

    Raises:
        InputError: For an unknown family or a non-positive order.
        ResourceLimitExceeded: If a catalog cap is exceeded.
    """
    if family not in FAMILIES:
        raise InputError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    order = DEFAULT_MAX_ORDER[family] if max_order is None else max_order
    match family:
        case "groups":
            members = group_catalog(order, include_a5)
        case "semigroups":
            members = semigroup_catalog(order)
        case "independence":
            members = independence_catalog(order)
        case _:
            members = group_catalog(order, include_a5)
            members += semigroup_catalog(min(order, SEMIGROUP_CATALOG_CAP))
            members += independence_catalog(order)
    unique: dict[str, FiniteAlgebra] = {}
    for algebra in members:
        unique.setdefault(algebra.name, algebra)
    return list(unique.values())
