# ==============================================================================
# properties.py — Structural properties of finite algebras
# ==============================================================================
# Purpose: Decide the rank-monotonicity, MO, EPPO, group and independence-algebra
#          properties, returning a witness whenever a property fails.
# Sections: Imports, Public exports, Data Classes, Group Check, Rank Properties,
#           MO and EPPO, Independence Algebras, Dispatch
# ==============================================================================

# ==============================================================================
# Imports
# ==============================================================================

# Standard Library --------------------------------------------------------------
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Literal

# Third-Party -------------------------------------------------------------------
import numpy as np

# Internal ----------------------------------------------------------------------
from .algebra import FiniteAlgebra, Operation, first_generating_set, subalgebra_lattice
from .arith import is_prime_power
from .endomorphisms import enumerate_endomorphisms
from .exceptions import InputError
from .settings import SearchLimits, resolve_limits

# ==============================================================================
# Public exports
# ==============================================================================
__all__ = [
    "PropertyName",
    "PROPERTY_NAMES",
    "PropertyResult",
    "GroupSignature",
    "group_signature",
    "check_property",
]

PropertyName = Literal[
    "monotonic",
    "one_monotonic",
    "strictly_monotonic",
    "MO",
    "EPPO",
    "group",
    "independence_algebra",
]

PROPERTY_NAMES: tuple[str, ...] = (
    "monotonic",
    "one_monotonic",
    "strictly_monotonic",
    "MO",
    "EPPO",
    "group",
    "independence_algebra",
)


# ==============================================================================
# Data Classes
# ==============================================================================

@dataclass(frozen=True)
class PropertyResult:
    """Outcome of a property check; `witness` explains a failure in element labels."""

    name: str
    holds: bool
    witness: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class GroupSignature:
    mul: Operation
    inv: Operation
    one: Operation


# ==============================================================================
# Group Check
# ==============================================================================

def _is_associative(table: np.ndarray) -> bool:
    return bool(np.array_equal(table[table, :], table[:, table]))


def group_signature(algebra: FiniteAlgebra) -> GroupSignature | None:
    """
    The (binary, unary, nullary) operations that make `algebra` a group, or None.

    The binary operation must be associative, the constant a two-sided identity
    and the unary operation a two-sided inverse.
    """
    idx = np.arange(algebra.size)
    for mul in algebra.operations_of_arity(2):
        table = mul.table
        if not _is_associative(table):
            continue
        for one in algebra.operations_of_arity(0):
            e = one.constant
            if not (np.array_equal(table[e, :], idx) and np.array_equal(table[:, e], idx)):
                continue
            for inv in algebra.operations_of_arity(1):
                if np.all(table[idx, inv.table] == e) and np.all(table[inv.table, idx] == e):
                    return GroupSignature(mul, inv, one)
    return None


# ==============================================================================
# Rank Properties
# ==============================================================================

def _ranked_lattice(algebra: FiniteAlgebra, limits: SearchLimits):
    return [b.with_rank(limits) for b in subalgebra_lattice(algebra, limits)]


def _monotonic(algebra: FiniteAlgebra, limits: SearchLimits, strict: bool) -> PropertyResult:
    name = "strictly_monotonic" if strict else "monotonic"
    lattice = _ranked_lattice(algebra, limits)
    for small in lattice:
        for big in lattice:
            if not small.members < big.members:
                continue
            if small.rank > big.rank or (strict and small.rank == big.rank):
                return PropertyResult(
                    name,
                    False,
                    {
                        "smaller": small.labels,
                        "smaller_rank": small.rank,
                        "larger": big.labels,
                        "larger_rank": big.rank,
                    },
                )
    return PropertyResult(name, True)


def _one_monotonic(algebra: FiniteAlgebra, limits: SearchLimits) -> PropertyResult:
    lattice = _ranked_lattice(algebra, limits)
    for z, generated in enumerate(algebra.monogenic):
        for sub in lattice:
            if sub.members <= generated and not sub.is_trivial() and sub.rank != 1:
                return PropertyResult(
                    "one_monotonic",
                    False,
                    {
                        "monogenic": [algebra.label(i) for i in sorted(generated)],
                        "generator": algebra.label(z),
                        "subalgebra": sub.labels,
                        "rank": sub.rank,
                    },
                )
    return PropertyResult("one_monotonic", True)


# ==============================================================================
# MO and EPPO
# ==============================================================================

def _mo(algebra: FiniteAlgebra) -> PropertyResult:
    masks = algebra.monogenic_masks
    # contained[x, y] iff ⟨x⟩ ⊆ ⟨y⟩
    contained = ~np.any(masks[:, None, :] & ~masks[None, :, :], axis=2)
    comparable = contained | contained.T
    for z in range(algebra.size):
        inside = np.flatnonzero(masks[z])
        block = comparable[np.ix_(inside, inside)]
        if not block.all():
            i, j = np.argwhere(~block)[0]
            x, y = int(inside[i]), int(inside[j])
            return PropertyResult(
                "MO",
                False,
                {
                    "z": algebra.label(z),
                    "x": algebra.label(x),
                    "y": algebra.label(y),
                    "generated_x": [algebra.label(i) for i in sorted(algebra.monogenic[x])],
                    "generated_y": [algebra.label(i) for i in sorted(algebra.monogenic[y])],
                },
            )
    return PropertyResult("MO", True)


def _eppo(algebra: FiniteAlgebra) -> PropertyResult:
    if group_signature(algebra) is None:
        raise InputError(f"EPPO applies to groups only; {algebra.name!r} fails the group check")
    for x, generated in enumerate(algebra.monogenic):
        order = len(generated)
        if not is_prime_power(order):
            return PropertyResult("EPPO", False, {"element": algebra.label(x), "order": order})
    return PropertyResult("EPPO", True)


def _group(algebra: FiniteAlgebra) -> PropertyResult:
    signature = group_signature(algebra)
    if signature is None:
        return PropertyResult("group", False, {"reason": "no associative operation with identity and inverse"})
    return PropertyResult(
        "group", True, {"operations": [signature.mul.name, signature.inv.name, signature.one.name]}
    )


# ==============================================================================
# Independence Algebras
# ==============================================================================

def _exchange_failure(algebra: FiniteAlgebra, limits: SearchLimits) -> dict[str, Any] | None:
    # ⟨S ∪ {x}⟩ only depends on ⟨S⟩, so closed S suffice
    for sub in subalgebra_lattice(algebra, limits):
        base = sub.members
        for x in range(algebra.size):
            if x in base:
                continue
            for y in sorted(algebra.generated(base | {x}) - base):
                if x not in algebra.generated(base | {y}):
                    return {
                        "subalgebra": sub.labels,
                        "x": algebra.label(x),
                        "y": algebra.label(y),
                    }
    return None


def _independence_algebra(algebra: FiniteAlgebra, limits: SearchLimits) -> PropertyResult:
    failure = _exchange_failure(algebra, limits)
    if failure is not None:
        return PropertyResult("independence_algebra", False, {"exchange": failure})

    basis = first_generating_set(algebra, limits)
    # a basis generates, so an extension is unique whenever it exists
    extended = {tuple(f.images[b] for b in basis) for f in enumerate_endomorphisms(algebra, limits)}
    for images in product(range(algebra.size), repeat=len(basis)):
        if images not in extended:
            return PropertyResult(
                "independence_algebra",
                False,
                {
                    "basis": [algebra.label(b) for b in basis],
                    "unextendable_map": [algebra.label(y) for y in images],
                },
            )
    return PropertyResult("independence_algebra", True, {"basis": [algebra.label(b) for b in basis]})


# ==============================================================================
# Dispatch
# ==============================================================================

_CHECKS: dict[str, Callable[[FiniteAlgebra, SearchLimits], PropertyResult]] = {
    "monotonic": lambda a, lim: _monotonic(a, lim, strict=False),
    "strictly_monotonic": lambda a, lim: _monotonic(a, lim, strict=True),
    "one_monotonic": _one_monotonic,
    "MO": lambda a, lim: _mo(a),
    "EPPO": lambda a, lim: _eppo(a),
    "group": lambda a, lim: _group(a),
    "independence_algebra": _independence_algebra,
}


def check_property(
    algebra: FiniteAlgebra,
    prop: PropertyName,
    limits: SearchLimits | None = None,
) -> PropertyResult:
    """
    Decide `prop` for `algebra`.

    Raises:
        InputError: For an unknown property, or EPPO on a non-group.
        ResourceLimitExceeded: If rank, lattice or endomorphism searches hit a cap.
    """
    check = _CHECKS.get(prop)
    if check is None:
        raise InputError(f"unknown property {prop!r}; expected one of {', '.join(PROPERTY_NAMES)}")
    return check(algebra, resolve_limits(limits))
