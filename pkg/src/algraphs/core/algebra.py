# ==============================================================================
# algebra.py — Finite universal algebras given by operation tables
# ==============================================================================
# Purpose: Represent finite algebras by dense operation tables and provide the
#          closure operator, rank, subalgebra lattice, generating sets and
#          independent sets every graph and complex is built from.
# Sections: Imports, Public exports, Type Aliases, Data Classes, FiniteAlgebra,
#           Closure and Rank, Lattice, Generating Sets, Restriction
# ==============================================================================

# ==============================================================================
# Imports
# ==============================================================================

# Standard Library --------------------------------------------------------------
from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Literal

# Third-Party -------------------------------------------------------------------
import numpy as np
from numpy.typing import NDArray
from typing_extensions import TypeAlias

# Internal ----------------------------------------------------------------------
from .exceptions import InputError, ResourceLimitExceeded
from .logger import logger
from .settings import SearchLimits, resolve_limits

# ==============================================================================
# Public exports
# ==============================================================================
__all__ = [
    "ElementSet",
    "Operation",
    "FiniteAlgebra",
    "SubalgebraSet",
    "closure",
    "rank_of",
    "subalgebra_lattice",
    "generating_sets",
    "first_generating_set",
    "independent_sets",
    "restrict",
]

# ==============================================================================
# Type Aliases
# ==============================================================================

ElementSet: TypeAlias = frozenset[int]
"""A set of element indices of one algebra."""

GeneratingMode = Literal["minimal", "minimum"]


# ==============================================================================
# Data Classes
# ==============================================================================

@dataclass(frozen=True, eq=False)
class Operation:
    """
    A k-ary operation given by its full table.

    `table` has shape (n,)*k, so `table[i, j]` is the product of i and j for a
    binary operation and `table[()]` is the constant of a nullary one.
    """

    name: str
    arity: int
    table: NDArray[np.intp]

    def __post_init__(self) -> None:
        table = np.array(self.table, dtype=np.intp)
        table.setflags(write=False)
        object.__setattr__(self, "table", table)
        if self.arity < 0:
            raise InputError(f"operation {self.name!r} has negative arity")
        if table.ndim != self.arity:
            raise InputError(
                f"operation {self.name!r} of arity {self.arity} has a table of dimension {table.ndim}"
            )

    @property
    def constant(self) -> int:
        return int(self.table[()])

    def flat_table(self) -> list[int]:
        """The table in row-major order (a single entry when nullary)."""
        return [int(v) for v in self.table.ravel()]


@dataclass(frozen=True, eq=False)
class FiniteAlgebra:
    """
    A finite set with named finitary operations.

    Elements are the indices 0..size-1; `element_names` only label them. The
    algebra is immutable; closures are memoized per instance.
    """

    name: str
    size: int
    operations: tuple[Operation, ...]
    element_names: tuple[str, ...] = ()
    factors: tuple[FiniteAlgebra, ...] = ()
    """Factor algebras when built as a direct product, else empty."""

    _closures: dict[ElementSet, ElementSet] = field(default_factory=dict, init=False, repr=False)
    _ranks: dict[ElementSet, int] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self) -> None:
        if self.size < 1:
            raise InputError(f"algebra {self.name!r} must have at least one element")
        object.__setattr__(self, "operations", tuple(self.operations))
        names = tuple(self.element_names) or tuple(str(i) for i in range(self.size))
        if len(names) != self.size:
            raise InputError(f"algebra {self.name!r} has {len(names)} names for {self.size} elements")
        if len(set(names)) != len(names):
            raise InputError(f"algebra {self.name!r} has repeated element names")
        object.__setattr__(self, "element_names", names)

        seen: set[str] = set()
        for op in self.operations:
            if op.name in seen:
                raise InputError(f"algebra {self.name!r} repeats operation name {op.name!r}")
            seen.add(op.name)
            if op.table.shape != (self.size,) * op.arity:
                raise InputError(
                    f"operation {op.name!r} table has shape {op.table.shape}, expected {(self.size,) * op.arity}"
                )
            if op.table.size and (op.table.min() < 0 or op.table.max() >= self.size):
                raise InputError(f"operation {op.name!r} has an entry outside [0, {self.size})")

    # ==========================================================================
    # Lookup
    # ==========================================================================

    def __repr__(self) -> str:
        return f"FiniteAlgebra({self.name!r}, size={self.size})"

    def label(self, i: int) -> str:
        return self.element_names[i]

    def index(self, label: str) -> int:
        """Index of the element named `label`."""
        try:
            return self.element_names.index(label)
        except ValueError:
            raise InputError(f"algebra {self.name!r} has no element {label!r}") from None

    def operation(self, name: str) -> Operation:
        for op in self.operations:
            if op.name == name:
                return op
        raise InputError(f"algebra {self.name!r} has no operation {name!r}")

    def operations_of_arity(self, arity: int) -> list[Operation]:
        return [op for op in self.operations if op.arity == arity]

    def check_elements(self, elements: Iterable[int]) -> ElementSet:
        """Validate indices and return them as a frozenset."""
        result = frozenset(int(x) for x in elements)
        bad = [x for x in result if not 0 <= x < self.size]
        if bad:
            raise InputError(f"element index {min(bad)} out of range for {self.name!r} of size {self.size}")
        return result

    # ==========================================================================
    # Closure
    # ==========================================================================

    def generated(self, elements: Iterable[int]) -> ElementSet:
        """⟨S⟩ for an already validated S (memoized)."""
        key = frozenset(elements)
        cached = self._closures.get(key)
        if cached is None:
            cached = self._close(key)
            self._closures[key] = cached
        return cached

    def _close(self, seed: ElementSet) -> ElementSet:
        members = np.zeros(self.size, dtype=bool)
        members[list(seed)] = True
        for op in self.operations_of_arity(0):
            members[op.constant] = True
        positive = [op for op in self.operations if op.arity > 0]
        while True:
            current = np.flatnonzero(members)
            if current.size == 0:
                break
            grown = members.copy()
            for op in positive:
                grown[op.table[np.ix_(*([current] * op.arity))].ravel()] = True
            if np.array_equal(grown, members):
                break
            members = grown
        return frozenset(int(x) for x in np.flatnonzero(members))

    @cached_property
    def constants(self) -> ElementSet:
        """E(A): the subalgebra generated by the constants (empty without nullary operations)."""
        return self.generated(())

    @cached_property
    def universe(self) -> ElementSet:
        return frozenset(range(self.size))

    @cached_property
    def monogenic(self) -> tuple[ElementSet, ...]:
        """⟨x⟩ for every element x, indexed by x."""
        return tuple(self.generated((x,)) for x in range(self.size))

    @cached_property
    def monogenic_masks(self) -> NDArray[np.bool_]:
        """Boolean matrix M with M[x, y] true iff y ∈ ⟨x⟩."""
        mask = np.zeros((self.size, self.size), dtype=bool)
        for x, sub in enumerate(self.monogenic):
            mask[x, list(sub)] = True
        return mask


@dataclass(frozen=True)
class SubalgebraSet:
    """A closed subset of `parent`, with its rank once computed."""

    parent: FiniteAlgebra
    members: ElementSet
    rank: int | None = field(default=None, compare=False)

    @property
    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    @property
    def labels(self) -> list[str]:
        return [self.parent.label(i) for i in self.sorted_members]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: object) -> bool:
        return x in self.members

    def is_trivial(self) -> bool:
        """True for ∅ and for E(A)."""
        return not self.members or self.members == self.parent.constants

    def with_rank(self, limits: SearchLimits | None = None) -> SubalgebraSet:
        if self.rank is not None:
            return self
        return SubalgebraSet(self.parent, self.members, rank_of(self.parent, self, limits))


def _sort_key(members: ElementSet) -> tuple[int, tuple[int, ...]]:
    return len(members), tuple(sorted(members))


# ==============================================================================
# Closure and Rank
# ==============================================================================

def closure(algebra: FiniteAlgebra, elements: Iterable[int]) -> SubalgebraSet:
    """
    The least closed superset of `elements`.

    Raises:
        InputError: If an index is out of range.
    """
    seed = algebra.check_elements(elements)
    return SubalgebraSet(algebra, algebra.generated(seed))


def rank_of(
    algebra: FiniteAlgebra,
    subalgebra: SubalgebraSet | ElementSet,
    limits: SearchLimits | None = None,
) -> int:
    """
    Smallest k such that some k-subset of the subalgebra generates it.

    Subsets are tried in increasing size; elements of E(A) are never needed.

    Raises:
        InputError: If the set is not closed.
        ResourceLimitExceeded: If no generating set of size ≤ max_subset_size exists.
    """
    limits = resolve_limits(limits)
    members = subalgebra.members if isinstance(subalgebra, SubalgebraSet) else frozenset(subalgebra)
    cached = algebra._ranks.get(members)
    if cached is not None:
        return cached
    if algebra.generated(members) != members:
        raise InputError(f"{sorted(members)} is not a subalgebra of {algebra.name!r}")

    candidates = sorted(members - algebra.constants)
    rank = 0
    if algebra.constants != members:
        # the full candidate list always generates, so the loop breaks
        for k in range(1, len(candidates) + 1):
            limits.require("max_subset_size", k)
            if any(algebra.generated(c) == members for c in combinations(candidates, k)):
                rank = k
                break
    algebra._ranks[members] = rank
    return rank


# ==============================================================================
# Lattice
# ==============================================================================

def subalgebra_lattice(
    algebra: FiniteAlgebra, limits: SearchLimits | None = None
) -> list[SubalgebraSet]:
    """
    Every subalgebra exactly once, ordered by size then members.

    Join-closure of E(A) and the monogenic subalgebras under ⟨P ∪ Q⟩.
    For algebras without constants this includes the empty subalgebra.

    Raises:
        ResourceLimitExceeded: If the lattice grows beyond max_lattice_size.
    """
    limits = resolve_limits(limits)
    found: set[ElementSet] = {algebra.constants, *algebra.monogenic}
    frontier = list(found)
    while frontier:
        limits.require("max_lattice_size", len(found))
        fresh: list[ElementSet] = []
        known = list(found)
        for p in frontier:
            for q in known:
                if p <= q or q <= p:
                    continue
                join = algebra.generated(p | q)
                if join not in found:
                    found.add(join)
                    fresh.append(join)
        frontier = fresh
    limits.require("max_lattice_size", len(found))
    logger.debug(f"lattice of {algebra.name}: {len(found)} subalgebras")
    return [SubalgebraSet(algebra, members) for members in sorted(found, key=_sort_key)]


# ==============================================================================
# Generating Sets
# ==============================================================================

def independent_sets(
    algebra: FiniteAlgebra,
    max_size: int | None = None,
    limits: SearchLimits | None = None,
    cap_name: str = "max_subset_size",
) -> Iterator[tuple[int, ...]]:
    """
    Yield every nonempty independent set (s ∉ ⟨S∖{s}⟩ for all s ∈ S).

    Sets come out as sorted tuples in depth-first lexicographic order. Elements
    of E(A) are never independent.

    Raises:
        ResourceLimitExceeded: If an independent set of size `max_size` can be
            extended, i.e. the enumeration would be truncated.
    """
    limits = resolve_limits(limits)
    cap = limits.max_subset_size if max_size is None else max_size
    candidates = sorted(algebra.universe - algebra.constants)

    def extend(current: tuple[int, ...], start: int) -> Iterator[tuple[int, ...]]:
        span = algebra.generated(current)
        for pos in range(start, len(candidates)):
            t = candidates[pos]
            if t in span:
                continue
            grown = current + (t,)
            if any(s in algebra.generated(grown[:i] + grown[i + 1:]) for i, s in enumerate(current)):
                continue
            if len(grown) > cap:
                raise ResourceLimitExceeded(
                    cap_name, cap, f"independent set larger than {cap} in {algebra.name}"
                )
            yield grown
            yield from extend(grown, pos + 1)

    yield from extend((), 0)


def generating_sets(
    algebra: FiniteAlgebra,
    mode: GeneratingMode,
    limits: SearchLimits | None = None,
) -> list[ElementSet]:
    """
    All inclusion-minimal (`minimal`) or all minimum-cardinality (`minimum`)
    generating sets, sorted by size then members.

    Raises:
        ResourceLimitExceeded: If the subset search exceeds max_subset_size.
    """
    limits = resolve_limits(limits)
    whole = algebra.universe
    if mode == "minimum":
        r = rank_of(algebra, whole, limits)
        candidates = sorted(whole - algebra.constants)
        found = [frozenset(c) for c in combinations(candidates, r) if algebra.generated(c) == whole]
    elif mode == "minimal":
        if algebra.constants == whole:
            return [frozenset()]
        found = [
            frozenset(s)
            for s in independent_sets(algebra, limits=limits)
            if algebra.generated(s) == whole
        ]
    else:
        raise InputError(f"unknown generating-set mode {mode!r}")
    return sorted(found, key=_sort_key)


def first_generating_set(algebra: FiniteAlgebra, limits: SearchLimits | None = None) -> tuple[int, ...]:
    """The lexicographically first generating set of minimum cardinality."""
    whole = algebra.universe
    r = rank_of(algebra, whole, limits)
    candidates = sorted(whole - algebra.constants)
    return next(c for c in combinations(candidates, r) if algebra.generated(c) == whole)


# ==============================================================================
# Restriction
# ==============================================================================

def restrict(algebra: FiniteAlgebra, subalgebra: SubalgebraSet | ElementSet) -> FiniteAlgebra:
    """
    The subalgebra as an algebra in its own right, re-indexed 0..|B|-1 in
    increasing order of the parent indices. Element names are kept.

    Raises:
        InputError: If the set is not closed or is empty.
    """
    members = subalgebra.members if isinstance(subalgebra, SubalgebraSet) else frozenset(subalgebra)
    if algebra.generated(members) != members:
        raise InputError(f"{sorted(members)} is not a subalgebra of {algebra.name!r}")
    if not members:
        raise InputError("the empty subalgebra cannot be made into an algebra")
    order = np.array(sorted(members), dtype=np.intp)
    reindex = np.full(algebra.size, -1, dtype=np.intp)
    reindex[order] = np.arange(order.size)
    operations = tuple(
        Operation(op.name, op.arity, reindex[op.table[np.ix_(*([order] * op.arity))]])
        if op.arity
        else Operation(op.name, 0, reindex[op.table])
        for op in algebra.operations
    )
    labels = tuple(algebra.label(int(i)) for i in order)
    return FiniteAlgebra(
        name=f"{algebra.name}[{','.join(labels)}]",
        size=int(order.size),
        operations=operations,
        element_names=labels,
    )
