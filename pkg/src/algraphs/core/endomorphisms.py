# ==============================================================================
# endomorphisms.py — Endomorphism enumeration and power-map analysis
# ==============================================================================
# Purpose: Enumerate all self-maps of a finite algebra that commute with every
#          operation, and classify them against the power maps x ↦ x^k.
# Sections: Imports, Public exports, Endomorphism, Commutation,
#           Exhaustive Search, Backtracking, Power Maps
# ==============================================================================

# ==============================================================================
# Imports
# ==============================================================================

# Standard Library --------------------------------------------------------------
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from weakref import WeakKeyDictionary

# Third-Party -------------------------------------------------------------------
import numpy as np
from numpy.typing import NDArray

# Internal ----------------------------------------------------------------------
from .algebra import FiniteAlgebra, Operation, first_generating_set
from .exceptions import InputError, ResourceLimitExceeded
from .logger import logger
from .settings import SearchLimits, resolve_limits

# ==============================================================================
# Public exports
# ==============================================================================
__all__ = [
    "Endomorphism",
    "is_endomorphism",
    "enumerate_endomorphisms",
    "power_maps",
    "maps_into_monogenic",
]


# ==============================================================================
# Endomorphism
# ==============================================================================

@dataclass(frozen=True)
class Endomorphism:
    """A self-map of `parent`; `images[i]` is the image of element i."""

    parent: FiniteAlgebra
    images: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.images[x]

    def then(self, other: Endomorphism) -> Endomorphism:
        """Apply `self` first, then `other`."""
        return Endomorphism(self.parent, tuple(other.images[y] for y in self.images))

    def is_identity(self) -> bool:
        return self.images == tuple(range(self.parent.size))

    def labels(self) -> list[str]:
        return [self.parent.label(y) for y in self.images]


# ==============================================================================
# Commutation
# ==============================================================================

def _commutes(op: Operation, images: NDArray[np.intp], domain: NDArray[np.intp] | None = None) -> bool:
    """f(op(t)) == op(f(t)) for every tuple t over `domain` (default: everything)."""
    if op.arity == 0:
        return bool(images[op.constant] == op.constant)
    idx = np.arange(images.size) if domain is None else domain
    lhs = images[op.table[np.ix_(*([idx] * op.arity))]]
    rhs = op.table[np.ix_(*([images[idx]] * op.arity))]
    return bool(np.array_equal(lhs, rhs))


def is_endomorphism(algebra: FiniteAlgebra, images: tuple[int, ...] | list[int]) -> bool:
    """Direct table check of the commutation law."""
    arr = np.asarray(images, dtype=np.intp)
    if arr.shape != (algebra.size,):
        raise InputError(f"expected {algebra.size} images, got {arr.size}")
    if arr.min() < 0 or arr.max() >= algebra.size:
        raise InputError("image index out of range")
    return all(_commutes(op, arr) for op in algebra.operations)


# ==============================================================================
# Exhaustive Search
# ==============================================================================

def _exhaustive(algebra: FiniteAlgebra) -> list[tuple[int, ...]]:
    n = algebra.size
    maps = np.array(list(product(range(n), repeat=n)), dtype=np.intp).reshape(-1, n)
    for op in algebra.operations:
        if maps.shape[0] == 0:
            break
        if op.arity == 0:
            keep = maps[:, op.constant] == op.constant
        else:
            k = op.arity
            lhs = maps[(slice(None), op.table)]
            axes = tuple(
                maps.reshape((maps.shape[0],) + tuple(n if b == a else 1 for b in range(k)))
                for a in range(k)
            )
            rhs = op.table[axes]
            keep = (lhs == rhs).reshape(maps.shape[0], -1).all(axis=1)
        maps = maps[keep]
    return [tuple(int(v) for v in row) for row in maps]


# ==============================================================================
# Backtracking
# ==============================================================================

@dataclass(frozen=True)
class _Level:
    """Elements that become determined once one more generator image is fixed."""

    generator: int | None
    steps: tuple[tuple[int, Operation, tuple[int, ...]], ...]
    span: NDArray[np.intp]


def _derivation_levels(algebra: FiniteAlgebra, generators: tuple[int, ...]) -> list[_Level]:
    """
    Straight-line programs for ⟨∅⟩ ⊆ ⟨g1⟩ ⊆ ⟨g1,g2⟩ ⊆ ...: every element of a
    level is recorded with the operation and earlier arguments producing it.
    """
    known: list[int] = []
    seen: set[int] = set()
    levels: list[_Level] = []
    for generator in (None, *generators):
        steps: list[tuple[int, Operation, tuple[int, ...]]] = []
        if generator is None:
            for op in algebra.operations_of_arity(0):
                if op.constant not in seen:
                    seen.add(op.constant)
                    known.append(op.constant)
                    steps.append((op.constant, op, ()))
        elif generator not in seen:
            seen.add(generator)
            known.append(generator)
        changed = True
        while changed:
            changed = False
            for op in algebra.operations:
                if op.arity == 0:
                    continue
                for args in product(list(known), repeat=op.arity):
                    d = int(op.table[args])
                    if d not in seen:
                        seen.add(d)
                        known.append(d)
                        steps.append((d, op, args))
                        changed = True
        levels.append(_Level(generator, tuple(steps), np.array(sorted(seen), dtype=np.intp)))
    return levels


def _backtrack(algebra: FiniteAlgebra, limits: SearchLimits) -> tuple[list[tuple[int, ...]], int]:
    generators = first_generating_set(algebra, limits)
    levels = _derivation_levels(algebra, generators)
    images = np.full(algebra.size, -1, dtype=np.intp)
    found: list[tuple[int, ...]] = []
    nodes = 0

    def apply(level: _Level) -> bool:
        for d, op, args in level.steps:
            images[d] = op.table[tuple(images[a] for a in args)] if args else op.constant
        return all(_commutes(op, images, level.span) for op in algebra.operations)

    def descend(depth: int) -> None:
        nonlocal nodes
        if depth == len(levels):
            found.append(tuple(int(v) for v in images))
            return
        level = levels[depth]
        if level.generator is None or images[level.generator] >= 0:
            if apply(level):
                descend(depth + 1)
            return
        for y in range(algebra.size):
            nodes += 1
            if nodes > limits.max_endomorphism_nodes:
                raise ResourceLimitExceeded("max_endomorphism_nodes", limits.max_endomorphism_nodes)
            images[level.generator] = y
            if apply(level):
                descend(depth + 1)
            for d, _, _ in level.steps:
                images[d] = -1
            images[level.generator] = -1

    descend(0)
    logger.debug(f"endomorphisms of {algebra.name}: {len(found)} found in {nodes} nodes")
    return found, nodes


# results per algebra instance with the backtracking nodes spent (None when
# found exhaustively); algebras are immutable
_CACHE: WeakKeyDictionary[FiniteAlgebra, tuple[tuple[Endomorphism, ...], int | None]] = WeakKeyDictionary()


def enumerate_endomorphisms(algebra: FiniteAlgebra, limits: SearchLimits | None = None) -> list[Endomorphism]:
    """
    All endomorphisms, each once, in lexicographic order of image arrays.

    Small algebras filter all n^n maps; larger ones backtrack over the images
    of a minimum generating set, fixing each closure level and checking the
    operations on it before going deeper. A cached result is reused only if
    the search that produced it fits the current node cap.

    Raises:
        ResourceLimitExceeded: If the backtracking exceeds max_endomorphism_nodes.
    """
    limits = resolve_limits(limits)
    backtracking = algebra.size > limits.exhaustive_endomorphism_order
    cached = _CACHE.get(algebra)
    if cached is not None:
        found, nodes = cached
        if not backtracking:
            return list(found)
        if nodes is not None:
            if nodes > limits.max_endomorphism_nodes:
                raise ResourceLimitExceeded("max_endomorphism_nodes", limits.max_endomorphism_nodes)
            return list(found)
    if backtracking:
        maps, nodes = _backtrack(algebra, limits)
    else:
        maps, nodes = _exhaustive(algebra), None
    result = tuple(Endomorphism(algebra, images) for images in sorted(maps))
    _CACHE[algebra] = (result, nodes)
    return list(result)


# ==============================================================================
# Power Maps
# ==============================================================================

def power_maps(algebra: FiniteAlgebra) -> list[tuple[int, ...]] | None:
    """
    The distinct maps x ↦ x^k (k ≥ 1) of an algebra with exactly one binary
    operation, or None when that notion does not apply.
    """
    binaries = algebra.operations_of_arity(2)
    if len(binaries) != 1:
        return None
    mul = binaries[0].table
    base = np.arange(algebra.size)
    current = base.copy()
    seen: dict[tuple[int, ...], None] = {}
    # x^(k+1) = x^k · x; the sequence of maps is eventually periodic
    while (key := tuple(int(v) for v in current)) not in seen:
        seen[key] = None
        current = mul[current, base]
    return list(seen)


def maps_into_monogenic(endomorphism: Endomorphism) -> bool:
    """True if f(x) ∈ ⟨x⟩ for every x."""
    algebra = endomorphism.parent
    return all(y in algebra.monogenic[x] for x, y in enumerate(endomorphism.images))
