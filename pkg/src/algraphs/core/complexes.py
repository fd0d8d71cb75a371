# ==============================================================================
# complexes.py — Independence and strong-independence complexes
# ==============================================================================
# Purpose: Build the simplicial complexes of independent and strongly
#          independent sets of an algebra, extract their 1-skeletons and test the
#          matroid exchange axiom.
# Sections: Imports, Public exports, SimplicialComplex, Construction,
#           Skeleton, Matroid Test
# ==============================================================================

# ==============================================================================
# Imports
# ==============================================================================

# Standard Library --------------------------------------------------------------
from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations
from typing import Literal

# Internal ----------------------------------------------------------------------
from .algebra import FiniteAlgebra, independent_sets, subalgebra_lattice
from .exceptions import InputError
from .graph_model import SimpleGraph
from .logger import logger
from .settings import SearchLimits, resolve_limits

# ==============================================================================
# Public exports
# ==============================================================================
__all__ = [
    "ComplexKind",
    "SimplicialComplex",
    "build_complex",
    "one_skeleton",
    "MatroidCheck",
    "is_matroid",
]

ComplexKind = Literal["independence", "strong_independence"]


# ==============================================================================
# SimplicialComplex
# ==============================================================================

@dataclass(frozen=True)
class SimplicialComplex:
    """
    A downward-closed family of subsets of `ground_set`, stored by its facets.
    Facets are sorted tuples in lexicographic order.
    """

    parent: FiniteAlgebra
    kind: str
    ground_set: tuple[int, ...]
    facets: tuple[tuple[int, ...], ...]

    def __contains__(self, simplex: object) -> bool:
        if not isinstance(simplex, Iterable):
            return False
        members = set(simplex)
        return not members or any(members <= set(f) for f in self.facets)

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def simplices(self) -> Iterator[tuple[int, ...]]:
        """Every nonempty simplex once, ordered by size then members."""
        seen: set[tuple[int, ...]] = set()
        for size in range(1, self.dimension + 2):
            layer: set[tuple[int, ...]] = set()
            for facet in self.facets:
                layer.update(combinations(facet, size))
            for simplex in sorted(layer - seen):
                yield simplex
            seen |= layer

    def facet_labels(self) -> list[list[str]]:
        return [[self.parent.label(v) for v in f] for f in self.facets]


# ==============================================================================
# Construction
# ==============================================================================

def _strongly_independent(
    simplex: tuple[int, ...], lattice: list[tuple[frozenset[int], int]]
) -> bool:
    members = frozenset(simplex)
    return all(rank >= len(simplex) for sub, rank in lattice if members <= sub)


def _facets(simplices: set[tuple[int, ...]], ground: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    facets = []
    for s in simplices:
        rest = set(ground) - set(s)
        if not any(tuple(sorted((*s, x))) in simplices for x in rest):
            facets.append(s)
    return tuple(sorted(facets))


def build_complex(
    algebra: FiniteAlgebra,
    kind: ComplexKind,
    limits: SearchLimits | None = None,
) -> SimplicialComplex:
    """
    Build the complex of independent or strongly independent sets on A ∖ E(A).

    A set S is strongly independent when every subalgebra containing S has rank
    at least |S|; such sets are independent, so independent sets are the
    candidates.

    Raises:
        InputError: For an unknown kind.
        ResourceLimitExceeded: If a simplex exceeds max_simplex_size, or the
            lattice or rank searches hit their caps.
    """
    limits = resolve_limits(limits)
    if kind not in ("independence", "strong_independence"):
        raise InputError(f"unknown complex kind {kind!r}; expected independence or strong_independence")
    ground = tuple(sorted(algebra.universe - algebra.constants))
    simplices = set(independent_sets(algebra, limits.max_simplex_size, limits, cap_name="max_simplex_size"))
    if kind == "strong_independence":
        lattice = [(b.members, b.with_rank(limits).rank) for b in subalgebra_lattice(algebra, limits)]
        simplices = {s for s in simplices if _strongly_independent(s, lattice)}
    facets = _facets(simplices, ground)
    logger.debug(f"{kind} complex of {algebra.name}: {len(simplices)} simplices, {len(facets)} facets")
    return SimplicialComplex(algebra, kind, ground, facets)


# ==============================================================================
# Skeleton
# ==============================================================================

def one_skeleton(complex_: SimplicialComplex) -> SimpleGraph:
    """Graph on the ground set whose edges are the 1-simplices."""
    position = {v: i for i, v in enumerate(complex_.ground_set)}
    edges = {
        (position[a], position[b])
        for facet in complex_.facets
        for a, b in combinations(facet, 2)
    }
    labels = [complex_.parent.label(v) for v in complex_.ground_set]
    return SimpleGraph.from_edges(labels, sorted(edges))


# ==============================================================================
# Matroid Test
# ==============================================================================

@dataclass(frozen=True)
class MatroidCheck:
    holds: bool
    smaller: tuple[int, ...] | None = None
    larger: tuple[int, ...] | None = None
    """When the exchange axiom fails: no element of `larger` extends `smaller`."""

    def __bool__(self) -> bool:
        return self.holds


def is_matroid(complex_: SimplicialComplex) -> MatroidCheck:
    """
    Independent-set exchange axiom: for simplices I, J with |I| < |J| some
    x ∈ J ∖ I keeps I ∪ {x} a simplex. Checking |J| = |I| + 1 suffices, and the
    empty set is a simplex of every complex.
    """
    by_size: dict[int, list[tuple[int, ...]]] = {0: [()]}
    for simplex in complex_.simplices():
        by_size.setdefault(len(simplex), []).append(simplex)
    members = {s for layer in by_size.values() for s in layer}
    for size in sorted(by_size):
        for smaller in by_size[size]:
            for larger in by_size.get(size + 1, ()):
                if not any(
                    tuple(sorted((*smaller, x))) in members for x in larger if x not in smaller
                ):
                    return MatroidCheck(False, smaller, larger)
    return MatroidCheck(True)
