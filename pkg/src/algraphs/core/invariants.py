# ==============================================================================
# invariants.py — Exact graph invariants
# ==============================================================================
# Purpose: Compute clique number, chromatic number, matching number, spread and
#          diameter exactly, under the vertex caps of `SearchLimits`.
# Sections: Imports, Public exports, Invariant, Clique, Colouring, Matching,
#           Spread, Diameter, Dispatch
# ==============================================================================

# ==============================================================================
# Imports
# ==============================================================================

# Standard Library --------------------------------------------------------------
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Literal

# Third-Party -------------------------------------------------------------------
import networkx as nx

# Internal ----------------------------------------------------------------------
from .exceptions import InputError
from .graph_classes import twin_reduction
from .graph_model import SimpleGraph
from .logger import logger
from .settings import SearchLimits, resolve_limits

# ==============================================================================
# Public exports
# ==============================================================================
__all__ = [
    "INVARIANT_NAMES",
    "InvariantName",
    "Invariant",
    "clique_number",
    "maximum_clique",
    "chromatic_number",
    "matching_number",
    "spread",
    "diameter",
    "graph_invariant",
    "is_weakly_perfect",
]

InvariantName = Literal["clique", "chromatic", "matching", "spread", "diameter"]
INVARIANT_NAMES: tuple[str, ...] = ("clique", "chromatic", "matching", "spread", "diameter")


# ==============================================================================
# Invariant
# ==============================================================================

@dataclass(frozen=True)
class Invariant:
    """
    An exact value, a lower bound when a search cap was reached
    (`bound == "at_least"`), or infinity (`bound == "infinite"`).
    """

    name: str
    value: int | None
    bound: Literal["exact", "at_least", "infinite"] = "exact"

    def __str__(self) -> str:
        if self.bound == "infinite":
            return "inf"
        return f">={self.value}" if self.bound == "at_least" else str(self.value)

    def __int__(self) -> int:
        if self.value is None:
            raise ValueError(f"{self.name} is infinite")
        return self.value


# ==============================================================================
# Clique
# ==============================================================================

def _max_weight_clique(nbrs: tuple[int, ...], weights: tuple[int, ...]) -> tuple[int, list[int]]:
    """Branch and bound; the bound sums the heaviest vertex of each greedy colour class."""
    best_weight = 0
    best: list[int] = []

    def colour_order(candidates: int) -> list[tuple[int, int]]:
        order: list[tuple[int, int]] = []
        uncoloured = candidates
        total = 0
        while uncoloured:
            available = uncoloured
            members: list[int] = []
            while available:
                v = (available & -available).bit_length() - 1
                available &= ~(1 << v) & ~nbrs[v]
                uncoloured &= ~(1 << v)
                members.append(v)
            total += max(weights[v] for v in members)
            order.extend((v, total) for v in members)
        return order

    def expand(clique: list[int], weight: int, candidates: int) -> None:
        nonlocal best_weight, best
        for v, bound in reversed(colour_order(candidates)):
            if weight + bound <= best_weight:
                return
            grown = weight + weights[v]
            if grown > best_weight:
                best_weight, best = grown, clique + [v]
            rest = candidates & nbrs[v]
            if rest:
                expand(clique + [v], grown, rest)
            candidates &= ~(1 << v)

    if nbrs:
        expand([], 0, (1 << len(nbrs)) - 1)
    return best_weight, sorted(best)


def maximum_clique(graph: SimpleGraph, limits: SearchLimits | None = None) -> list[int]:
    """
    A maximum clique, as sorted vertex indices. True twins are collapsed first
    and the quotient is searched with class sizes as weights.
    """
    resolve_limits(limits).require("max_clique_order", graph.order)
    reduced = twin_reduction(graph)
    _, quotient_clique = _max_weight_clique(reduced.quotient.bitsets, reduced.weights)
    return sorted(v for q in quotient_clique for v in reduced.classes[q])


def clique_number(graph: SimpleGraph, limits: SearchLimits | None = None) -> int:
    return len(maximum_clique(graph, limits))


# ==============================================================================
# Colouring
# ==============================================================================

def _dsatur_colouring(nbrs: tuple[int, ...]) -> list[int]:
    n = len(nbrs)
    colour = [-1] * n
    for _ in range(n):
        v = max(
            (u for u in range(n) if colour[u] < 0),
            key=lambda u: (len({colour[w] for w in range(n) if nbrs[u] >> w & 1} - {-1}), nbrs[u].bit_count(), -u),
        )
        taken = {colour[w] for w in range(n) if nbrs[v] >> w & 1}
        colour[v] = next(c for c in range(n) if c not in taken)
    return colour


def _colourable(nbrs: tuple[int, ...], k: int) -> bool:
    """Exact k-colourability by DSATUR-ordered backtracking; new colours are opened in order."""
    n = len(nbrs)
    colour = [-1] * n

    def search(coloured: int, used: int) -> bool:
        if coloured == n:
            return True
        best, best_key, best_taken = -1, None, set()
        for u in range(n):
            if colour[u] >= 0:
                continue
            taken = {colour[w] for w in range(n) if nbrs[u] >> w & 1 and colour[w] >= 0}
            key = (len(taken), nbrs[u].bit_count())
            if best_key is None or key > best_key:
                best, best_key, best_taken = u, key, taken
        if len(best_taken) >= k:
            return False
        for c in range(min(used + 1, k)):
            if c in best_taken:
                continue
            colour[best] = c
            if search(coloured + 1, max(used, c + 1)):
                return True
        colour[best] = -1
        return False

    return search(0, 0)


def chromatic_number(graph: SimpleGraph, limits: SearchLimits | None = None) -> int:
    """Iterative deepening from the clique number up to the DSATUR greedy bound."""
    resolve_limits(limits).require("max_clique_order", graph.order)
    if graph.order == 0:
        return 0
    nbrs = graph.bitsets
    lower = clique_number(graph, limits)
    upper = max(_dsatur_colouring(nbrs)) + 1
    for k in range(lower, upper):
        if _colourable(nbrs, k):
            return k
    return upper


# ==============================================================================
# Matching
# ==============================================================================

def matching_number(graph: SimpleGraph, limits: SearchLimits | None = None) -> int:
    """Size of a maximum matching (blossom algorithm)."""
    resolve_limits(limits).require("max_matching_order", graph.order)
    return len(nx.max_weight_matching(graph.to_networkx(), maxcardinality=True))


# ==============================================================================
# Spread
# ==============================================================================

def spread(graph: SimpleGraph, limits: SearchLimits | None = None) -> Invariant:
    """
    Largest s such that every s vertices have a common neighbour, tried for
    s = 1, 2, ... up to max_spread; reaching the cap gives an `at_least` value.
    """
    limits = resolve_limits(limits)
    limits.require("max_spread_order", graph.order)
    nbrs = graph.bitsets
    everything = (1 << graph.order) - 1
    for s in range(1, min(limits.max_spread, graph.order) + 1):
        for subset in combinations(range(graph.order), s):
            common = everything
            for v in subset:
                common &= nbrs[v]
                if not common:
                    break
            if not common:
                logger.debug(f"spread: {s} vertices {subset} without a common neighbour")
                return Invariant("spread", s - 1)
    top = min(limits.max_spread, graph.order)
    return Invariant("spread", top, "at_least" if top == limits.max_spread else "exact")


# ==============================================================================
# Diameter
# ==============================================================================

def diameter(graph: SimpleGraph) -> Invariant:
    if graph.order <= 1:
        return Invariant("diameter", 0)
    nx_graph = graph.to_networkx()
    if not nx.is_connected(nx_graph):
        return Invariant("diameter", None, "infinite")
    return Invariant("diameter", nx.diameter(nx_graph))


# ==============================================================================
# Dispatch
# ==============================================================================

def graph_invariant(graph: SimpleGraph, which: InvariantName, limits: SearchLimits | None = None) -> Invariant:
    """
    Compute the named invariant.

    Raises:
        InputError: For an unknown invariant name.
        ResourceLimitExceeded: If the graph is larger than the cap for `which`.
    """
    match which:
        case "clique":
            return Invariant("clique", clique_number(graph, limits))
        case "chromatic":
            return Invariant("chromatic", chromatic_number(graph, limits))
        case "matching":
            return Invariant("matching", matching_number(graph, limits))
        case "spread":
            return spread(graph, limits)
        case "diameter":
            return diameter(graph)
    raise InputError(f"unknown invariant {which!r}; expected one of {', '.join(INVARIANT_NAMES)}")


def is_weakly_perfect(graph: SimpleGraph, limits: SearchLimits | None = None) -> bool:
    """Clique number equals chromatic number."""
    return clique_number(graph, limits) == chromatic_number(graph, limits)
