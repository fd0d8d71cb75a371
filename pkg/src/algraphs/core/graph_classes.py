# ==============================================================================
# graph_classes.py — Recognition of hereditary graph classes
# ==============================================================================
# Purpose: Decide whether a graph is chordal, a cograph, split, threshold or
#          perfect. A negative answer carries an induced forbidden subgraph; a
#          positive threshold answer carries a weight certificate.
# Sections: Imports, Public exports, Data Classes, Bitset Helpers,
#           Forbidden Subgraph Search, Twin Reduction, Chordal, Cograph, Split,
#           Threshold, Perfect, Dispatch, Witness Checking
# ==============================================================================

# ==============================================================================
# Imports
# ==============================================================================

# Standard Library --------------------------------------------------------------
from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Any, Literal

# Third-Party -------------------------------------------------------------------
import numpy as np

# Internal ----------------------------------------------------------------------
from .exceptions import InputError
from .graph_model import SimpleGraph, complement_graph
from .logger import logger
from .settings import SearchLimits, resolve_limits

# ==============================================================================
# Public exports
# ==============================================================================
__all__ = [
    "GRAPH_CLASSES",
    "GraphClass",
    "ClassWitness",
    "TwinReduction",
    "twin_reduction",
    "classify",
    "witness_is_valid",
]

GraphClass = Literal["perfect", "chordal", "cograph", "split", "threshold"]
GRAPH_CLASSES: tuple[str, ...] = ("perfect", "chordal", "cograph", "split", "threshold")


# ==============================================================================
# Data Classes
# ==============================================================================

@dataclass(frozen=True)
class ClassWitness:
    """
    Verdict of a class test. On a negative verdict `witness` lists vertex
    indices inducing the forbidden configuration named by `configuration`
    (in cycle or path order where that matters).
    """

    graph_class: str
    verdict: bool
    witness: tuple[int, ...] | None = None
    configuration: str | None = None
    certificate: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.verdict

    def witness_labels(self, graph: SimpleGraph) -> list[str]:
        return [graph.labels[v] for v in self.witness or ()]


@dataclass(frozen=True)
class TwinReduction:
    """Quotient of a graph by true twins (equal closed neighbourhoods)."""

    quotient: SimpleGraph
    classes: tuple[tuple[int, ...], ...]
    """Original vertices of each quotient vertex, in quotient order."""

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.classes)


# ==============================================================================
# Bitset Helpers
# ==============================================================================

def _bits(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _members(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _components(nbrs: tuple[int, ...], within: int) -> list[int]:
    """Connected components of the subgraph induced on `within`."""
    found = []
    rest = within
    while rest:
        seen = frontier = rest & -rest
        while frontier:
            grow = 0
            for v in _members(frontier):
                grow |= nbrs[v]
            frontier = grow & within & ~seen
            seen |= frontier
        found.append(seen)
        rest &= ~seen
    return found


def _complement_bits(nbrs: tuple[int, ...]) -> tuple[int, ...]:
    full = (1 << len(nbrs)) - 1
    return tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(nbrs))


def _shortest_path(nbrs: tuple[int, ...], start: int, goal: int, allowed: int) -> list[int] | None:
    """BFS path from `start` to `goal` through vertices of `allowed`."""
    parent = {start: start}
    frontier = [start]
    allowed |= (1 << start) | (1 << goal)
    while frontier:
        nxt = []
        for v in frontier:
            for u in _members(nbrs[v] & allowed):
                if u in parent:
                    continue
                parent[u] = v
                if u == goal:
                    path = [u]
                    while path[-1] != start:
                        path.append(parent[path[-1]])
                    return path[::-1]
                nxt.append(u)
        frontier = nxt
    return None


# ==============================================================================
# Forbidden Subgraph Search
# ==============================================================================

def _find_p4(nbrs: tuple[int, ...], within: int) -> tuple[int, ...] | None:
    """An induced path a-b-c-d inside `within`."""
    for b in _members(within):
        for c in _members(nbrs[b] & within):
            if c < b:
                continue
            ends_b = nbrs[b] & within & ~nbrs[c] & ~(1 << c)
            ends_c = nbrs[c] & within & ~nbrs[b] & ~(1 << b)
            for a in _members(ends_b):
                d_options = ends_c & ~nbrs[a] & ~(1 << a)
                if d_options:
                    return a, b, c, _lowest(d_options)
    return None


def _find_2k2(nbrs: tuple[int, ...], within: int) -> tuple[int, ...] | None:
    """Two edges a-b, c-d with no edges between them."""
    for a in _members(within):
        for b in _members(nbrs[a] & within):
            if b < a:
                continue
            rest = within & ~nbrs[a] & ~nbrs[b] & ~(1 << a) & ~(1 << b)
            for c in _members(rest):
                d_options = nbrs[c] & rest
                if d_options:
                    return a, b, c, _lowest(d_options)
    return None


def _find_c4(nbrs: tuple[int, ...], within: int) -> tuple[int, ...] | None:
    """An induced 4-cycle a-b-c-d, returned in cycle order."""
    for a in _members(within):
        for c in _members(within & ~nbrs[a] & ~(1 << a)):
            if c < a:
                continue
            common = nbrs[a] & nbrs[c] & within
            for b in _members(common):
                d_options = common & ~nbrs[b] & ~(1 << b)
                if d_options:
                    return a, b, c, _lowest(d_options)
    return None


def _induced_cycles(nbrs: tuple[int, ...], within: int, lengths: set[int]) -> Iterator[tuple[int, ...]]:
    """
    Induced cycles whose length lies in `lengths`, each rooted at its smallest
    vertex. Paths grow one vertex at a time and stay induced.
    """
    if not lengths:
        return
    longest = max(lengths)
    for s in _members(within):
        higher = within & ~((2 << s) - 1)
        stack: list[tuple[list[int], int]] = []
        for v in _members(nbrs[s] & higher):
            stack.append(([s, v], (1 << s) | (1 << v)))
        while stack:
            path, used = stack.pop()
            last = path[-1]
            # vertices adjacent to an inner path vertex would create a chord
            blocked = used
            for inner in path[1:-1]:
                blocked |= nbrs[inner]
            for u in _members(nbrs[last] & higher & ~blocked):
                if nbrs[u] & (1 << s):
                    if len(path) + 1 in lengths and path[1] < u:
                        yield tuple(path + [u])
                    continue
                if len(path) + 1 < longest:
                    stack.append((path + [u], used | (1 << u)))


def _find_induced_cycle(nbrs: tuple[int, ...], within: int, lengths: set[int]) -> tuple[int, ...] | None:
    return next(_induced_cycles(nbrs, within, lengths), None)


# ==============================================================================
# Twin Reduction
# ==============================================================================

def twin_reduction(graph: SimpleGraph) -> TwinReduction:
    """
    Collapse every class of true twins to one vertex. The quotient keeps the
    label of the smallest vertex of each class.
    """
    closed = graph.adjacency | np.eye(graph.order, dtype=bool)
    classes: dict[bytes, list[int]] = {}
    for v in range(graph.order):
        classes.setdefault(closed[v].tobytes(), []).append(v)
    groups = tuple(sorted((tuple(c) for c in classes.values()), key=lambda c: c[0]))
    reps = np.array([c[0] for c in groups], dtype=np.intp)
    quotient = SimpleGraph(
        tuple(graph.labels[int(v)] for v in reps),
        graph.adjacency[np.ix_(reps, reps)] if reps.size else np.zeros((0, 0), dtype=bool),
    )
    logger.debug(f"twin reduction: {graph.order} -> {quotient.order} vertices")
    return TwinReduction(quotient, groups)


# ==============================================================================
# Chordal
# ==============================================================================

def _lex_bfs(nbrs: tuple[int, ...]) -> list[int]:
    """Lexicographic breadth-first order by partition refinement (smallest index first)."""
    n = len(nbrs)
    partition: list[list[int]] = [list(range(n))] if n else []
    order: list[int] = []
    while partition:
        v = partition[0].pop(0)
        if not partition[0]:
            partition.pop(0)
        order.append(v)
        refined: list[list[int]] = []
        for part in partition:
            inside = [u for u in part if nbrs[v] >> u & 1]
            outside = [u for u in part if not nbrs[v] >> u & 1]
            refined.extend(p for p in (inside, outside) if p)
        partition = refined
    return order


def _chordal(graph: SimpleGraph) -> ClassWitness:
    nbrs = graph.bitsets
    order = _lex_bfs(nbrs)
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [u for u in _members(nbrs[v]) if position[u] < position[v]]
        if not earlier:
            continue
        parent = max(earlier, key=position.__getitem__)
        missing = _bits(earlier) & ~nbrs[parent] & ~(1 << parent)
        if missing:
            return ClassWitness("chordal", False, _chordless_cycle(nbrs), "chordless cycle")
    return ClassWitness("chordal", True, certificate={"elimination_order": order[::-1]})


def _chordless_cycle(nbrs: tuple[int, ...]) -> tuple[int, ...]:
    """Some chordless cycle of length ≥ 4 in a non-chordal graph."""
    n = len(nbrs)
    for v in range(n):
        around = list(_members(nbrs[v]))
        for i, u in enumerate(around):
            for w in around[i + 1:]:
                if nbrs[u] >> w & 1:
                    continue
                allowed = ((1 << n) - 1) & ~nbrs[v] & ~(1 << v)
                path = _shortest_path(nbrs, u, w, allowed)
                if path is not None:
                    return (v, *path)
    raise AssertionError("a graph failing the elimination check has a chordless cycle")


# ==============================================================================
# Cograph
# ==============================================================================

def _cograph(graph: SimpleGraph) -> ClassWitness:
    nbrs = graph.bitsets
    co_nbrs = _complement_bits(nbrs)
    pending = [(1 << graph.order) - 1] if graph.order else []
    # each step splits a module into its components or co-components
    while pending:
        within = pending.pop()
        if within & (within - 1) == 0:
            continue
        parts = _components(nbrs, within)
        if len(parts) == 1:
            parts = _components(co_nbrs, within)
        if len(parts) == 1:
            return ClassWitness("cograph", False, _find_p4(nbrs, within), "P4")
        pending.extend(parts)
    return ClassWitness("cograph", True)


# ==============================================================================
# Split
# ==============================================================================

def _split(graph: SimpleGraph) -> ClassWitness:
    degrees = sorted((int(d) for d in graph.degrees()), reverse=True)
    m = max((i + 1 for i, d in enumerate(degrees) if d >= i), default=0)
    if sum(degrees[:m]) == m * (m - 1) + sum(degrees[m:]):
        return ClassWitness("split", True, certificate={"clique_size": m})
    nbrs = graph.bitsets
    everything = (1 << graph.order) - 1
    for name, search in (
        ("2K2", lambda: _find_2k2(nbrs, everything)),
        ("C4", lambda: _find_c4(nbrs, everything)),
        ("C5", lambda: _find_induced_cycle(nbrs, everything, {5})),
    ):
        found = search()
        if found is not None:
            return ClassWitness("split", False, found, name)
    raise AssertionError("a non-split graph contains 2K2, C4 or C5")


# ==============================================================================
# Threshold
# ==============================================================================

def _threshold(graph: SimpleGraph) -> ClassWitness:
    nbrs = graph.bitsets
    n = graph.order
    remaining = (1 << n) - 1
    removal: list[tuple[int, bool]] = []
    while remaining:
        size = remaining.bit_count()
        pick = None
        for v in _members(remaining):
            degree = (nbrs[v] & remaining).bit_count()
            if degree == 0 or degree == size - 1:
                pick = (v, degree > 0)
                break
        if pick is None:
            break
        removal.append(pick)
        remaining &= ~(1 << pick[0])
    if remaining:
        for name, search in (("P4", _find_p4), ("C4", _find_c4), ("2K2", _find_2k2)):
            found = search(nbrs, remaining)
            if found is not None:
                return ClassWitness("threshold", False, found, name)
        raise AssertionError("a graph without isolated or dominating vertices contains P4, C4 or 2K2")

    # u ~ v iff weight(u) + weight(v) > 2n
    weights: dict[int, int] = {}
    for step, (v, dominating) in enumerate(removal, start=1):
        weights[v] = 2 * n - step + 1 if dominating else step
    return ClassWitness(
        "threshold",
        True,
        certificate={
            "weights": {graph.labels[v]: w for v, w in sorted(weights.items())},
            "threshold": 2 * n,
        },
    )


# ==============================================================================
# Perfect
# ==============================================================================

def _perfect(graph: SimpleGraph) -> ClassWitness:
    reduced = twin_reduction(graph)
    core = reduced.quotient
    lengths = set(range(5, core.order + 1, 2))
    reps = reduced.representatives
    for name, nbrs in (("odd hole", core.bitsets), ("odd antihole", _complement_bits(core.bitsets))):
        # a dominating or isolated vertex never lies on a hole of length ≥ 5
        active = _bits(v for v in range(core.order) if 0 < nbrs[v].bit_count() < core.order - 1)
        for part in _components(nbrs, active):
            cycle = _find_induced_cycle(nbrs, part, lengths)
            if cycle is not None:
                return ClassWitness("perfect", False, tuple(reps[v] for v in cycle), name)
    return ClassWitness("perfect", True)


# ==============================================================================
# Dispatch
# ==============================================================================

_RECOGNIZERS = {
    "chordal": ("max_class_order", _chordal),
    "cograph": ("max_class_order", _cograph),
    "split": ("max_class_order", _split),
    "threshold": ("max_class_order", _threshold),
    "perfect": ("max_perfect_order", _perfect),
}


def classify(graph: SimpleGraph, cls: GraphClass, limits: SearchLimits | None = None) -> ClassWitness:
    """
    Decide membership of `graph` in `cls`.

    Raises:
        InputError: For an unknown class name.
        ResourceLimitExceeded: If the graph is larger than the cap for `cls`.
    """
    limits = resolve_limits(limits)
    entry = _RECOGNIZERS.get(cls)
    if entry is None:
        raise InputError(f"unknown graph class {cls!r}; expected one of {', '.join(GRAPH_CLASSES)}")
    cap, recognizer = entry
    limits.require(cap, graph.order)
    return recognizer(graph)


# ==============================================================================
# Witness Checking
# ==============================================================================

def _is_induced_cycle(graph: SimpleGraph, cycle: tuple[int, ...]) -> bool:
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if graph.has_edge(cycle[i], cycle[j]) != consecutive:
                return False
    return True


def _same_graph(graph: SimpleGraph, vertices: tuple[int, ...], edges: set[frozenset[int]]) -> bool:
    if len(set(vertices)) != len(vertices):
        return False
    for i in range(len(vertices)):
        for j in range(i + 1, len(vertices)):
            if graph.has_edge(vertices[i], vertices[j]) != (frozenset((i, j)) in edges):
                return False
    return True


_P4 = {frozenset((0, 1)), frozenset((1, 2)), frozenset((2, 3))}
_C4 = _P4 | {frozenset((0, 3))}
_2K2 = {frozenset((0, 1)), frozenset((2, 3))}


def witness_is_valid(graph: SimpleGraph, result: ClassWitness) -> bool:
    """Re-check that a negative verdict's witness induces the named configuration."""
    if result.verdict:
        return result.witness is None
    w = result.witness
    if w is None:
        return False
    match result.configuration:
        case "P4":
            return len(w) == 4 and _same_graph(graph, w, _P4)
        case "C4":
            return len(w) == 4 and _same_graph(graph, w, _C4)
        case "2K2":
            return len(w) == 4 and _same_graph(graph, w, _2K2)
        case "C5":
            return len(w) == 5 and _is_induced_cycle(graph, w)
        case "chordless cycle":
            return _is_induced_cycle(graph, w)
        case "odd hole":
            return len(w) >= 5 and len(w) % 2 == 1 and _is_induced_cycle(graph, w)
        case "odd antihole":
            return len(w) >= 5 and len(w) % 2 == 1 and _is_induced_cycle(complement_graph(graph), w)
    return False
