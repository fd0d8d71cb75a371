# ==============================================================================
# algebra_graphs.py — Graphs and digraphs defined on a finite algebra
# ==============================================================================
# Purpose: Build the power, enhanced power, intersection power, generating,
#          independence, rank, endomorphism and difference graphs, the power and
#          endomorphism digraphs, and the zero-divisor graph of the induced poset.
# Sections: Imports, Public exports, GraphKind, Digraphs, Graphs,
#           Zero-Divisor Poset, Digraph Comparison, Products
# ==============================================================================

# ==============================================================================
# Imports
# ==============================================================================

# Standard Library --------------------------------------------------------------
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Literal, Optional

# Third-Party -------------------------------------------------------------------
import numpy as np
from numpy.typing import NDArray

# Internal ----------------------------------------------------------------------
from .algebra import FiniteAlgebra, generating_sets, subalgebra_lattice
from .endomorphisms import Endomorphism, enumerate_endomorphisms, maps_into_monogenic, power_maps
from .exceptions import InputError
from .graph_model import Digraph, SimpleGraph, edge_difference
from .logger import logger
from .settings import SearchLimits, resolve_limits

# ==============================================================================
# Public exports
# ==============================================================================
__all__ = [
    "GRAPH_TAGS",
    "GraphKind",
    "build_graph",
    "build_digraph",
    "ZeroDivisorPoset",
    "zero_divisor_graph",
    "PowerMapStatus",
    "DigraphEqualityReport",
    "digraph_equality_report",
    "enhanced_from_power_digraph",
    "is_preorder",
    "preorder_closure",
    "product_digraph",
    "strong_product",
]

GraphTag = Literal[
    "power",
    "enhanced",
    "intersection_power",
    "generating",
    "independence",
    "rank",
    "endomorphism",
    "difference",
]
Variant = Literal["strict", "loose"]

GRAPH_TAGS: tuple[str, ...] = (
    "power",
    "enhanced",
    "intersection_power",
    "generating",
    "independence",
    "rank",
    "endomorphism",
    "difference",
)


# ==============================================================================
# GraphKind
# ==============================================================================

@dataclass(frozen=True)
class GraphKind:
    """Which graph to build; `variant` is set exactly for the enhanced power graph."""

    tag: GraphTag
    variant: Optional[Variant] = None

    def __post_init__(self) -> None:
        if self.tag not in GRAPH_TAGS:
            raise InputError(f"unknown graph kind {self.tag!r}; expected one of {', '.join(GRAPH_TAGS)}")
        if self.tag == "enhanced":
            if self.variant is None:
                object.__setattr__(self, "variant", "loose")
            elif self.variant not in ("strict", "loose"):
                raise InputError(f"unknown enhanced variant {self.variant!r}")
        elif self.variant is not None:
            raise InputError(f"variant applies to the enhanced power graph only, not {self.tag!r}")

    @classmethod
    def parse(cls, tag: str, variant: str | None = None) -> GraphKind:
        return cls(tag, variant if tag == "enhanced" else None)  # type: ignore[arg-type]

    def __str__(self) -> str:
        return f"{self.tag}({self.variant})" if self.variant else self.tag


POWER = GraphKind("power")
ENHANCED = GraphKind("enhanced", "loose")
ENHANCED_STRICT = GraphKind("enhanced", "strict")
INTERSECTION = GraphKind("intersection_power")


# ==============================================================================
# Digraphs
# ==============================================================================

def _endomorphism_arcs(algebra: FiniteAlgebra, endomorphisms: list[Endomorphism]) -> NDArray[np.bool_]:
    arcs = np.zeros((algebra.size, algebra.size), dtype=bool)
    idx = np.arange(algebra.size)
    for f in endomorphisms:
        arcs[idx, np.asarray(f.images)] = True
    return arcs


def build_digraph(
    algebra: FiniteAlgebra,
    kind: Literal["power", "endomorphism"],
    limits: SearchLimits | None = None,
) -> Digraph:
    """
    Power digraph (x → y iff y ∈ ⟨x⟩) or endomorphism digraph (x → y iff some
    endomorphism maps x to y). Loops are left implicit.

    Raises:
        InputError: For any other kind.
        ResourceLimitExceeded: If the endomorphism search hits its cap.
    """
    limits = resolve_limits(limits)
    limits.require("max_graph_order", algebra.size)
    if kind == "power":
        return Digraph(algebra.element_names, algebra.monogenic_masks)
    if kind == "endomorphism":
        return Digraph(algebra.element_names, _endomorphism_arcs(algebra, enumerate_endomorphisms(algebra, limits)))
    raise InputError(f"no digraph of kind {kind!r}; expected power or endomorphism")


# ==============================================================================
# Graphs
# ==============================================================================

def _symmetric(matrix: NDArray[np.bool_]) -> NDArray[np.bool_]:
    adj = matrix | matrix.T
    np.fill_diagonal(adj, False)
    return adj


def _pair_graph(algebra: FiniteAlgebra, test) -> NDArray[np.bool_]:
    adj = np.zeros((algebra.size, algebra.size), dtype=bool)
    for x, y in combinations(range(algebra.size), 2):
        if test(x, y):
            adj[x, y] = adj[y, x] = True
    return adj


def _sets_graph(algebra: FiniteAlgebra, sets) -> NDArray[np.bool_]:
    adj = np.zeros((algebra.size, algebra.size), dtype=bool)
    for s in sets:
        idx = np.array(sorted(s), dtype=np.intp)
        adj[np.ix_(idx, idx)] = True
    np.fill_diagonal(adj, False)
    return adj


def _power(algebra: FiniteAlgebra) -> NDArray[np.bool_]:
    return _symmetric(algebra.monogenic_masks)


def _enhanced_loose(algebra: FiniteAlgebra) -> NDArray[np.bool_]:
    masks = algebra.monogenic_masks.astype(np.int64)
    # common[x, y] counts z with x, y ∈ ⟨z⟩
    return _symmetric(masks.T @ masks > 0)


def _enhanced_strict(algebra: FiniteAlgebra) -> NDArray[np.bool_]:
    rank_at_most_one = {algebra.constants, *algebra.monogenic}
    return _pair_graph(algebra, lambda x, y: algebra.generated((x, y)) in rank_at_most_one)


def _intersection(algebra: FiniteAlgebra) -> NDArray[np.bool_]:
    masks = algebra.monogenic_masks.astype(np.int64)
    # ⟨x⟩ ∩ ⟨y⟩ always contains E(A), so a proper superset is a larger count
    adj = masks @ masks.T > len(algebra.constants)
    constants = sorted(algebra.constants)
    adj[constants, :] = True
    adj[:, constants] = True
    return _symmetric(adj)


def _generating(algebra: FiniteAlgebra) -> NDArray[np.bool_]:
    whole = algebra.universe
    return _pair_graph(algebra, lambda x, y: algebra.generated((x, y)) == whole)


def build_graph(
    algebra: FiniteAlgebra,
    kind: GraphKind | str,
    limits: SearchLimits | None = None,
) -> SimpleGraph:
    """
    Build the graph of the given kind on all elements of `algebra`.

    Raises:
        ResourceLimitExceeded: If a generating-set or endomorphism search hits its cap,
            or the algebra exceeds max_graph_order.
    """
    limits = resolve_limits(limits)
    limits.require("max_graph_order", algebra.size)
    if isinstance(kind, str):
        kind = GraphKind.parse(kind)
    match kind.tag:
        case "power":
            adj = _power(algebra)
        case "enhanced":
            adj = _enhanced_loose(algebra) if kind.variant == "loose" else _enhanced_strict(algebra)
        case "intersection_power":
            adj = _intersection(algebra)
        case "generating":
            adj = _generating(algebra)
        case "independence":
            adj = _sets_graph(algebra, generating_sets(algebra, "minimal", limits))
        case "rank":
            adj = _sets_graph(algebra, generating_sets(algebra, "minimum", limits))
        case "endomorphism":
            return build_digraph(algebra, "endomorphism", limits).underlying()
        case "difference":
            labels = algebra.element_names
            return edge_difference(SimpleGraph(labels, _enhanced_loose(algebra)), SimpleGraph(labels, _power(algebra)))
    graph = SimpleGraph(algebra.element_names, adj)
    logger.debug(f"{kind} graph of {algebra.name}: {graph.size} edges")
    return graph


# ==============================================================================
# Zero-Divisor Poset
# ==============================================================================

@dataclass(frozen=True, eq=False)
class ZeroDivisorPoset:
    """
    Elements of A ordered by a ≤ b iff ⟨a⟩ ⊇ ⟨b⟩, with a bottom element 0
    adjoined at index `size`. Elements generating the same subalgebra are
    equivalent, so the relation is stored as a preorder.
    """

    parent: FiniteAlgebra
    leq: NDArray[np.bool_]

    @classmethod
    def of(cls, algebra: FiniteAlgebra) -> ZeroDivisorPoset:
        n = algebra.size
        leq = np.zeros((n + 1, n + 1), dtype=bool)
        # b ∈ ⟨a⟩ iff ⟨b⟩ ⊆ ⟨a⟩ iff a ≤ b
        leq[:n, :n] = algebra.monogenic_masks
        leq[n, :] = True
        leq.setflags(write=False)
        return cls(algebra, leq)

    @property
    def bottom(self) -> int:
        return self.parent.size

    def lower_bounds(self, a: int, b: int) -> list[int]:
        """{a, b}^∧, always containing the bottom element."""
        return [int(c) for c in np.flatnonzero(self.leq[:, a] & self.leq[:, b])]

    def equivalent(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b] and self.leq[b, a])

    def is_preorder(self) -> bool:
        leq = self.leq.astype(np.int64)
        return bool(self.leq.diagonal().all() and not np.any((leq @ leq > 0) & ~self.leq))

    def annihilating(self) -> NDArray[np.bool_]:
        """M[a, b] iff a ≠ b and the only common lower bound of a and b is 0."""
        n = self.parent.size
        common = self.leq[:n, :n].T.astype(np.int64) @ self.leq[:n, :n].astype(np.int64)
        adj = common == 0
        np.fill_diagonal(adj, False)
        return adj

    def zero_divisors(self) -> list[int]:
        return [int(a) for a in np.flatnonzero(self.annihilating().any(axis=1))]


def zero_divisor_graph(algebra: FiniteAlgebra, limits: SearchLimits | None = None) -> SimpleGraph:
    """
    Zero-divisor graph of the poset of monogenic subalgebras, on all of A:
    non-zero-divisors are isolated.
    """
    resolve_limits(limits).require("max_graph_order", algebra.size)
    return SimpleGraph(algebra.element_names, ZeroDivisorPoset.of(algebra).annihilating())


# ==============================================================================
# Digraph Comparison
# ==============================================================================

@dataclass(frozen=True)
class PowerMapStatus:
    """How one endomorphism relates to the power maps x ↦ x^k."""

    images: tuple[str, ...]
    into_monogenic: bool
    """f(x) ∈ ⟨x⟩ for every x."""
    power_exponent: int | None
    """Smallest k ≥ 1 with f(x) = x^k for all x, or None."""

    @property
    def is_global_power(self) -> bool:
        return self.power_exponent is not None


@dataclass(frozen=True)
class DigraphEqualityReport:
    algebra: str
    graphs_equal: bool
    digraphs_equal: bool
    fully_invariant_all: bool
    endo_within_power: bool
    power_within_endo: bool
    power_map_status: list[PowerMapStatus] = field(default_factory=list)
    """One entry per endomorphism; exponents stay None unless there is exactly one binary operation."""
    arc_witness: tuple[str, str, str] | None = None
    """(x, y, digraph) for an arc present only in the named digraph."""
    invariance_witness: tuple[list[str], tuple[str, ...]] | None = None
    """A subalgebra and an endomorphism moving it outside itself."""


def _arc_witness(power: Digraph, endo: Digraph) -> tuple[str, str, str] | None:
    for source, other, name in ((endo, power, "endomorphism"), (power, endo, "power")):
        extra = np.argwhere(source.arcs & ~other.arcs)
        if extra.size:
            x, y = extra[0]
            return power.labels[int(x)], power.labels[int(y)], name
    return None


def digraph_equality_report(algebra: FiniteAlgebra, limits: SearchLimits | None = None) -> DigraphEqualityReport:
    """
    Compare the power and endomorphism digraphs and graphs, test whether every
    subalgebra is fully invariant, and classify each endomorphism against the
    power maps.
    """
    limits = resolve_limits(limits)
    endomorphisms = enumerate_endomorphisms(algebra, limits)
    power = build_digraph(algebra, "power", limits)
    endo = Digraph(algebra.element_names, _endomorphism_arcs(algebra, endomorphisms))

    invariance_witness = None
    for sub in subalgebra_lattice(algebra, limits):
        moved = next((f for f in endomorphisms if any(f.images[x] not in sub.members for x in sub.members)), None)
        if moved is not None:
            invariance_witness = (sub.labels, tuple(moved.labels()))
            break

    powers = power_maps(algebra) or []
    statuses = []
    for f in endomorphisms:
        exponent = next((k for k, p in enumerate(powers, start=1) if p == f.images), None)
        statuses.append(PowerMapStatus(tuple(f.labels()), maps_into_monogenic(f), exponent))

    return DigraphEqualityReport(
        algebra=algebra.name,
        graphs_equal=power.underlying() == endo.underlying(),
        digraphs_equal=power == endo,
        fully_invariant_all=invariance_witness is None,
        endo_within_power=endo.is_spanning_subdigraph(power),
        power_within_endo=power.is_spanning_subdigraph(endo),
        power_map_status=statuses,
        arc_witness=_arc_witness(power, endo),
        invariance_witness=invariance_witness,
    )


def enhanced_from_power_digraph(digraph: Digraph) -> SimpleGraph:
    """x ∼ y iff some z reaches both in the reflexive digraph."""
    reach = digraph.reflexive_arcs.astype(np.int64)
    return SimpleGraph(digraph.labels, _symmetric(reach.T @ reach > 0))


def is_preorder(digraph: Digraph) -> bool:
    """True iff the digraph with a loop at every vertex is transitive."""
    reach = digraph.reflexive_arcs
    steps = reach.astype(np.int64)
    return not np.any((steps @ steps > 0) & ~reach)


def preorder_closure(digraph: Digraph) -> Digraph:
    """Reflexive-transitive closure (loops left implicit)."""
    reach = digraph.reflexive_arcs.copy()
    for k in range(digraph.order):
        reach |= reach[:, [k]] & reach[[k], :]
    return Digraph(digraph.labels, reach)


# ==============================================================================
# Products
# ==============================================================================

def _pair_labels(first: tuple[str, ...], second: tuple[str, ...]) -> tuple[str, ...]:
    return tuple(f"({a},{b})" for a in first for b in second)


def product_digraph(first: Digraph, second: Digraph) -> Digraph:
    """(a, b) → (c, d) iff a → c and b → d in the reflexive digraphs."""
    arcs = np.kron(first.reflexive_arcs, second.reflexive_arcs).astype(bool)
    return Digraph(_pair_labels(first.labels, second.labels), arcs)


def strong_product(first: SimpleGraph, second: SimpleGraph) -> SimpleGraph:
    """(a, b) ∼ (c, d) iff each coordinate is equal or adjacent, and the pairs differ."""
    closed_first = first.adjacency | np.eye(first.order, dtype=bool)
    closed_second = second.adjacency | np.eye(second.order, dtype=bool)
    adj = np.kron(closed_first, closed_second).astype(bool)
    np.fill_diagonal(adj, False)
    return SimpleGraph(_pair_labels(first.labels, second.labels), adj)
