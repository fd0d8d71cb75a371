# ==============================================================================
# graph_model.py — Dense graph and digraph containers over algebra elements
# ==============================================================================
# Purpose: Hold undirected graphs and digraphs as boolean matrices labelled by
#          element names, with the set operations the rest of the package uses.
# Sections: Imports, Public exports, SimpleGraph, Digraph, Graph Operations
# ==============================================================================

# ==============================================================================
# Imports
# ==============================================================================

# Standard Library --------------------------------------------------------------
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

# Third-Party -------------------------------------------------------------------
import networkx as nx
import numpy as np
from numpy.typing import NDArray

# Internal ----------------------------------------------------------------------
from .exceptions import InputError

# ==============================================================================
# Public exports
# ==============================================================================
__all__ = [
    "SimpleGraph",
    "Digraph",
    "complement_graph",
    "induced_subgraph",
    "is_spanning_subgraph",
    "edge_difference",
]


def _frozen_matrix(matrix: NDArray[np.bool_] | Sequence[Sequence[bool]], n: int) -> NDArray[np.bool_]:
    m = np.array(matrix, dtype=bool).reshape(n, n) if n else np.zeros((0, 0), dtype=bool)
    m.setflags(write=False)
    return m


# ==============================================================================
# SimpleGraph
# ==============================================================================

@dataclass(frozen=True, eq=False)
class SimpleGraph:
    """
    Undirected graph without loops. Vertex i carries `labels[i]`; equality
    compares labels and edges, never up to isomorphism.
    """

    labels: tuple[str, ...]
    adjacency: NDArray[np.bool_]

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        adj = _frozen_matrix(self.adjacency, len(labels))
        if not np.array_equal(adj, adj.T):
            raise InputError("adjacency matrix of an undirected graph must be symmetric")
        if adj.diagonal().any():
            raise InputError("simple graphs carry no loops")
        object.__setattr__(self, "adjacency", adj)

    @classmethod
    def from_edges(cls, labels: Sequence[str], edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        n = len(labels)
        adj = np.zeros((n, n), dtype=bool)
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise InputError(f"edge ({i}, {j}) has an endpoint outside [0, {n})")
            if i != j:
                adj[i, j] = adj[j, i] = True
        return cls(tuple(labels), adj)

    @classmethod
    def complete(cls, labels: Sequence[str]) -> SimpleGraph:
        n = len(labels)
        return cls(tuple(labels), ~np.eye(n, dtype=bool))

    @classmethod
    def edgeless(cls, labels: Sequence[str]) -> SimpleGraph:
        n = len(labels)
        return cls(tuple(labels), np.zeros((n, n), dtype=bool))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.adjacency, other.adjacency)

    def __hash__(self) -> int:
        return hash((self.labels, self.adjacency.tobytes()))

    def __repr__(self) -> str:
        return f"SimpleGraph(order={self.order}, edges={self.size})"

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def size(self) -> int:
        return int(self.adjacency.sum()) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i, j])

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (i, j) with i < j, sorted."""
        rows, cols = np.nonzero(np.triu(self.adjacency, k=1))
        return [(int(i), int(j)) for i, j in zip(rows, cols)]

    def neighbours(self, v: int) -> list[int]:
        return [int(u) for u in np.flatnonzero(self.adjacency[v])]

    def degrees(self) -> NDArray[np.intp]:
        return self.adjacency.sum(axis=1)

    @cached_property
    def bitsets(self) -> tuple[int, ...]:
        """Open neighbourhood of each vertex as an integer bitmask."""
        return tuple(sum(1 << int(u) for u in np.flatnonzero(row)) for row in self.adjacency)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.order))
        graph.add_edges_from(self.edges())
        nx.set_node_attributes(graph, dict(enumerate(self.labels)), "label")
        return graph

    def complement(self) -> SimpleGraph:
        return complement_graph(self)

    def induced(self, vertices: Iterable[int]) -> SimpleGraph:
        return induced_subgraph(self, vertices)


# ==============================================================================
# Digraph
# ==============================================================================

@dataclass(frozen=True, eq=False)
class Digraph:
    """
    Directed graph; loops are never stored. Both relations built here are
    reflexive, so callers that need a preorder use `reflexive_arcs`.
    """

    labels: tuple[str, ...]
    arcs: NDArray[np.bool_]

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        arcs = np.array(self.arcs, dtype=bool).reshape(len(labels), len(labels))
        np.fill_diagonal(arcs, False)
        arcs.setflags(write=False)
        object.__setattr__(self, "arcs", arcs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.arcs, other.arcs)

    def __hash__(self) -> int:
        return hash((self.labels, self.arcs.tobytes()))

    def __repr__(self) -> str:
        return f"Digraph(order={self.order}, arcs={int(self.arcs.sum())})"

    @property
    def order(self) -> int:
        return len(self.labels)

    def arc_list(self) -> list[tuple[int, int]]:
        rows, cols = np.nonzero(self.arcs)
        return [(int(i), int(j)) for i, j in zip(rows, cols)]

    def out_neighbours(self, v: int) -> list[int]:
        return [int(u) for u in np.flatnonzero(self.arcs[v])]

    def has_arc(self, i: int, j: int) -> bool:
        return bool(self.arcs[i, j])

    @property
    def reflexive_arcs(self) -> NDArray[np.bool_]:
        return self.arcs | np.eye(self.order, dtype=bool)

    def underlying(self) -> SimpleGraph:
        """The graph obtained by ignoring directions."""
        return SimpleGraph(self.labels, self.arcs | self.arcs.T)

    def is_spanning_subdigraph(self, other: Digraph) -> bool:
        _require_same_vertices(self.labels, other.labels)
        return not np.any(self.arcs & ~other.arcs)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.order))
        graph.add_edges_from(self.arc_list())
        nx.set_node_attributes(graph, dict(enumerate(self.labels)), "label")
        return graph


# ==============================================================================
# Graph Operations
# ==============================================================================

def _require_same_vertices(a: tuple[str, ...], b: tuple[str, ...]) -> None:
    if a != b:
        raise InputError(f"graphs have different vertex labels ({len(a)} vs {len(b)} vertices)")


def complement_graph(graph: SimpleGraph) -> SimpleGraph:
    """Same vertices; an edge exactly where `graph` has a non-edge."""
    adj = ~graph.adjacency
    np.fill_diagonal(adj, False)
    return SimpleGraph(graph.labels, adj)


def induced_subgraph(graph: SimpleGraph, vertices: Iterable[int]) -> SimpleGraph:
    """
    The subgraph on `vertices` (kept in increasing index order) with every
    edge of `graph` between them.

    Raises:
        InputError: If a vertex index is out of range.
    """
    keep = sorted(set(int(v) for v in vertices))
    if keep and not (0 <= keep[0] and keep[-1] < graph.order):
        raise InputError(f"vertex index out of range for a graph of order {graph.order}")
    idx = np.array(keep, dtype=np.intp)
    return SimpleGraph(tuple(graph.labels[i] for i in keep), graph.adjacency[np.ix_(idx, idx)])


def is_spanning_subgraph(sub: SimpleGraph, graph: SimpleGraph) -> bool:
    """
    True iff every edge of `sub` is an edge of `graph`.

    Raises:
        InputError: If the vertex labels differ.
    """
    _require_same_vertices(sub.labels, graph.labels)
    return not np.any(sub.adjacency & ~graph.adjacency)


def edge_difference(first: SimpleGraph, second: SimpleGraph) -> SimpleGraph:
    """Edges of `first` that are not edges of `second`."""
    _require_same_vertices(first.labels, second.labels)
    return SimpleGraph(first.labels, first.adjacency & ~second.adjacency)
