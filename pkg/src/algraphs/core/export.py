# ==============================================================================
# export.py — Conversion of graphs and complexes to external formats
# ==============================================================================
# Purpose: Convert in-memory graphs, digraphs and complexes into DOT text and
#          the structured edge-list / complex documents, and read edge lists back.
# Sections: Imports, Public exports, Helpers, GraphExporter
# ==============================================================================

# ==============================================================================
# Imports
# ==============================================================================

# Standard Library --------------------------------------------------------------
from __future__ import annotations

from typing import TYPE_CHECKING, Union

# Internal ----------------------------------------------------------------------
from ..payloads.documents import ComplexDocument, EdgeListDocument, parse_document
from .graph_model import Digraph, SimpleGraph

if TYPE_CHECKING:
    from .complexes import SimplicialComplex

# ==============================================================================
# Public exports
# ==============================================================================
__all__ = ["GraphExporter", "AnyGraph"]

AnyGraph = Union[SimpleGraph, Digraph]


# ==============================================================================
# Helpers
# ==============================================================================

def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _dot_name(name: str) -> str:
    cleaned = "".join(ch if ch.isalnum() else "_" for ch in name)
    return cleaned if cleaned and not cleaned[0].isdigit() else f"G_{cleaned}"


# ==============================================================================
# GraphExporter
# ==============================================================================

class GraphExporter:
    @staticmethod
    def to_dot(graph: AnyGraph, name: str = "G") -> str:
        """
        DOT text with vertices sorted by label and edges sorted
        lexicographically by their label pairs, so output is byte-stable.
        """
        directed = isinstance(graph, Digraph)
        keyword, connector = ("digraph", "->") if directed else ("graph", "--")
        labels = graph.labels
        if directed:
            pairs = [(labels[i], labels[j]) for i, j in graph.arc_list()]
        else:
            pairs = [tuple(sorted((labels[i], labels[j]))) for i, j in graph.edges()]
        lines = [f"{keyword} {_dot_name(name)} {{"]
        lines += [f"  {_quote(label)};" for label in sorted(labels)]
        lines += [f"  {_quote(u)} {connector} {_quote(v)};" for u, v in sorted(pairs)]
        lines.append("}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def to_edge_list(graph: AnyGraph) -> EdgeListDocument:
        if isinstance(graph, Digraph):
            edges = [[i, j] for i, j in graph.arc_list()]
            return EdgeListDocument(vertices=list(graph.labels), edges=edges, directed=True)
        return EdgeListDocument(vertices=list(graph.labels), edges=[[i, j] for i, j in graph.edges()])

    @staticmethod
    def from_edge_list(document: EdgeListDocument | str) -> AnyGraph:
        """
        Rebuild a graph from an edge-list document or its JSON text.

        Raises:
            InputError: If the document is malformed.
        """
        if isinstance(document, str):
            document = parse_document(EdgeListDocument, document, source="edge list")
        document.check()
        if document.directed:
            n = len(document.vertices)
            arcs = [[False] * n for _ in range(n)]
            for i, j in document.edges:
                arcs[i][j] = True
            return Digraph(tuple(document.vertices), arcs)
        return SimpleGraph.from_edges(document.vertices, [(i, j) for i, j in document.edges])

    @staticmethod
    def to_complex_document(complex_: SimplicialComplex) -> ComplexDocument:
        position = {v: k for k, v in enumerate(complex_.ground_set)}
        return ComplexDocument(
            ground=[complex_.parent.label(v) for v in complex_.ground_set],
            facets=[sorted(position[v] for v in facet) for facet in complex_.facets],
        )
