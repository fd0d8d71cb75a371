"""
Graphs, digraphs and simplicial complexes defined on finite algebras, with
exact recognizers and invariants and suites that check structural theorems
across catalogs of groups, semigroups and independence algebras.
"""

from .core.algebra import FiniteAlgebra, Operation, SubalgebraSet
from .core.algebra_graphs import GraphKind, build_digraph, build_graph
from .core.builders import build, parse_algebra
from .core.complexes import SimplicialComplex, build_complex
from .core.exceptions import AlgraphsException, ClaimFalsified, InputError, ResourceLimitExceeded
from .core.graph_classes import classify
from .core.graph_model import Digraph, SimpleGraph
from .core.invariants import graph_invariant
from .core.settings import DEFAULT_LIMITS, SearchLimits

__all__ = [
    "FiniteAlgebra",
    "Operation",
    "SubalgebraSet",
    "GraphKind",
    "build_digraph",
    "build_graph",
    "build",
    "parse_algebra",
    "SimplicialComplex",
    "build_complex",
    "AlgraphsException",
    "ClaimFalsified",
    "InputError",
    "ResourceLimitExceeded",
    "classify",
    "Digraph",
    "SimpleGraph",
    "graph_invariant",
    "DEFAULT_LIMITS",
    "SearchLimits",
]
