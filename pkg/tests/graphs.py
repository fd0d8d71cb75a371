"""Small named graphs and brute-force oracles shared by the tests."""

from itertools import combinations, product

import networkx as nx
import numpy as np

from algraphs.core.graph_model import SimpleGraph


def labels(n: int) -> list[str]:
    return [str(i) for i in range(n)]


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(labels(n), [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(labels(n), [(i, i + 1) for i in range(n - 1)])


def random_graph(n: int, density: float, seed: int) -> SimpleGraph:
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < density, k=1)
    return SimpleGraph(labels(n), upper | upper.T)


def induces_p4(graph: SimpleGraph, quad: tuple[int, ...]) -> bool:
    degrees = sorted(sum(graph.has_edge(u, v) for v in quad if v != u) for u in quad)
    return degrees == [1, 1, 2, 2] and nx.is_connected(graph.to_networkx().subgraph(quad))


def has_induced_p4(graph: SimpleGraph) -> bool:
    return any(induces_p4(graph, quad) for quad in combinations(range(graph.order), 4))


def _is_induced_cycle_set(graph: SimpleGraph, vertices: tuple[int, ...]) -> bool:
    sub = graph.to_networkx().subgraph(vertices)
    return all(d == 2 for _, d in sub.degree()) and nx.is_connected(sub)


def is_perfect_brute(graph: SimpleGraph) -> bool:
    """No induced odd cycle of length ≥ 5 in the graph or its complement."""
    complement = graph.complement()
    for k in range(5, graph.order + 1, 2):
        for vertices in combinations(range(graph.order), k):
            if _is_induced_cycle_set(graph, vertices) or _is_induced_cycle_set(complement, vertices):
                return False
    return True


def chromatic_brute(graph: SimpleGraph) -> int:
    edges = graph.edges()
    for k in range(0 if graph.order == 0 else 1, graph.order + 1):
        for colouring in product(range(k), repeat=graph.order):
            if all(colouring[i] != colouring[j] for i, j in edges):
                return k
    return graph.order
