import networkx as nx
import pytest

from algraphs.core.algebra_graphs import build_graph
from algraphs.core.exceptions import InputError, ResourceLimitExceeded
from algraphs.core.graph_model import SimpleGraph
from algraphs.core.invariants import (
    Invariant,
    chromatic_number,
    clique_number,
    diameter,
    graph_invariant,
    is_weakly_perfect,
    matching_number,
    maximum_clique,
    spread,
)
from algraphs.core.settings import SearchLimits
from tests.graphs import chromatic_brute, cycle_graph, labels, path_graph, random_graph


# ==============================================================================
# Clique and Colouring
# ==============================================================================

def test_clique_of_c6_power_graph(c6):
    power = build_graph(c6, "power")
    clique = maximum_clique(power)
    assert len(clique) == 5
    assert all(power.has_edge(u, v) for i, u in enumerate(clique) for v in clique[i + 1:])


def test_odd_cycle_is_not_weakly_perfect():
    assert clique_number(cycle_graph(5)) == 2
    assert chromatic_number(cycle_graph(5)) == 3
    assert not is_weakly_perfect(cycle_graph(5))
    assert is_weakly_perfect(cycle_graph(6))


def test_empty_graph():
    empty = SimpleGraph.edgeless([])
    assert clique_number(empty) == 0
    assert chromatic_number(empty) == 0


@pytest.mark.parametrize("n, density, seed", [(n, d, s) for n in (5, 7) for d in (0.3, 0.6) for s in range(3)])
def test_clique_and_chromatic_against_brute_force(n, density, seed):
    graph = random_graph(n, density, seed)
    expected_clique = max((len(c) for c in nx.find_cliques(graph.to_networkx())), default=0)
    assert clique_number(graph) == expected_clique
    assert chromatic_number(graph) == chromatic_brute(graph)


def test_clique_cap():
    with pytest.raises(ResourceLimitExceeded):
        clique_number(path_graph(5), SearchLimits(max_clique_order=4))


# ==============================================================================
# Matching
# ==============================================================================

def test_matching(c6):
    assert matching_number(build_graph(c6, "power")) == 3
    assert matching_number(path_graph(5)) == 2
    with pytest.raises(ResourceLimitExceeded):
        matching_number(path_graph(5), SearchLimits(max_matching_order=4))


# ==============================================================================
# Spread and Diameter
# ==============================================================================

def test_spread():
    assert spread(SimpleGraph.complete(labels(4))) == Invariant("spread", 3)
    assert spread(cycle_graph(5)) == Invariant("spread", 1)
    assert spread(SimpleGraph.edgeless(labels(2))) == Invariant("spread", 0)


def test_spread_cap_gives_a_lower_bound():
    result = spread(SimpleGraph.complete(labels(6)), SearchLimits(max_spread=2))
    assert result == Invariant("spread", 2, "at_least")
    assert str(result) == ">=2"


def test_diameter():
    assert diameter(path_graph(4)) == Invariant("diameter", 3)
    disconnected = SimpleGraph.edgeless(labels(3))
    assert str(diameter(disconnected)) == "inf"
    with pytest.raises(ValueError):
        int(diameter(disconnected))
    assert int(diameter(SimpleGraph.edgeless(labels(1)))) == 0


# ==============================================================================
# Dispatch
# ==============================================================================

def test_graph_invariant_dispatch(c6):
    power = build_graph(c6, "power")
    assert int(graph_invariant(power, "clique")) == 5
    assert int(graph_invariant(power, "chromatic")) == 5
    assert int(graph_invariant(power, "matching")) == 3
    assert int(graph_invariant(power, "diameter")) == 2
    with pytest.raises(InputError):
        graph_invariant(power, "girth")  # type: ignore[arg-type]
