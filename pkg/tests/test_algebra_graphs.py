import pytest

from algraphs.core.algebra_graphs import (
    ENHANCED,
    ENHANCED_STRICT,
    POWER,
    GraphKind,
    ZeroDivisorPoset,
    build_digraph,
    build_graph,
    digraph_equality_report,
    enhanced_from_power_digraph,
    is_preorder,
    preorder_closure,
    product_digraph,
    strong_product,
    zero_divisor_graph,
)
from algraphs.core.builders import cyclic, direct_product
from algraphs.core.exceptions import InputError, ResourceLimitExceeded
from algraphs.core.graph_model import Digraph, SimpleGraph, is_spanning_subgraph
from algraphs.core.settings import SearchLimits
from tests.graphs import labels, path_graph


def edge_labels(graph: SimpleGraph) -> set[frozenset[str]]:
    return {frozenset((graph.labels[i], graph.labels[j])) for i, j in graph.edges()}


# ==============================================================================
# GraphKind
# ==============================================================================

def test_graph_kind_defaults_and_errors():
    assert GraphKind("enhanced").variant == "loose"
    assert str(ENHANCED_STRICT) == "enhanced(strict)"
    assert str(POWER) == "power"
    assert GraphKind.parse("power", "strict") == POWER
    with pytest.raises(InputError):
        GraphKind("commuting")  # type: ignore[arg-type]
    with pytest.raises(InputError):
        GraphKind("power", "strict")
    with pytest.raises(InputError):
        GraphKind("enhanced", "medium")  # type: ignore[arg-type]


# ==============================================================================
# Graphs on C6
# ==============================================================================

def test_power_graph_of_c6(c6):
    power = build_graph(c6, "power")
    assert power.size == 13
    assert not power.has_edge(2, 3)
    assert not power.has_edge(3, 4)
    assert power.has_edge(2, 4)


def test_enhanced_and_intersection_graphs_of_c6(c6):
    assert build_graph(c6, ENHANCED) == SimpleGraph.complete(c6.element_names)
    assert build_graph(c6, ENHANCED_STRICT) == SimpleGraph.complete(c6.element_names)
    assert build_graph(c6, "intersection_power") == build_graph(c6, POWER)


def test_difference_graph_of_c6(c6):
    assert edge_labels(build_graph(c6, "difference")) == {frozenset({"2", "3"}), frozenset({"3", "4"})}


def test_generating_graph_of_c6(c6):
    graph = build_graph(c6, "generating")
    assert graph.size == 11
    for pair in [(2, 3), (3, 4), (0, 1), (0, 5), (2, 5)]:
        assert graph.has_edge(*pair)
    for pair in [(2, 4), (0, 2), (0, 3), (0, 4)]:
        assert not graph.has_edge(*pair)


def test_independence_and_rank_graphs_of_c6(c6):
    assert edge_labels(build_graph(c6, "independence")) == {frozenset({"2", "3"}), frozenset({"3", "4"})}
    assert build_graph(c6, "rank").size == 0


def test_strict_and_loose_differ_on_a_semigroup(m41):
    x2, x3 = m41.index("x^2"), m41.index("x^3")
    assert build_graph(m41, ENHANCED).has_edge(x2, x3)
    assert not build_graph(m41, ENHANCED_STRICT).has_edge(x2, x3)
    assert not build_graph(m41, POWER).has_edge(x2, x3)


def test_graphs_of_klein_group(klein):
    star = {frozenset({"(0,0)", other}) for other in ("(0,1)", "(1,0)", "(1,1)")}
    assert edge_labels(build_graph(klein, POWER)) == star
    assert edge_labels(build_graph(klein, ENHANCED)) == star
    assert edge_labels(build_graph(klein, "intersection_power")) == star
    assert build_graph(klein, "generating").edges() == [(1, 2), (1, 3), (2, 3)]
    assert build_graph(klein, "endomorphism") == SimpleGraph.complete(klein.element_names)


def test_power_graph_is_spanning_in_enhanced(s3, q8, m41):
    for algebra in (s3, q8, m41):
        assert is_spanning_subgraph(build_graph(algebra, POWER), build_graph(algebra, ENHANCED))


def test_graph_order_cap(c6):
    with pytest.raises(ResourceLimitExceeded):
        build_graph(c6, POWER, SearchLimits(max_graph_order=5))


# ==============================================================================
# Digraphs
# ==============================================================================

def test_power_digraph(c6):
    digraph = build_digraph(c6, "power")
    assert digraph.out_neighbours(2) == [0, 4]
    assert digraph.out_neighbours(0) == []
    assert is_preorder(digraph)


def test_unknown_digraph_kind(c6):
    with pytest.raises(InputError):
        build_digraph(c6, "generating")  # type: ignore[arg-type]


def test_cyclic_group_digraphs_coincide(c6):
    report = digraph_equality_report(c6)
    assert report.digraphs_equal
    assert report.graphs_equal
    assert report.fully_invariant_all
    assert report.arc_witness is None


def test_klein_digraphs_differ(klein):
    report = digraph_equality_report(klein)
    assert not report.digraphs_equal
    assert not report.graphs_equal
    assert report.power_within_endo
    assert not report.endo_within_power
    assert report.arc_witness == ("(0,1)", "(1,0)", "endomorphism")
    assert not report.fully_invariant_all


def test_q8_digraphs_differ(q8):
    report = digraph_equality_report(q8)
    assert not report.digraphs_equal
    assert report.arc_witness is not None
    assert report.arc_witness[2] == "endomorphism"


def test_volkov_power_map_statuses(volkov):
    report = digraph_equality_report(volkov)
    assert report.digraphs_equal
    exponents = {status.images: status.power_exponent for status in report.power_map_status}
    assert exponents == {
        ("a", "b", "e"): 1,
        ("a", "e", "e"): None,
        ("e", "b", "e"): 3,
        ("e", "e", "e"): 2,
    }
    assert all(status.into_monogenic for status in report.power_map_status)


def test_enhanced_graph_from_power_digraph(s3, m41, klein):
    for algebra in (s3, m41, klein):
        assert enhanced_from_power_digraph(build_digraph(algebra, "power")) == build_graph(algebra, ENHANCED)


def test_preorder_closure_of_a_directed_path():
    path = Digraph(labels(3), [[False, True, False], [False, False, True], [False, False, False]])
    assert not is_preorder(path)
    closed = preorder_closure(path)
    assert closed.arc_list() == [(0, 1), (0, 2), (1, 2)]
    assert is_preorder(closed)


# ==============================================================================
# Zero-Divisor Graph
# ==============================================================================

def test_zero_divisor_graphs(c6, klein):
    assert zero_divisor_graph(c6).size == 0
    assert zero_divisor_graph(klein).edges() == [(1, 2), (1, 3), (2, 3)]


def test_zero_divisor_poset(c6, klein):
    poset = ZeroDivisorPoset.of(c6)
    assert poset.bottom == 6
    assert poset.is_preorder()
    assert poset.lower_bounds(2, 3) == [1, 5, 6]
    assert poset.equivalent(1, 5)
    assert not poset.equivalent(2, 3)
    assert ZeroDivisorPoset.of(klein).zero_divisors() == [1, 2, 3]


def test_zero_divisor_graph_is_enhanced_complement(s3, q8):
    for algebra in (s3, q8):
        assert zero_divisor_graph(algebra) == build_graph(algebra, ENHANCED).complement()


# ==============================================================================
# Products
# ==============================================================================

def test_coprime_product_digraph():
    c2, c3 = cyclic(2), cyclic(3)
    product = direct_product(c2, c3)
    expected = product_digraph(build_digraph(c2, "endomorphism"), build_digraph(c3, "endomorphism"))
    assert build_digraph(product, "endomorphism") == expected


def test_strong_product_strictly_contains_the_endomorphism_graph():
    c2, c3 = cyclic(2), cyclic(3)
    product = direct_product(c2, c3)
    strong = strong_product(build_graph(c2, "endomorphism"), build_graph(c3, "endomorphism"))
    endo = build_graph(product, "endomorphism")
    assert is_spanning_subgraph(endo, strong)
    u, v = product.index("(1,0)"), product.index("(0,1)")
    assert strong.has_edge(u, v)
    assert not endo.has_edge(u, v)


def test_strong_product_of_paths():
    strong = strong_product(path_graph(2), path_graph(2))
    assert strong == SimpleGraph.complete(strong.labels)
    assert strong.labels == ("(0,0)", "(0,1)", "(1,0)", "(1,1)")
