import pytest

from algraphs.core.algebra_graphs import build_digraph, build_graph
from algraphs.core.builders import cyclic
from algraphs.core.complexes import build_complex
from algraphs.core.exceptions import InputError
from algraphs.core.export import GraphExporter
from algraphs.core.graph_model import Digraph, SimpleGraph


def test_dot_for_a_graph_is_sorted():
    text = GraphExporter.to_dot(build_graph(cyclic(3), "power"), "power")
    assert text == (
        "graph power {\n"
        '  "0";\n'
        '  "1";\n'
        '  "2";\n'
        '  "0" -- "1";\n'
        '  "0" -- "2";\n'
        '  "1" -- "2";\n'
        "}\n"
    )


def test_dot_for_a_digraph():
    text = GraphExporter.to_dot(build_digraph(cyclic(3), "power"), "power digraph")
    lines = text.splitlines()
    assert lines[0] == "digraph power_digraph {"
    assert lines[4:8] == ['  "1" -> "0";', '  "1" -> "2";', '  "2" -> "0";', '  "2" -> "1";']


def test_dot_quotes_labels_and_names():
    graph = SimpleGraph.from_edges(['say "hi"', "b"], [(0, 1)])
    text = GraphExporter.to_dot(graph, "2x")
    assert text.startswith("graph G_2x {")
    assert '"say \\"hi\\""' in text


def test_edge_lists_rebuild_the_graph(klein):
    graph = build_graph(klein, "generating")
    document = GraphExporter.to_edge_list(graph)
    assert document.edges == [[1, 2], [1, 3], [2, 3]]
    assert not document.directed
    assert GraphExporter.from_edge_list(document.model_dump_json()) == graph


def test_edge_lists_rebuild_a_digraph(klein):
    digraph = build_digraph(klein, "endomorphism")
    document = GraphExporter.to_edge_list(digraph)
    assert document.directed
    rebuilt = GraphExporter.from_edge_list(document)
    assert isinstance(rebuilt, Digraph)
    assert rebuilt == digraph


@pytest.mark.parametrize(
    "text",
    [
        '{"vertices": ["a", "b"], "edges": [[0, 2]]}',
        '{"vertices": ["a", "b"], "edges": [[0, 0]]}',
        '{"vertices": ["a", "b"], "edges": [[0]]}',
        '{"vertices": ["a"], "arcs": []}',
    ],
)
def test_bad_edge_lists(text):
    with pytest.raises(InputError):
        GraphExporter.from_edge_list(text)


def test_complex_document(c6):
    document = GraphExporter.to_complex_document(build_complex(c6, "independence"))
    assert document.ground == ["1", "2", "3", "4", "5"]
    assert document.facets == [[0], [1, 2], [2, 3], [4]]
