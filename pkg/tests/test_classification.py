import networkx as nx
import numpy as np
import pytest

from errors import InvalidQuiverError
from quivers.classification import (
    QuiverClass,
    QuiverType,
    classify_by_form,
    classify_by_graph,
    classify_quiver,
    diagram_candidates,
)
from quivers.quiver_model import Quiver, kronecker, path_quiver
from transforms.fixtures import load_fixture_quiver


def test_theta2_is_euclidean():
    result = classify_quiver(kronecker(2))
    assert result.tag is QuiverType.EUCLIDEAN
    assert str(result) == "Euclidean Ã1"


@pytest.mark.parametrize(
    "quiver, text",
    [
        (path_quiver(3), "Dynkin A3"),
        (kronecker(3), "Wild"),
    ],
)
def test_examples(quiver, text):
    assert str(classify_quiver(quiver)) == text


@pytest.mark.parametrize(
    "name, tag, label",
    [
        ("d4", QuiverType.DYNKIN, "D4"),
        ("a2_tilde", QuiverType.EUCLIDEAN, "Ã2"),
        ("b", QuiverType.WILD, None),
    ],
)
def test_fixture_quivers(name, tag, label):
    result = classify_quiver(load_fixture_quiver(name))
    assert result.tag is tag
    assert result.label == label


def test_d4_tilde_and_e6():
    star4 = Quiver.build(["c", "1", "2", "3", "4"], [(f"a{i}", str(i), "c") for i in range(1, 5)])
    assert str(classify_quiver(star4)) == "Euclidean D̃4"
    arms = [("x1", "c"), ("x2", "x1"), ("y1", "c"), ("y2", "y1")]
    e6 = Quiver.build(["c", "x1", "x2", "y1", "y2", "z"], [(f"a{k}", t, h) for k, (t, h) in enumerate(arms)] + [("az", "z", "c")])
    assert str(classify_quiver(e6)) == "Dynkin E6"


def test_form_and_graph_agree_on_wild_trees():
    star5 = Quiver.build(["c"] + [str(i) for i in range(5)], [(f"a{i}", str(i), "c") for i in range(5)])
    assert classify_by_form(star5) is QuiverType.WILD
    assert classify_quiver(star5).tag is QuiverType.WILD


def test_disconnected_quiver_is_rejected():
    with pytest.raises(InvalidQuiverError):
        classify_quiver(Quiver.build(["1", "2"], []))


def test_label_present_iff_tame():
    with pytest.raises(ValueError):
        QuiverClass(tag=QuiverType.WILD, label="A2")
    with pytest.raises(ValueError):
        QuiverClass(tag=QuiverType.DYNKIN)


def _orient(graph: nx.MultiGraph, rng: np.random.Generator) -> Quiver:
    """Orient every edge along a random vertex order, which never closes a cycle."""
    nodes = list(graph.nodes)
    rank = {v: int(r) for v, r in zip(nodes, rng.permutation(len(nodes)))}
    arrows = []
    for k, (u, v) in enumerate(graph.edges()):
        tail, head = (u, v) if rank[u] < rank[v] else (v, u)
        arrows.append((f"a{k}", str(tail), str(head)))
    return Quiver.build([str(v) for v in nodes], arrows)


def _random_tree(n: int, rng: np.random.Generator) -> nx.MultiGraph:
    if n < 3:
        return nx.MultiGraph(nx.path_graph(n))
    return nx.MultiGraph(nx.from_prufer_sequence([int(x) for x in rng.integers(0, n, size=n - 2)]))


def _random_connected(n: int, rng: np.random.Generator) -> nx.MultiGraph:
    g = _random_tree(n, rng)
    if n < 2:
        return g
    for _ in range(int(rng.integers(0, 3, endpoint=True))):
        u, v = (int(x) for x in rng.choice(n, size=2, replace=False))
        g.add_edge(u, v)
    return g


def _generated_quivers():
    rng = np.random.default_rng(20240917)
    cases = []
    for n in range(1, 10):
        for _tag, label, graph in diagram_candidates(n):
            for _ in range(3):
                cases.append((label, _orient(graph, rng)))
        for k in range(12):
            cases.append((f"tree{n}-{k}", _orient(_random_tree(n, rng), rng)))
            cases.append((f"multi{n}-{k}", _orient(_random_connected(n, rng), rng)))
    return cases


@pytest.mark.parametrize("name, quiver", _generated_quivers(), ids=lambda x: x if isinstance(x, str) else None)
def test_form_and_graph_agree_on_generated_quivers(name, quiver):
    form_tag = classify_by_form(quiver)
    graph_tag, label = classify_by_graph(quiver)
    assert form_tag is graph_tag
    assert (label is None) == (graph_tag is QuiverType.WILD)
    assert classify_quiver(quiver).tag is graph_tag


@pytest.mark.parametrize("n", range(1, 10))
def test_every_diagram_is_recognized_under_any_orientation(n):
    rng = np.random.default_rng(n)
    for tag, label, graph in diagram_candidates(n):
        for _ in range(4):
            result = classify_quiver(_orient(graph, rng))
            assert (result.tag, result.label) == (tag, label)
