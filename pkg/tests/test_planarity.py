import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs
from spex1p.certificate import DrawingCertificate
from spex1p.graph import Graph, complete_bipartite, complete_graph, cycle_graph, empty_graph, join
from spex1p.planarity import (
    DEGENERACY,
    EDGE_BOUND,
    K37,
    NO,
    SEARCH_EXHAUSTED,
    UNKNOWN,
    YES,
    CertificateError,
    is_one_planar,
    is_planar,
    kuratowski_witness,
    necessary_conditions,
    planarize,
    search_certificate,
    verify_certificate,
)


def _union(g, k):
    return Graph(g.n + k, g.edges)


@given(graphs(max_n=9))
def test_planarity_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    assert is_planar(g) == nx.check_planarity(h)[0]


def test_planarity_examples():
    assert is_planar(complete_graph(4))
    assert not is_planar(complete_graph(5))
    assert not is_planar(complete_bipartite(3, 3))
    assert is_planar(complete_bipartite(2, 4))
    assert is_planar(empty_graph(0)) and is_planar(empty_graph(3))


def test_kuratowski_witness():
    assert kuratowski_witness(cycle_graph(6)) is None
    w = kuratowski_witness(complete_graph(5))
    assert len(w) == 10
    w33 = kuratowski_witness(complete_bipartite(3, 3))
    assert len(w33) == 9


def test_certificate_checks():
    k5 = complete_graph(5)
    good = DrawingCertificate.of([((0, 2), (1, 3))])
    assert verify_certificate(k5, good)
    assert not verify_certificate(k5, DrawingCertificate())
    assert not verify_certificate(k5, DrawingCertificate.of([((0, 1), (1, 2))]))  # shared endpoint
    twice = DrawingCertificate.of([((0, 2), (1, 3)), ((0, 2), (1, 4))])
    assert not verify_certificate(k5, twice)
    assert not verify_certificate(cycle_graph(5), good)  # edges missing
    with pytest.raises(CertificateError):
        planarize(k5, twice)


def test_planarize_labels():
    p = planarize(complete_graph(5), DrawingCertificate.of([((0, 2), (1, 3))]))
    assert p.n == 6 and p.m == 10 - 2 + 4
    assert sorted(p.neighbors(5)) == [0, 1, 2, 3]


def test_certificate_quads_roundtrip():
    c = DrawingCertificate.of([((3, 1), (0, 2)), ((4, 5), (6, 7))])
    assert DrawingCertificate.from_quads(c.to_quads()) == c
    with pytest.raises(ValueError):
        DrawingCertificate.from_quads([[0, 1, 2]])
    assert c.relabel([1, 0, 2, 3, 4, 5, 6, 7]).to_quads() == [[0, 3, 1, 2], [4, 5, 6, 7]]


@pytest.mark.parametrize(
    "g, status, reason",
    [
        (complete_graph(5), YES, None),
        (complete_graph(6), YES, None),
        (complete_graph(7), NO, EDGE_BOUND),
        (complete_bipartite(3, 7), NO, K37),
        (_union(complete_graph(9), 2), NO, DEGENERACY),
    ],
)
def test_one_planar_verdicts(g, status, reason):
    v = is_one_planar(g)
    assert v.status == status and v.reason == reason
    if status == YES:
        assert verify_certificate(g, v.certificate)


def test_k1222_is_one_planar():
    # K_{1,2,2,2}: dense and non-planar, with 18 of the 20 edges allowed at n = 7
    parts = [[0], [1, 2], [3, 4], [5, 6]]
    edges = {(u, v) for i, a in enumerate(parts) for b in parts[i + 1 :] for u in a for v in b}
    g = Graph(7, frozenset(edges))
    assert g.m == 18 and not is_planar(g)
    v = is_one_planar(g)
    assert v.status == YES and verify_certificate(g, v.certificate)


@pytest.mark.slow
def test_k7_minus_edge_is_not_one_planar():
    g = complete_graph(7).remove_edges([(0, 1)])
    assert necessary_conditions(g) is None
    v = is_one_planar(g)
    assert (v.status, v.reason) == (NO, SEARCH_EXHAUSTED)


def test_budget_gives_unknown():
    g = complete_graph(7).remove_edges([(0, 1)])
    v = is_one_planar(g, budget=50)
    assert v.status == UNKNOWN and v.nodes > 50


def test_restricted_crossings():
    k5 = complete_graph(5)
    assert search_certificate(k5, crossable=[]).status == NO
    v = search_certificate(k5, crossable=[(0, 2), (1, 3)])
    assert v.status == YES and v.certificate.to_quads() == [[0, 2, 1, 3]]


def test_hint_is_used():
    k6 = complete_graph(6)
    hint = is_one_planar(k6).certificate
    v = is_one_planar(k6, hint=hint)
    assert v.status == YES and v.certificate == hint and v.nodes == 0


def test_verdict_serialization():
    d = is_one_planar(complete_graph(7)).to_dict()
    assert d == {"schema": "spex1p.verdict/1", "status": "no", "reason": "EdgeBound", "nodes": 0}


@given(graphs(max_n=6))
def test_every_graph_on_six_vertices_is_one_planar(g):
    v = is_one_planar(g)
    assert v.status == YES
    assert verify_certificate(g, v.certificate)
