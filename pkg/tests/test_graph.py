import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from spex1p.canon import brute_canonical_form, canonical_form, is_isomorphic
from spex1p.graph import (
    Graph,
    GraphError,
    VertexSplitSpec,
    cartesian_product,
    complete_bipartite,
    complete_graph,
    contains_k37,
    cycle_graph,
    degeneracy,
    empty_graph,
    from_edge_list,
    has_clique,
    is_kt_free,
    join,
    max_clique_size,
    path_graph,
    split_vertex,
)
from spex1p.graph6 import Graph6Error, graph6_decode, graph6_encode, read_graph6


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(3, frozenset({(1, 1)}))
    with pytest.raises(GraphError):
        Graph(3, frozenset({(0, 3)}))
    with pytest.raises(GraphError):
        Graph(3, frozenset({(2, 1)}))
    with pytest.raises(GraphError):
        from_edge_list(2, [(0, 5)])


def test_add_remove_edges():
    g = path_graph(4)
    with pytest.raises(GraphError):
        g.add_edges([(0, 1)])
    with pytest.raises(GraphError):
        g.remove_edges([(0, 2)])
    assert g.add_edges([(3, 0)]).edges == cycle_graph(4).edges


def test_join_and_product_counts():
    g = join(cycle_graph(5), empty_graph(2))
    assert (g.n, g.m) == (7, 15)
    assert g.degrees()[5:] == [5, 5]
    prism = cartesian_product(cycle_graph(4), complete_graph(2))
    assert (prism.n, prism.m) == (8, 12)
    assert all(d == 3 for d in prism.degrees())
    assert complete_bipartite(2, 3).m == 6


def test_split_vertex_shares_rung():
    # split vertex 0 of C4: neighbour 1 to the old copy, 3 to the new one, none shared
    g = split_vertex(cycle_graph(4), VertexSplitSpec.by_neighbors(0, a=[1], b=[3]))
    assert (g.n, g.m) == (5, 4)
    assert g.is_connected() and not g.has_edge(0, 4)
    shared = split_vertex(complete_graph(3), VertexSplitSpec.by_neighbors(0, a=[1], b=[2], shared=[]))
    assert shared.m == 3
    with pytest.raises(GraphError):
        split_vertex(cycle_graph(4), VertexSplitSpec.by_neighbors(0, a=[1]))
    with pytest.raises(GraphError):
        split_vertex(cycle_graph(4), VertexSplitSpec.by_neighbors(0, a=[1, 3], b=[3]))


def test_split_vertex_duplicates_shared_edge():
    g = split_vertex(path_graph(3), VertexSplitSpec.by_neighbors(1, a=[0], b=[2], shared=[]))
    assert g.m == 2
    h = split_vertex(path_graph(3), VertexSplitSpec.by_neighbors(1, a=[0], b=[], shared=[2]))
    assert h.edges == frozenset({(0, 1), (1, 2), (2, 3)})


@pytest.mark.parametrize("n", range(1, 9))
def test_clique_of_complete(n):
    assert max_clique_size(complete_graph(n)) == n
    assert has_clique(complete_graph(n), n)
    assert not has_clique(complete_graph(n), n + 1)


def test_kt_free_examples():
    assert not is_kt_free(complete_graph(5), 5)
    assert is_kt_free(complete_bipartite(3, 3), 3)
    assert max_clique_size(empty_graph(4)) == 1
    assert max_clique_size(empty_graph(0)) == 0
    with pytest.raises(GraphError):
        is_kt_free(complete_graph(3), 1)


def _brute_clique(g):
    from itertools import combinations

    best = min(g.n, 1)
    for k in range(2, g.n + 1):
        if any(all(g.has_edge(a, b) for a, b in combinations(s, 2)) for s in combinations(range(g.n), k)):
            best = k
    return best


@given(graphs(max_n=8))
def test_clique_matches_brute_force(g):
    w = max_clique_size(g)
    assert w == _brute_clique(g)
    assert has_clique(g, w) and not has_clique(g, w + 1)


def test_k37_detection():
    k37 = complete_bipartite(3, 7)
    assert contains_k37(k37)
    assert not contains_k37(complete_bipartite(3, 6))
    assert not contains_k37(complete_bipartite(2, 9))
    assert contains_k37(complete_graph(10))


@given(graphs(max_n=9))
def test_degeneracy_order_property(g):
    d, order = degeneracy(g)
    assert sorted(order) == list(range(g.n))
    pos = {v: i for i, v in enumerate(order)}
    later = [sum(1 for u in g.neighbors(v) if pos[u] > pos[v]) for v in range(g.n)]
    assert max(later, default=0) == d
    # every subgraph has a vertex of degree <= d: check the induced subgraph on each suffix
    for i in range(g.n):
        sub = g.induced(order[i:])
        assert min(sub.degrees()) <= d


def test_degeneracy_values():
    assert degeneracy(complete_graph(8))[0] == 7
    assert degeneracy(cycle_graph(6))[0] == 2
    assert degeneracy(empty_graph(3))[0] == 0


# --- graph6 ---------------------------------------------------------------------

def test_graph6_known_strings():
    assert graph6_encode(complete_graph(5)) == "D~{"
    assert graph6_encode(empty_graph(0)) == "?"
    assert graph6_encode(path_graph(2)) == "A_"
    assert graph6_decode(">>graph6<<D~{").edges == complete_graph(5).edges


def test_graph6_extended_size():
    g = path_graph(70)
    s = graph6_encode(g)
    assert s.startswith("~")
    assert graph6_decode(s).edges == g.edges


@given(graphs(max_n=12))
def test_graph6_roundtrip(g):
    h = graph6_decode(graph6_encode(g))
    assert (h.n, h.edges) == (g.n, g.edges)


@pytest.mark.parametrize("bad", ["", "D~", "D~{{", "D~|", "D ~{", "Dé{"])
def test_graph6_errors(bad):
    with pytest.raises(Graph6Error):
        graph6_decode(bad)


def test_read_graph6_reports_line():
    with pytest.raises(Graph6Error) as info:
        list(read_graph6(["D~{", "", "Bw", "xx"]))
    assert info.value.line == 4
    assert [ln for ln, _ in read_graph6(["D~{", "", "Bw"])] == [1, 3]


# --- canonical form -------------------------------------------------------------

@given(graphs(max_n=7), st.data())
def test_canonical_form_is_label_invariant(g, data):
    perm = data.draw(st.permutations(range(g.n)))
    assert canonical_form(g) == canonical_form(g.relabel(perm))


@given(graphs(max_n=6), graphs(max_n=6))
def test_canonical_form_separates_like_brute_force(g, h):
    assert (canonical_form(g) == canonical_form(h)) == (brute_canonical_form(g) == brute_canonical_form(h))


def test_isomorphism_examples():
    assert is_isomorphic(cycle_graph(6), cycle_graph(6).relabel([3, 1, 4, 0, 5, 2]))
    prism = cartesian_product(cycle_graph(3), complete_graph(2))
    k33 = complete_bipartite(3, 3)
    assert not is_isomorphic(prism, k33)  # both cubic on 6 vertices
    assert is_isomorphic(complete_graph(12), complete_graph(12))
