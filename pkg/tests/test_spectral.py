import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from spex1p.constructions import cycle_ladder, cycle_square, path_square_plus, qp_graph
from spex1p.graph import (
    GraphError,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    from_edge_list,
    join,
)
from spex1p.oracle import adjacency_matrix, count_below, dense_lambda_max, tridiagonalize
from spex1p.spectral import (
    ConvergenceError,
    compare_candidates,
    perron_bounds_audit,
    quadratic_form,
    rayleigh_delta,
    rayleigh_quotient,
    spectral_radius,
)

PETERSEN = from_edge_list(
    10, [(i, (i + 1) % 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)]
)


@pytest.mark.parametrize(
    "g, lam",
    [
        (complete_graph(6), 5.0),
        (cycle_graph(7), 2.0),
        (PETERSEN, 3.0),
        (complete_bipartite(1, 9), 3.0),
        (complete_bipartite(2, 18), 6.0),
        (cycle_square(11), 4.0),
        (empty_graph(4), 0.0),
        (empty_graph(1), 0.0),
        # quotient matrix [[4, 2], [18, 0]] of two apexes over a 4-regular 18-vertex graph
        (join(cycle_square(18), empty_graph(2)), 2 + math.sqrt(40)),
    ],
)
def test_closed_form_values(g, lam):
    assert spectral_radius(g).lam == pytest.approx(lam, abs=1e-9)


def test_frozen_oracle_values():
    # frozen from the dense oracle (Householder + Sturm bisection), cross-checked with LAPACK
    assert spectral_radius(path_square_plus(8)).lam == pytest.approx(3.588015099730484, abs=1e-9)
    assert spectral_radius(join(qp_graph(18), complete_graph(2))).lam == pytest.approx(8.02551277280969, abs=1e-9)


def test_oracle_agrees_with_lapack():
    rng = np.random.default_rng(7)
    for _ in range(30):
        n = int(rng.integers(2, 14))
        a = np.triu((rng.random((n, n)) < 0.4).astype(float), 1)
        a = a + a.T
        g = from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n) if a[i, j]])
        assert dense_lambda_max(g) == pytest.approx(np.linalg.eigvalsh(a).max(), abs=1e-11)


def test_tridiagonal_count_below():
    d, e = tridiagonalize(adjacency_matrix(cycle_graph(6)))
    # spectrum of C6: 2, 1, 1, -1, -1, -2
    assert count_below(d, e, 1.5) == 5
    assert count_below(d, e, 0.0) == 3
    assert count_below(d, e, -3.0) == 0


@given(graphs(min_n=1, max_n=9))
def test_power_iteration_matches_oracle(g):
    assert spectral_radius(g).lam == pytest.approx(dense_lambda_max(g), abs=1e-8)


@given(graphs(min_n=2, max_n=9))
def test_perron_vector_is_eigenvector(g):
    res = spectral_radius(g)
    x = res.perron
    assert x.max() == pytest.approx(1.0)
    assert (x >= 0).all()
    ax = adjacency_matrix(g) @ x
    assert np.abs(ax - res.lam * x).max() <= 1e-8
    if g.m:
        assert rayleigh_quotient(g, x) == pytest.approx(res.lam, abs=1e-8)


@given(graphs(min_n=2, max_n=9), st.data())
def test_adding_an_edge_never_lowers_lambda(g, data):
    missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    if not missing:
        return
    e = data.draw(st.sampled_from(missing))
    assert spectral_radius(g.add_edges([e])).lam >= spectral_radius(g).lam - 1e-9


@given(graphs(min_n=1, max_n=9))
def test_degree_bounds(g):
    lam = spectral_radius(g).lam
    degs = g.degrees()
    assert sum(degs) / g.n - 1e-9 <= lam <= max(degs) + 1e-9


def test_disconnected_components():
    g = from_edge_list(7, [(0, 1), (1, 2), (0, 2)] + [(a, b) for a in range(3, 7) for b in range(a + 1, 7)])
    res = spectral_radius(g)
    assert res.lam == pytest.approx(3.0)
    assert (res.perron[:3] == 0).all() and (res.perron[3:] > 0).all()
    # equal components: the one with the lowest vertex carries the vector
    two = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    res2 = spectral_radius(two)
    assert (res2.perron[:3] > 0).all() and (res2.perron[3:] == 0).all()


def test_convergence_error_carries_estimate():
    g = path_square_plus(30)
    with pytest.raises(ConvergenceError) as info:
        spectral_radius(g, tol=1e-12, max_iter=3)
    est = info.value.result
    assert est.iterations == 3 and est.residual > 1e-12
    assert abs(est.lam - spectral_radius(g).lam) < 0.5


def test_invalid_arguments():
    with pytest.raises(GraphError):
        spectral_radius(empty_graph(0))
    with pytest.raises(ValueError):
        spectral_radius(cycle_graph(4), tol=0)


def test_result_serialization():
    res = spectral_radius(cycle_graph(5))
    d = res.to_dict()
    assert d["schema"] == "spex1p.spectral/1" and d["lambda"] == pytest.approx(2.0)
    assert len(d["perron"]) == 5
    assert "perron" not in res.to_dict(with_vector=False)


# --- Rayleigh comparisons --------------------------------------------------------

@given(graphs(min_n=3, max_n=8), st.data())
def test_rayleigh_delta_is_quadratic_form_difference(g, data):
    x = np.array(data.draw(st.lists(st.floats(0, 1), min_size=g.n, max_size=g.n)))
    present = sorted(g.edges)
    missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    removed = data.draw(st.lists(st.sampled_from(present), unique=True, max_size=3)) if present else []
    added = data.draw(st.lists(st.sampled_from(missing), unique=True, max_size=3)) if missing else []
    d = rayleigh_delta(g, x, added, removed)
    h = g.remove_edges(removed).add_edges(added) if added else g.remove_edges(removed)
    assert d.delta == pytest.approx(quadratic_form(h, x) - quadratic_form(g, x), abs=1e-12)


def test_rayleigh_delta_positive_implies_growth():
    g = path_square_plus(10)
    x = spectral_radius(g).perron
    lam = spectral_radius(g).lam
    d = rayleigh_delta(g, x, added=[(3, 6)], removed=[(0, 1)])
    assert d.delta > 0
    assert spectral_radius(g.remove_edges([(0, 1)]).add_edges([(3, 6)])).lam > lam
    # a negative delta is inconclusive: this rewiring still raises lambda
    d2 = rayleigh_delta(g, x, added=[(0, 3)], removed=[(4, 5)])
    assert d2.delta < 0
    assert spectral_radius(g.remove_edges([(4, 5)]).add_edges([(0, 3)])).lam > lam


def test_rayleigh_delta_validation():
    g = cycle_graph(5)
    x = np.ones(5)
    with pytest.raises(GraphError):
        rayleigh_delta(g, x, added=[(0, 1)])
    with pytest.raises(GraphError):
        rayleigh_delta(g, x, removed=[(0, 2)])
    with pytest.raises(GraphError):
        rayleigh_delta(g, x, added=[(0, 2), (2, 0)])
    with pytest.raises(ValueError):
        rayleigh_delta(g, np.ones(4))
    with pytest.raises(ValueError):
        rayleigh_quotient(g, np.zeros(5))


def test_compare_candidates():
    o = compare_candidates(complete_graph(5), cycle_square(7))
    assert o.result == "indistinguishable" and abs(o.gap) < 1e-9
    o2 = compare_candidates(join(cycle_square(18), empty_graph(2)), join(qp_graph(18), complete_graph(2)))
    assert o2.result == "first" and o2.gap > 0.29
    assert compare_candidates(cycle_graph(5), complete_graph(4)).result == "second"


# --- Perron-entry bounds -----------------------------------------------------------

@pytest.mark.parametrize("n", [50, 100])
def test_perron_bounds_on_ladder_candidate(n):
    g = join(cycle_ladder(n - 2), empty_graph(2))
    a = perron_bounds_audit(g, (n - 2, n - 1))
    assert a.holds and a.apexes_largest
    assert a.lower <= a.min_entry <= a.max_entry <= a.upper


def test_perron_bounds_tight_for_k2n():
    # in K_{2,n-2} every non-apex entry equals 2/lambda exactly
    n = 30
    a = perron_bounds_audit(complete_bipartite(n - 2, 2), (n - 2, n - 1))
    assert a.min_entry == pytest.approx(a.lower, abs=1e-9) and a.lower_ok


def test_perron_bounds_upper_vacuous_below_seven():
    a = perron_bounds_audit(join(cycle_ladder(8), empty_graph(2)), (8, 9))
    assert a.lam < 7 and a.upper == float("inf") and a.upper_ok


def test_perron_bounds_validation():
    with pytest.raises(GraphError):
        perron_bounds_audit(cycle_graph(5), (0, 1))
    with pytest.raises(GraphError):
        perron_bounds_audit(complete_graph(3), (0, 0))
