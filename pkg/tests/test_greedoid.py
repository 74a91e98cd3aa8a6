import pytest
from hypothesis import given, strategies as st

from rootpoly import digraph as dg
from rootpoly import greedoid as gd
from rootpoly.corpus import SIX_VERTEX, directed_cycle, two_vertex
from rootpoly.polynomial import Polynomial
from rootpoly.polytope import dual_root_polytope
from conftest import eulerian_digraphs


def test_feasible_sets():
    Gr = gd.BranchingGreedoid(SIX_VERTEX, 1)
    assert gd.is_feasible(Gr, set())
    assert gd.is_feasible(Gr, {1, 3})
    assert not gd.is_feasible(Gr, {9})        # 2 -> 3 without reaching 2
    assert not gd.is_feasible(Gr, {2})        # enters the root


def test_lex_min_ordering():
    Gr = gd.BranchingGreedoid(SIX_VERTEX, 1)
    assert gd.lex_min_feasible_ordering(Gr, {1, 3, 6, 7, 8}) == (1, 3, 6, 8, 7)


def test_three_cycle():
    Gr = gd.BranchingGreedoid(directed_cycle(3), 1)
    for m in gd.METHODS:
        assert gd.greedoid_polynomial(Gr, m) == Polynomial([0, 1])


def test_two_vertex_four_edges():
    G = two_vertex(2)
    Gr = gd.BranchingGreedoid(G, 1)
    for m in gd.METHODS:
        assert gd.greedoid_polynomial(Gr, m) == Polynomial([0, 0, 1, 1])
    C = gd.dual_complex(Gr)
    assert C.dimension == 2
    # facets {2,3,4} and {1,2,4}: 8 + 8 - 4 shared faces
    assert len(C.faces) == 12
    assert gd.h_polynomial(C) == Polynomial([0, 0, 1, 1])


def test_six_vertex_all_methods_all_roots():
    P = dual_root_polytope(SIX_VERTEX)
    for r in SIX_VERTEX.vertices:
        Gr = gd.BranchingGreedoid(SIX_VERTEX, r)
        for m in gd.METHODS:
            assert gd.greedoid_polynomial(Gr, m, P=P) == Polynomial([0, 0, 0, 2, 1])


@given(eulerian_digraphs(), st.integers(1, 4))
def test_methods_agree(G, r):
    r = min(r, G.n)
    Gr = gd.BranchingGreedoid(G, r)
    P = dual_root_polytope(G)
    values = {m: gd.greedoid_polynomial(Gr, m, P=P) for m in gd.METHODS}
    assert len(set(values.values())) == 1, values


@given(eulerian_digraphs())
def test_activity_equivalence_per_edge(G):
    Gr = gd.BranchingGreedoid(G, 1)
    for B in Gr.bases():
        for e in set(G.edge_ids) - B:
            assert gd.externally_active_greedoid(Gr, B, e) == dg.external_semiactive(G, 1, B, e)


@given(eulerian_digraphs())
def test_lambda_at_one_counts_arborescences(G):
    lam = gd.greedoid_polynomial(gd.BranchingGreedoid(G, 1))
    assert lam(1) == dg.count_arborescences_det(G, 1)


@given(eulerian_digraphs())
def test_lambda_exponent_window(G):
    # top coefficient is h*_0 = 1, constant term h*_(d+1) = 0
    lam = gd.greedoid_polynomial(gd.BranchingGreedoid(G, 1))
    assert lam[0] == 0
    assert lam.degree == G.m - G.n + 1


def test_hstar_methods_refuse_non_eulerian():
    G = dg.Digraph(3, ((1, 2), (2, 3), (1, 3)))
    Gr = gd.BranchingGreedoid(G, 1)
    assert gd.greedoid_polynomial(Gr, "activity") == gd.greedoid_polynomial(Gr, "dual_complex")
    with pytest.raises(ValueError):
        gd.greedoid_polynomial(Gr, "hstar_ehrhart")


def test_unknown_method():
    with pytest.raises(ValueError):
        gd.greedoid_polynomial(gd.BranchingGreedoid(directed_cycle(2), 1), "magic")


def test_disconnected_rejected():
    with pytest.raises(ValueError):
        gd.BranchingGreedoid(dg.Digraph(3, ((1, 2), (2, 1))), 1)


def test_lambda_from_hstar():
    assert gd.lambda_from_hstar(Polynomial([1, 2]), 3) == Polynomial([0, 0, 0, 2, 1])
