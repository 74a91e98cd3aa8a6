import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rootpoly import digraph as dg
from rootpoly import matroid as om
from rootpoly.corpus import SIX_VERTEX, directed_cycle, two_vertex
from rootpoly.exact_arith import IntegerMatrix, nullspace, rank
from conftest import eulerian_digraphs


def brute_circuits(R):
    """Minimal dependent sets by rank, signed by their (1-dim) kernel."""
    out = set()
    for k in range(1, R.rank + 2):
        for S in itertools.combinations(R.labels, k):
            if any(set(C.support) < set(S) for C in out):
                continue
            if rank(R.submatrix(S)) == k - 1 and all(
                    rank(R.submatrix([x for x in S if x != y])) == k - 1 for y in S):
                (v,) = nullspace(R.submatrix(S))
                C = om.SignedSubset(frozenset(e for e, x in zip(S, v) if x > 0),
                                    frozenset(e for e, x in zip(S, v) if x < 0))
                out.add(C.canonical())
    return out


def brute_cocircuits(R):
    """Supports of row-space vectors minimal among nonzero ones."""
    out = set()
    for k in range(1, R.m + 1):
        for S in itertools.combinations(R.labels, k):
            if any(set(C.support) < set(S) for C in out):
                continue
            # vectors y^T A vanishing off S: y orthogonal to the other columns
            rest = [R.column(e) for e in R.labels if e not in S]
            ys = nullspace(IntegerMatrix.from_rows(rest)) if rest else nullspace(
                IntegerMatrix.from_rows([[0] * R.rank]))
            for y in ys:
                vals = om.functional_values(R, y)
                supp = {e for e, x in vals.items() if x != 0}
                if supp == set(S):
                    out.add(om.SignedSubset(frozenset(e for e in S if vals[e] > 0),
                                            frozenset(e for e in S if vals[e] < 0)).canonical())
                    break
    return out


@given(eulerian_digraphs(m_max=6))
def test_circuits_match_brute_force(G):
    R = om.graphic_matroid(G)
    assert set(om.enumerate_circuits(R)) == brute_circuits(R)


@given(eulerian_digraphs(m_max=6))
def test_cocircuits_match_brute_force(G):
    R = om.graphic_matroid(G)
    assert set(om.enumerate_cocircuits(R)) == brute_cocircuits(R)


@given(eulerian_digraphs())
def test_graphic_circuits_are_cycles(G):
    R = om.graphic_matroid(G)
    for T in dg.enumerate_spanning_trees(G)[:5]:
        for e in set(G.edge_ids) - T:
            C = om.fundamental_circuit(R, T, e)
            D = dg.fundamental_cycle(G, T, e)
            assert (C.positive, C.negative) == (D.positive, D.negative)
        for e in T:
            C = om.fundamental_cocircuit(R, T, e)
            D = dg.fundamental_cut(G, T, e)
            # a signed cocircuit is fixed by its support up to global sign
            assert (C.positive, C.negative) == (D.positive, D.negative)


@given(eulerian_digraphs())
def test_eulerian_graph_gives_eulerian_matroid_and_co_eulerian_dual(G):
    R = om.graphic_matroid(G)
    assert om.is_eulerian_matroid(R)
    if R.rank < R.m:
        D = om.dual(R)
        assert D.rank == G.m - G.n + 1
        assert om.is_co_eulerian(D)


@given(eulerian_digraphs())
def test_dual_swaps_circuits_and_cocircuits(G):
    R = om.graphic_matroid(G)
    D = om.dual(R)
    assert set(om.enumerate_circuits(D)) == set(om.enumerate_cocircuits(R))
    assert set(om.enumerate_cocircuits(D)) == set(om.enumerate_circuits(R))
    assert set(om.enumerate_circuits(om.dual(D))) == set(om.enumerate_circuits(R))


@given(eulerian_digraphs())
def test_circuits_orthogonal_to_cocircuits(G):
    R = om.graphic_matroid(G)
    for C in om.enumerate_circuits(R):
        for K in om.enumerate_cocircuits(R):
            assert om.orthogonal(C, K)


@given(eulerian_digraphs(), st.randoms(use_true_random=False))
def test_representation_invariance(G, rnd):
    R1 = om.graphic_matroid(G)
    R2 = om.graphic_matroid(G, deleted_row=rnd.randint(1, G.n))
    order = list(G.edge_ids)
    rnd.shuffle(order)
    D1, D2 = om.dual(R1), om.dual(R2, order)
    assert om.enumerate_circuits(R1) == om.enumerate_circuits(R2)
    assert om.enumerate_circuits(D1) == om.enumerate_circuits(D2)
    assert om.enumerate_bases(D1) == om.enumerate_bases(D2)


def test_dual_of_cycle_is_all_ones_row():
    D = om.dual(om.graphic_matroid(directed_cycle(3)))
    assert D.matrix.tolist() == [[1, 1, 1]]


def test_six_vertex_ranks():
    R = om.graphic_matroid(SIX_VERTEX)
    assert (R.rank, om.dual(R).rank) == (5, 4)


def test_full_row_rank_required():
    with pytest.raises(om.DimensionError):
        om.MatroidRep(IntegerMatrix.from_rows([[1, 1], [1, 1]]), (1, 2))


@given(eulerian_digraphs(), st.data())
def test_zero_combination_decomposes_into_circuits(G, data):
    R = om.dual(om.graphic_matroid(G))
    K = nullspace(R.matrix)
    if not K:
        return
    coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=len(K), max_size=len(K)))
    lam = [sum(c * v[i] for c, v in zip(coeffs, K)) for i in range(R.m)]
    parts = om.decompose_zero_combination(R, lam)
    circuits = set(om.enumerate_circuits(R))
    total = [Fraction(0)] * R.m
    for C, nu in parts:
        assert nu > 0
        assert C.canonical() in circuits
        for i, e in enumerate(R.labels):
            total[i] += nu * ((e in C.positive) - (e in C.negative))
    assert total == [Fraction(x) for x in lam]
    if any(lam):
        C = om.conformal_circuit(R, lam)
        assert all(lam[R.index(e)] > 0 for e in C.positive)
        assert all(lam[R.index(e)] < 0 for e in C.negative)


def test_decompose_rejects_non_kernel():
    R = om.graphic_matroid(two_vertex(1))
    with pytest.raises(ValueError):
        om.decompose_zero_combination(R, [1, 0])


@given(eulerian_digraphs(), st.randoms(use_true_random=False))
def test_semiactivity_complementary_under_duality(G, rnd):
    # an element is internally semi-active in the dual at E - B
    # exactly when it is externally semi-active in R at B
    R = om.graphic_matroid(G)
    D = om.dual(R)
    order = list(G.edge_ids)
    rnd.shuffle(order)
    E = frozenset(G.edge_ids)
    for B in om.enumerate_bases(R)[:6]:
        for e in E - B:
            assert om.external_semiactive_matroid(R, B, e, order) == \
                om.internal_semiactive(D, E - B, e, order)


def test_parse_matrix():
    M = om.parse_matrix("matrix 2 3\n1 0 -1\n0 1 1\n")
    assert M.tolist() == [[1, 0, -1], [0, 1, 1]]
    assert om.parse_matrix(om.format_matrix(M)) == M


@pytest.mark.parametrize("text, line", [
    ("matrix 2 2\n1 0\n", 2),
    ("matrix 1 2\n1 a\n", 2),
    ("matrix 1 2\n1 0 1\n", 2),
    ("mat 1 1\n1\n", 1),
])
def test_parse_matrix_errors(text, line):
    with pytest.raises(om.MatrixFormatError) as exc:
        om.parse_matrix(text)
    assert exc.value.line == line
