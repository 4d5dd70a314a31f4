import math

import networkx as nx
import numpy as np
import pytest
import sympy
from hypothesis import assume, given, strategies as st

from eccentra.extension import parse_star_params, star_extension
from eccentra.graph import complete, cycle, disjoint_union, path
from eccentra.spectral import (
    SymMatrix, adjacency, anti_adjacency, char_poly_exact, eigenvalues, exact_nullity, exact_rank,
    group_values, interlaces, jacobi_eigenvalues, submatrix_conditions,
)
from conftest import connected_graphs, to_nx


def oracle_anti_adjacency(g):
    h = to_nx(g)
    d = dict(nx.all_pairs_shortest_path_length(h))
    ecc = nx.eccentricity(h)
    return [[d[u][v] if u != v and d[u][v] == min(ecc[u], ecc[v]) else 0 for v in range(g.n)]
            for u in range(g.n)]


@given(connected_graphs())
def test_anti_adjacency_matches_oracle(g):
    m = anti_adjacency(g)
    assert [list(r) for r in m.rows] == oracle_anti_adjacency(g)
    assert all(m[i, i] == 0 for i in range(g.n))


def test_disconnected_graph_rejected():
    with pytest.raises(ValueError):
        anti_adjacency(disjoint_union(path(2), path(1)))


@given(connected_graphs(n_max=7))
def test_char_poly_matches_sympy(g):
    m = anti_adjacency(g)
    cp = char_poly_exact(m)
    expected = sympy.Matrix(m.rows).charpoly().all_coeffs()
    assert list(reversed(cp.coeffs)) == [int(c) for c in expected]


@given(connected_graphs())
def test_spectrum_matches_numpy_and_jacobi(g):
    m = anti_adjacency(g)
    ref = np.sort(np.linalg.eigvalsh(np.array(m.rows, dtype=float)))[::-1]
    lap = eigenvalues(m)
    jac = eigenvalues(m, solver="jacobi")
    assert np.allclose(lap.values, ref, atol=1e-9)
    assert np.allclose(jac.values, ref, atol=1e-9)
    assert abs(sum(lap.values)) <= 1e-9  # zero diagonal
    assert sum(mult for _, mult in lap.groups) == g.n


def test_unknown_solver():
    with pytest.raises(ValueError):
        eigenvalues(adjacency(path(3)), solver="qr")


def test_jacobi_on_diagonal_matrix():
    assert list(jacobi_eigenvalues(np.diag([3.0, -1.0, 2.0]))) == [3.0, 2.0, -1.0]


def test_path_on_three_vertices():
    # A(P3) = [[0,1,2],[1,0,1],[2,1,0]]: spectrum 1 + sqrt(3), 1 - sqrt(3), -2
    spec = eigenvalues(anti_adjacency(path(3)))
    assert np.allclose(spec.values, [1 + math.sqrt(3), 1 - math.sqrt(3), -2])


def test_complete_graph_spectrum():
    spec = eigenvalues(anti_adjacency(complete(4)))
    assert np.allclose([v for v, _ in spec.groups], [3, -1])
    assert [m for _, m in spec.groups] == [1, 3]


def test_star_with_five_leaves_spectrum():
    spec = eigenvalues(anti_adjacency(star_extension(parse_star_params("S(1,-5)"))))
    assert np.allclose(spec.values, [4 + math.sqrt(21), 4 - math.sqrt(21), -2, -2, -2, -2])


def test_cycle_anti_adjacency_is_diametral():
    # every vertex of C5 has eccentricity 2: only distance-2 pairs survive
    m = anti_adjacency(cycle(5))
    assert sum(x == 2 for r in m.rows for x in r) == 10 and sum(x == 1 for r in m.rows for x in r) == 0


@given(st.lists(st.lists(st.integers(-3, 3), min_size=6, max_size=6), min_size=6, max_size=6),
       st.integers(1, 6))
def test_exact_rank_matches_sympy(rows, k):
    a = np.array(rows)[:k, :k]
    sym = (a + a.T).tolist()
    assert exact_rank(SymMatrix.from_array(sym)) == sympy.Matrix(sym).rank()


@given(connected_graphs(n_max=7))
def test_nullity_is_zero_root_multiplicity(g):
    m = anti_adjacency(g)
    assert exact_nullity(m) == char_poly_exact(m).multiplicity(0)


def test_grouping_chains_close_values():
    groups = group_values([2.0, 1.0 + 1e-10, 1.0, -1.0])
    assert [m for _, m in groups] == [1, 2, 1]
    assert abs(groups[1][0] - 1.0) < 1e-9


@given(connected_graphs(n_min=3, n_max=8), st.data())
def test_interlacing_under_preserving_subsets(g, data):
    """Whenever an induced subgraph keeps all distances and eccentricities,
    its spectrum interlaces the full one."""
    size = data.draw(st.integers(2, g.n - 1))
    vs = sorted(data.draw(st.lists(st.integers(0, g.n - 1), min_size=size, max_size=size, unique=True)))
    h = to_nx(g).subgraph(vs)
    assume(nx.is_connected(h))
    if not submatrix_conditions(g, vs):
        return
    big = eigenvalues(anti_adjacency(g)).values
    small = np.sort(np.linalg.eigvalsh(np.array(anti_adjacency(g).principal(vs).rows, dtype=float)))[::-1]
    assert interlaces(big, list(small), 1e-8)


def test_interlacing_can_fail_without_the_hypothesis():
    # P4 minus an end vertex changes eccentricities; the conditions reject it
    assert not submatrix_conditions(path(4), [0, 1, 2])


def test_small_matrices_by_hand():
    assert anti_adjacency(complete(4)) == adjacency(complete(4))
    # path 0-1-2: the leaves 0 and 2 are at distance 2, both ends have eccentricity 2
    assert anti_adjacency(path(3)).rows == ((0, 1, 2), (1, 0, 1), (2, 1, 0))
    p4 = anti_adjacency(path(4))
    nonzero = {(i, j): p4[i, j] for i in range(4) for j in range(i + 1, 4) if p4[i, j]}
    assert nonzero == {(0, 2): 2, (1, 3): 2, (0, 3): 3}
    assert adjacency(path(3)).rows == ((0, 1, 0), (1, 0, 1), (0, 1, 0))


@pytest.mark.parametrize("g,expected", [(path(4), [4, 1, -1, -4]), (cycle(4), [2, 2, -2, -2])],
                         ids=["P4", "C4"])
def test_block_structured_spectra(g, expected):
    assert np.allclose(eigenvalues(anti_adjacency(g)).values, expected)


def test_char_polys_by_hand():
    from eccentra.poly import ExactPoly, positive_root_count
    p3 = char_poly_exact(anti_adjacency(path(3)))
    assert p3 == ExactPoly([-4, -6, 0, 1])
    assert p3 == ExactPoly.linear(2) * ExactPoly([-2, -2, 1])
    assert char_poly_exact(anti_adjacency(complete(2))) == ExactPoly([-1, 0, 1])
    c4 = char_poly_exact(anti_adjacency(cycle(4)))
    assert c4 == ExactPoly([-4, 0, 1]) ** 2
    assert positive_root_count(p3) == 1 and positive_root_count(c4) == 2


def test_submatrix_condition_examples():
    from eccentra.graph import star
    assert submatrix_conditions(star(3), [0, 1, 2])
    assert not submatrix_conditions(path(4), [1, 2])
    assert not submatrix_conditions(cycle(4), [0, 1, 2])


def test_zero_trace_and_sturm_counts_on_atlas(nx_atlas_connected):
    from eccentra.poly import ExactPoly, count_roots
    from fractions import Fraction
    tau = Fraction(1, 10**8)
    for g in nx_atlas_connected:
        m = anti_adjacency(g)
        vals = np.array(eigenvalues(m).values)
        assert abs(vals.sum()) <= 1e-8
        cp = char_poly_exact(m)
        assert count_roots(cp, tau, math.inf, multiplicity=True) == int((vals > 1e-8).sum())
        assert count_roots(cp, -tau, tau, multiplicity=True) == int((abs(vals) <= 1e-8).sum())
