import math

import networkx as nx
import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from eccentra.closedform import (
    closed_form_spectrum, core_polynomial, is_t0_1_q_0_subcase, join_char_poly, join_core,
    star_char_poly, table_layout,
)
from eccentra.characterize import theorem1_predicate
from eccentra.extension import iter_star_params, parse_star_params, recognize_star_extension, star_extension
from eccentra.graph import complete, complete_multipartite, join
from eccentra.poly import ExactPoly
from eccentra.spectral import anti_adjacency, char_poly_exact, eigenvalues
from conftest import from_nx, to_nx

S = parse_star_params


def sympy_charpoly(g):
    return [int(c) for c in reversed(sympy.Matrix(anti_adjacency(g).rows).charpoly().all_coeffs())]


@pytest.mark.parametrize("sp", list(iter_star_params(3, 3, 5, n_max=9)), ids=str)
def test_star_poly_matches_sympy(sp):
    assert list(star_char_poly(sp).expand().coeffs) == sympy_charpoly(star_extension(sp))


@pytest.mark.parametrize("n0,parts", [(1, [2, 2]), (2, [2, 2]), (1, [3, 2]), (3, [2, 2]), (2, [3, 2, 2]),
                                      (1, [2, 2, 2, 2]), (3, [4, 3])])
def test_join_poly_matches_sympy(n0, parts):
    g = join(complete(n0), complete_multipartite(parts))
    assert list(join_char_poly(n0, parts).expand().coeffs) == sympy_charpoly(g)


def test_path_on_three_vertices_core():
    fp = star_char_poly(S("S(1,-2)"))
    assert fp.core == ExactPoly([-2, -2, 1])
    assert fp.factors == ((2, 1),)


def test_diamond_spectrum():
    fp = star_char_poly(S("S(2,-2)"))
    roots = sorted(float(r) for r in sympy.real_roots(sympy.Poly(list(reversed(fp.core.coeffs)), sympy.Symbol("x"))))
    assert np.allclose(roots, [(3 - math.sqrt(17)) / 2, (3 + math.sqrt(17)) / 2])
    assert dict(fp.factors) == {1: 1, 2: 1}


def test_parts_only_core_is_positive_at_minus_one():
    for t in range(2, 8):
        for k in range(2, 5):
            sp = S(f"S(1,{t}^{k})")
            assert core_polynomial(sp)(-1) > 0, sp


def test_join_with_two_cocliques_is_not_a_star_extension():
    # K1 v K_{2,2} is the wheel on five vertices; S(1,2,2) is the butterfly
    wheel = join(complete(1), complete_multipartite([2, 2]))
    butterfly = star_extension(S("S(1,2,2)"))
    assert nx.is_isomorphic(to_nx(wheel), nx.wheel_graph(5))
    assert not nx.is_isomorphic(to_nx(wheel), to_nx(butterfly))
    assert recognize_star_extension(wheel) is None


@given(st.integers(1, 6), st.integers(2, 9), st.integers(2, 9))
def test_two_part_join_value_at_minus_two(n0, a, b):
    n1, n2 = max(a, b), min(a, b)
    assert join_core(n0, [n1, n2])(-2) == -4 * n1 * n2


def test_join_rejects_bad_parts():
    for args in [(0, [2, 2]), (1, [2]), (1, [2, 1]), (1, [2, 3])]:
        with pytest.raises(ValueError):
            join_char_poly(*args)


def test_three_leaf_star_spectrum():
    spec = closed_form_spectrum(S("S(1,-3)"))
    assert np.allclose(spec.extra["exact_values"], [2 + math.sqrt(7), 2 - math.sqrt(7), -2, -2])


def test_diamond_tabled_layout():
    spec = closed_form_spectrum(S("S(2,-2)"))
    assert spec.extra["discrepancies"] == []
    assert spec.annotations.count("=0") == 0
    assert spec.annotations[1] == "in(-1,0)"
    assert np.allclose(spec.values, eigenvalues(anti_adjacency(star_extension(S("S(2,-2)")))).values)


def test_single_centre_pendant_stars_are_flagged():
    # the table lists an eigenvalue 0 that S(1,-p) does not have
    spec = closed_form_spectrum(S("S(1,-2)"))
    assert spec.extra["discrepancies"]
    numeric = eigenvalues(anti_adjacency(star_extension(S("S(1,-2)")))).values
    assert np.allclose(numeric, [1 + math.sqrt(3), 1 - math.sqrt(3), -2])
    assert 0.0 in spec.values


def test_outside_family_rejected():
    with pytest.raises(ValueError):
        closed_form_spectrum(S("S(5,-3)"))


GRID = [sp for sp in iter_star_params(5, 4, 8, n_max=14) if theorem1_predicate(sp)]


def test_tabled_spectrum_matches_numeric_except_flagged_subcase():
    flagged = set()
    for sp in GRID:
        spec = closed_form_spectrum(sp)
        numeric = eigenvalues(anti_adjacency(star_extension(sp))).values
        assert len(spec.values) == sp.n
        assert np.allclose(spec.extra["exact_values"], numeric, atol=1e-8)
        if not np.allclose(spec.values, numeric, atol=1e-8):
            flagged.add(sp)
            assert spec.extra["discrepancies"]
    assert flagged == {sp for sp in GRID if is_t0_1_q_0_subcase(sp)}


@given(st.sampled_from(GRID))
def test_layout_multiplicities_sum_to_n(sp):
    assert sum(b.mult for b in table_layout(sp)) == sp.n
    fp = star_char_poly(sp)
    assert fp.degree == sp.n
    assert fp.expand() == char_poly_exact(anti_adjacency(star_extension(sp)))
