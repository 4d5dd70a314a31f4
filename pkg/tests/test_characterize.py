import itertools
import math

import networkx as nx
import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from eccentra.characterize import (
    Undecidable, exception_count, forbidden_report, least_minus2_predicate, one_positive_spectral,
    second_eigenvalue, smith_check, star_report, table1_fixtures, theorem1_check, theorem1_predicate,
    theorem2_check,
)
from eccentra.extension import iter_star_params, parse_star_params, recognize_star_extension, star_extension
from eccentra.graph import complete, complete_multipartite, cycle, join, path
from eccentra.poly import ExactPoly
from eccentra.spectral import adjacency, anti_adjacency, char_poly_exact
from conftest import connected_graphs, to_nx

S = parse_star_params


def numpy_positive(m, tol=1e-9):
    return int((np.linalg.eigvalsh(np.array(m.rows, dtype=float)) > tol).sum())


def brute_star_condition(g):
    """Diameter <= 2 star extension obeying the centre/part table, written independently."""
    sp = recognize_star_extension(g)
    if sp is None:
        return False
    if sp.is_complete:
        return True
    s = sp.p + sp.q
    limit = {1: math.inf, 2: math.inf, 3: 4, 4: 3}.get(sp.t0, 2)
    return 1 <= s <= limit


@given(connected_graphs(n_max=8))
def test_one_positive_matches_numpy(g):
    m = anti_adjacency(g)
    cp = char_poly_exact(m)
    if cp(0) != 0:  # away from the exact-zero boundary numpy is trustworthy
        assert one_positive_spectral(g) == (numpy_positive(m) == 1)


def test_one_positive_examples():
    assert one_positive_spectral(complete(5))
    assert not one_positive_spectral(path(4))
    assert not one_positive_spectral(star_extension(S("S(4,-1,2^3)")))


def test_boundary_case_with_exact_zero_second_eigenvalue():
    # centre 3 with four leaves: xi_2 is exactly 0, so only exact counting is reliable
    sp = S("S(3,-4)")
    cp = char_poly_exact(anti_adjacency(star_extension(sp)))
    assert cp(0) == 0
    assert one_positive_spectral(star_extension(sp)) and theorem1_predicate(sp)


@pytest.mark.parametrize("text,expected", [
    ("S(3,-1,2^3)", True), ("S(5,-1,2^2)", False), ("S(4,-1,2^3)", False),
    ("S(1,-1)", True), ("S(2,-9,3^4)", True), ("S(5,-2)", True),
])
def test_predicate_examples(text, expected):
    assert theorem1_predicate(S(text)) == expected


def test_atlas_agreement(nx_atlas_connected):
    for g in nx_atlas_connected:
        r1 = theorem1_check(g)
        assert r1.agree, r1
        assert r1.structural_verdict == brute_star_condition(g)
        r2 = theorem2_check(g)
        assert r2.agree, r2
        assert r2.spectral["outside"] != 1
        rs = smith_check(g)
        assert rs.agree and rs.spectral_verdict == (numpy_positive(adjacency(g)) == 1)


def test_members_have_small_diameter_and_no_small_obstructions(nx_atlas_connected):
    for g in nx_atlas_connected:
        if one_positive_spectral(g):
            h = to_nx(g)
            assert nx.diameter(h) <= 2
            for a, b, c, d in itertools.combinations(range(g.n), 4):
                sub = h.subgraph([a, b, c, d])
                assert not any(nx.is_isomorphic(sub, pat) for pat in (
                    nx.path_graph(4), nx.cycle_graph(4), nx.disjoint_union(nx.path_graph(3), nx.empty_graph(1))))


def test_one_positive_reports():
    diamond = star_extension(S("S(2,-2)"))
    r = theorem1_check(diamond)
    assert r.spectral_verdict and r.structural_verdict and r.agree
    r = theorem1_check(cycle(5))
    assert not r.spectral_verdict and not r.structural_verdict and r.structural is None
    r = theorem1_check(star_extension(S("S(5,-3)")))
    assert not r.spectral_verdict and not r.structural_verdict and "F1" in r.witnesses
    r = theorem1_check(path(4))
    assert "diameter 3" in r.witnesses and "P4" in r.witnesses


def test_forbidden_report_examples():
    assert "F1" in forbidden_report(S("S(5,-3)"))
    assert "F2" in forbidden_report(S("S(6,-2,2)"))
    assert forbidden_report(S("S(2,-7,3^4)")) == []


def test_star_report_is_exact_beyond_matrix_range():
    big = S("S(2,-30,3^4)")
    assert big.n > 16
    r = star_report(big)
    assert r.spectral_verdict and r.agree
    r = star_report(S("S(6,-25)"))
    assert not r.spectral_verdict and r.agree


@pytest.mark.parametrize("sp", [sp for sp in iter_star_params(6, 5, 8, max_part=4, q_max=5, n_max=16)],
                         ids=str)
def test_predicate_forbidden_and_spectrum_agree(sp):
    pred = theorem1_predicate(sp)
    assert pred == (forbidden_report(sp) == [])
    assert pred == one_positive_spectral(star_extension(sp))


def test_fixture_second_eigenvalues_against_sympy():
    lam = sympy.Symbol("x")
    for fx in table1_fixtures():
        m = sympy.Matrix(anti_adjacency(star_extension(fx.params)).rows)
        roots = sorted(sympy.real_roots(sympy.Poly(m.charpoly(lam).as_expr(), lam)), reverse=True)
        xi2 = float(roots[1].evalf(30))
        assert xi2 > 0
        assert abs(second_eigenvalue(fx.params) - xi2) < 1e-10
        if fx.closed_value is not None:
            assert abs(fx.closed_value - xi2) < 1e-12
        else:
            assert fx.printed_lower <= xi2 < fx.printed_lower + 0.001


def test_two_exception_examples():
    r = theorem2_check(complete_multipartite([2, 3]))
    assert r.spectral_verdict and r.structural == "K_{3,2}" and r.spectral["outside"] == 2
    r = theorem2_check(complete_multipartite([1, 4]))
    assert r.spectral_verdict and r.structural_verdict
    r = theorem2_check(star_extension(S("S(2,-2)")))
    assert not r.spectral_verdict and not r.structural_verdict


def test_exception_count():
    cp = ExactPoly.from_roots([4, 2, -2, -2, -2, 0])
    assert exception_count(cp) == (2, 1, 3)


def test_least_minus2_examples():
    r = least_minus2_predicate(complete_multipartite([2, 2]))
    assert r.spectral and r.form == "i"
    r = least_minus2_predicate(join(complete(1), complete_multipartite([2, 2])))
    assert r.spectral and r.form == "ii" and r.n0 == 1 and r.parts == (2, 2)
    r = least_minus2_predicate(path(4))
    assert not r.spectral and not r.structural


def test_least_minus2_gap_is_exactly_clique_joined_to_coclique(nx_atlas_connected):
    """The two stated forms miss K_n0 joined to m >= 2 isolated vertices; on
    every connected graph up to seven vertices that is the only gap."""
    gaps = []
    for g in nx_atlas_connected:
        r = least_minus2_predicate(g)
        lam_min = min(np.linalg.eigvalsh(np.array(anti_adjacency(g).rows, dtype=float)))
        assert r.spectral == (abs(lam_min + 2) < 1e-9)
        if not r.agree:
            gaps.append(g)
            assert r.spectral and not r.structural and r.single_coclique_join
    params = {str(recognize_star_extension(g)) for g in gaps}
    assert len(gaps) == 15
    assert params == {f"S({t0},-{p})" for t0 in range(1, 6) for p in range(2, 8) if t0 + p <= 7}


def test_disconnected_inputs_rejected():
    from eccentra.graph import empty
    for fn in (theorem1_check, theorem2_check, smith_check, least_minus2_predicate):
        with pytest.raises(ValueError):
            fn(empty(3))
