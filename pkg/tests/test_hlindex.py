import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from eccentra.characterize import theorem1_predicate
from eccentra.closedform import closed_form_spectrum
from eccentra.extension import iter_star_params, parse_star_params, star_extension
from eccentra.graph import complete
from eccentra.hlindex import (
    hl_agreement, hl_closed_form, hl_numeric, is_zero_median_subcase, median_indices,
)
from eccentra.spectral import anti_adjacency, eigenvalues, make_spectrum

S = parse_star_params


def numeric_hl(g):
    vals = np.sort(np.linalg.eigvalsh(np.array(anti_adjacency(g).rows, dtype=float)))[::-1]
    n = len(vals)
    h, l = math.floor((n + 1) / 2), math.ceil((n + 1) / 2)
    return max(abs(vals[h - 1]), abs(vals[l - 1]))


@given(st.integers(1, 40))
def test_median_indices(n):
    h, l = median_indices(n)
    assert (h, l) == (math.floor((n + 1) / 2), math.ceil((n + 1) / 2))


def test_numeric_examples():
    assert hl_numeric(eigenvalues(anti_adjacency(complete(4))), 4).R == pytest.approx(1)
    r = hl_numeric(eigenvalues(anti_adjacency(star_extension(S("S(1,-5)")))), 6)
    assert (r.H, r.L) == (3, 4) and r.R == pytest.approx(2)
    r = hl_numeric(eigenvalues(anti_adjacency(star_extension(S("S(2,-2)")))), 4)
    assert r.xi_H == pytest.approx((3 - math.sqrt(17)) / 2) and r.R == pytest.approx(1)


def test_numeric_uses_exact_annotations():
    spec = closed_form_spectrum(S("S(2,-2)"))
    r = hl_numeric(spec, 4)
    assert r.xi_L == -1.0


def test_size_mismatch():
    with pytest.raises(ValueError):
        hl_numeric(make_spectrum([1.0, -1.0]), 3)


@pytest.mark.parametrize("text,regime,value", [
    ("S(1,-5)", "1.3(iv)", 2.0),
    ("S(2,-2)", "1.3(iii)", 1.0),
    ("S(2,-8,2)", "1.3(iv)", 2.0),
    ("S(3,-1)", "1.3(p+q<=1)", 1.0),
])
def test_closed_form_examples(text, regime, value):
    sp = S(text)
    r = hl_closed_form(sp)
    assert r.regime == regime and r.predicted == value
    assert abs(numeric_hl(star_extension(sp)) - value) <= 1e-8
    assert hl_agreement(sp).agree


def test_pendant_pair_disagreement_is_recorded():
    r = hl_agreement(S("S(1,-2)"))
    assert r.regime == "1.3(ii)" and r.predicted == 0.0
    assert not r.agree
    assert r.R == pytest.approx(math.sqrt(3) - 1)
    assert r.spectrum is not None and r.notes


def test_outside_family_rejected():
    with pytest.raises(ValueError):
        hl_closed_form(S("S(5,-3)"))


GRID = [sp for sp in iter_star_params(5, 8, 10, n_max=20) if theorem1_predicate(sp)]


def test_grid_agreement_set_is_the_zero_median_subcase():
    disagreements = set()
    for sp in GRID:
        r = hl_agreement(sp)
        assert r.regime is not None
        assert (r.predicted is None) != (r.interval is None)  # exactly one kind of prediction
        if not r.agree:
            disagreements.add(sp)
        if sp.n >= 3:
            assert r.xi_L <= r.xi_H <= 1e-9
            assert r.R == pytest.approx(abs(r.xi_L), abs=1e-9)
    assert disagreements == {sp for sp in GRID if is_zero_median_subcase(sp)}
    assert disagreements  # the subcase is populated on this grid


@given(st.sampled_from(GRID))
def test_json_round_trip(sp):
    r = hl_agreement(sp)
    out = r.to_json()
    assert out["R"] >= 0 and out["regime"] == r.regime
