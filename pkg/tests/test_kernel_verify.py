import math
import random

import networkx as nx
import numpy as np
import pytest

from eccentra import kernel
from eccentra.cli.graph6 import to_graph6
from eccentra.extension import recognize_star_extension
from eccentra.graph import is_complete_multipartite
from eccentra.poly import positive_root_count
from eccentra.spectral import adjacency, anti_adjacency, char_poly_exact
from eccentra.characterize import exception_count
from eccentra.verify import (
    enumerate_connected, exhaustive_table, path_nullity_formula, resolve_workers, run_mutant,
    verify_interlacing, verify_nullity_paths, verify_table1, verify_theorem1, verify_theorem2,
)
from conftest import to_nx


def connected_labeled_counts(n_max):
    """Connected labeled graphs by the exponential-formula recurrence."""
    total = [2 ** (k * (k - 1) // 2) for k in range(n_max + 1)]
    conn = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        conn[n] = total[n] - sum(math.comb(n - 1, k - 1) * conn[k] * total[n - k] for k in range(1, n))
    return conn


def test_slot_order_is_graph6_order():
    rng = random.Random(1)
    for n in range(2, 9):
        for _ in range(20):
            mask = rng.getrandbits(n * (n - 1) // 2)
            g = kernel.mask_to_graph(n, mask)
            assert kernel.graph_to_mask(g) == mask
            assert to_graph6(g) == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def per_graph(g):
    m = anti_adjacency(g)
    cp = char_poly_exact(m)
    outside, m0, m2 = exception_count(cp)
    sp = recognize_star_extension(g)
    h = to_nx(g)
    return {
        "pos_anti": positive_root_count(cp), "outside": outside, "mult0": m0, "mult2": m2,
        "star": sp is not None,
        "pos_adj": positive_root_count(char_poly_exact(adjacency(g))),
        "diameter": nx.diameter(h),
        "mp": is_complete_multipartite(g),
        "params": (sp.t0, sp.p, sp.q) if sp else None,
    }


@pytest.mark.parametrize("n,sample", [(3, None), (4, None), (5, None), (6, 400), (7, 200)])
def test_batch_kernel_matches_per_graph_path(n, sample):
    total = 1 << (n * (n - 1) // 2)
    masks = np.arange(total, dtype=np.int64)
    if sample:
        masks = np.array(sorted(random.Random(n).sample(range(total), 4 * sample)), dtype=np.int64)
    tab = kernel.scan_masks(n, masks)
    for i, mask in enumerate(tab["mask"]):
        g = kernel.mask_to_graph(n, int(mask))
        ref = per_graph(g)
        for key in ("pos_anti", "outside", "mult0", "mult2", "pos_adj", "diameter"):
            assert int(tab[key][i]) == ref[key], (key, mask)
        assert bool(tab["star"][i]) == ref["star"]
        assert (tab["mp_parts"][i] > 0) == ref["mp"]
        if ref["params"]:
            assert (int(tab["t0"][i]), int(tab["p"][i]), int(tab["q"][i])) == ref["params"]


def test_connected_counts():
    conn = connected_labeled_counts(7)
    for n in range(2, 8):
        assert len(exhaustive_table(n)["mask"]) == conn[n]


def test_dedup_enumeration_matches_atlas():
    atlas = {}
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() >= 2 and nx.is_connected(h):
            atlas[h.number_of_nodes()] = atlas.get(h.number_of_nodes(), 0) + 1
    for n in range(2, 6):
        assert sum(1 for _ in enumerate_connected(n, dedup=True)) == atlas[n]


def test_shards_partition_the_mask_space():
    n, k = 6, 7
    ranges = [kernel.shard_range(n, (i, k)) for i in range(k)]
    assert ranges[0].start == 0 and ranges[-1].stop == 1 << 15
    assert all(a.stop == b.start for a, b in zip(ranges, ranges[1:]))
    sharded = sorted(g.rows for i in range(k) for g in enumerate_connected(5, shard=(i, k)))
    assert sharded == sorted(g.rows for g in enumerate_connected(5))
    with pytest.raises(ValueError):
        kernel.shard_range(4, (3, 3))


def test_order_bounds():
    with pytest.raises(ValueError):
        kernel.scan(9)
    with pytest.raises(ValueError):
        list(enumerate_connected(1))


def test_workers_from_environment(monkeypatch):
    monkeypatch.setenv("ECCENTRA_WORKERS", "3")
    assert resolve_workers(None) == 3
    assert resolve_workers(2) == 2
    with pytest.raises(ValueError):
        resolve_workers(0)


def test_parallel_scan_matches_serial():
    # bypass the cache so both paths really run
    serial = exhaustive_table.__wrapped__(5, 1)
    parallel = exhaustive_table.__wrapped__(5, 2)
    for key in kernel.FIELDS:
        assert np.array_equal(serial[key], parallel[key])


def test_small_exhaustive_reports():
    r1 = verify_theorem1(5)
    assert r1.passed and r1.totals["connected"] == sum(connected_labeled_counts(5)[2:])
    r2 = verify_theorem2(5)
    assert r2.passed and not r2.counterexamples


def test_mutants_are_caught():
    rep = run_mutant("theorem2-tripartite", n_max=4)
    assert not rep.passed
    assert any(cx["graph6"] == "Bw" for cx in rep.counterexamples)  # K3
    assert not run_mutant("smith-bipartite-only", n_max=4).passed
    rep = run_mutant("theorem1-v-bound-3")
    assert not rep.passed


def test_nullity_formula_and_report():
    assert [path_nullity_formula(m) for m in (4, 6, 7)] == [0, 2, 3]
    assert verify_nullity_paths(3, 6).passed


def test_interlacing_report_is_seeded():
    a = verify_interlacing(samples=30, seed=5)
    b = verify_interlacing(samples=30, seed=5)
    assert a.passed and a.dumps() == b.dumps()


def test_forbidden_table_report():
    rep = verify_table1()
    assert rep.passed and len(rep.stats["rows"]) == 12
