"""Vectorised exhaustive scan over labeled graphs on n <= 8 vertices.

A graph is an edge bitmask; slot order is the graph6 column order
(0,1), (0,2), (1,2), (0,3), ...  Every quantity the exhaustive checks need
is computed for a whole chunk of masks at once with int64 arithmetic:

* BFS distances and the anti-adjacency matrix,
* exact characteristic polynomials (Faddeev-LeVerrier, exact in int64 for
  these sizes),
* positive-eigenvalue counts by Descartes' rule, which is exact because
  every root of a symmetric matrix's characteristic polynomial is real,
* multiplicities of 0 and -2 from the lowest nonzero (shifted) coefficient,
* structural recognition (star extension parameters, complete multipartite
  part count) and a 4-vertex obstruction test.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

from .graph import Graph, canonical_key, complete, cycle, disjoint_union, path

MAX_N = 8
CHUNK = 1 << 15

FIELDS = (
    "mask", "pos_anti", "outside", "mult0", "mult2", "star", "t0", "p", "q",
    "mp_parts", "pos_adj", "diameter", "obstructed",
)


def edge_slots(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def mask_to_graph(n: int, mask: int) -> Graph:
    return Graph.from_edges(n, [e for k, e in enumerate(edge_slots(n)) if mask >> k & 1])


def graph_to_mask(g: Graph) -> int:
    return sum(1 << k for k, (i, j) in enumerate(edge_slots(g.n)) if g.has_edge(i, j))


def adjacency_batch(n: int, masks: np.ndarray) -> np.ndarray:
    adj = np.zeros((len(masks), n, n), dtype=bool)
    for k, (i, j) in enumerate(edge_slots(n)):
        bit = (masks >> k) & 1 == 1
        adj[:, i, j] = bit
        adj[:, j, i] = bit
    return adj


def distances_batch(adj: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(distance array with -1 for unreachable, connected flags)."""
    b, n, _ = adj.shape
    eye = np.eye(n, dtype=bool)
    reach = adj | eye
    dist = np.where(adj, 1, -1).astype(np.int64)
    dist[:, eye] = 0
    a = adj.astype(np.float32)
    for k in range(2, n):
        grown = (np.matmul(reach.astype(np.float32), a) > 0) | reach
        new = grown & ~reach
        if not new.any():
            break
        dist[new] = k
        reach = grown
    return dist, reach.all(axis=(1, 2))


def anti_adjacency_batch(dist: np.ndarray) -> np.ndarray:
    ecc = dist.max(axis=2)
    m = np.minimum(ecc[:, :, None], ecc[:, None, :])
    return np.where((dist == m) & (dist > 0), dist, 0)


def charpoly_batch(a: np.ndarray) -> np.ndarray:
    """Ascending coefficients of det(xI - A) for a stack of integer matrices."""
    b, n, _ = a.shape
    a = a.astype(np.int64)
    coeffs = np.zeros((b, n + 1), dtype=np.int64)
    coeffs[:, n] = 1
    mk = np.zeros_like(a)
    idx = np.arange(n)
    for k in range(1, n + 1):
        mk = np.matmul(a, mk)
        mk[:, idx, idx] += coeffs[:, n - k + 1][:, None]
        tr = np.einsum("bii->b", np.matmul(a, mk))
        coeffs[:, n - k] = -tr // k
    return coeffs


def descartes_batch(coeffs: np.ndarray) -> np.ndarray:
    signs = np.sign(coeffs)
    last = np.zeros(len(coeffs), dtype=np.int64)
    changes = np.zeros(len(coeffs), dtype=np.int64)
    for j in range(coeffs.shape[1] - 1, -1, -1):
        s = signs[:, j]
        changes += (s != 0) & (last != 0) & (s != last)
        last = np.where(s != 0, s, last)
    return changes


def lowest_nonzero(coeffs: np.ndarray) -> np.ndarray:
    return np.argmax(coeffs != 0, axis=1)


@lru_cache(maxsize=None)
def _shift_matrix(n: int, a: int) -> np.ndarray:
    """T with (c @ T)_j = coefficient of mu^j in p(mu + a)."""
    t = np.zeros((n + 1, n + 1), dtype=np.int64)
    for i in range(n + 1):
        for j in range(i + 1):
            t[i, j] = math.comb(i, j) * a ** (i - j)
    return t


def root_multiplicity_batch(coeffs: np.ndarray, root: int) -> np.ndarray:
    n = coeffs.shape[1] - 1
    shifted = coeffs if root == 0 else coeffs @ _shift_matrix(n, root)
    return lowest_nonzero(shifted)


def _pair_equal(rows: np.ndarray) -> np.ndarray:
    """eq[b, u, v] = rows[b, u, :] == rows[b, v, :] entrywise."""
    return (rows[:, :, None, :] == rows[:, None, :, :]).all(axis=3)


def _count_classes(sizes: np.ndarray, member: np.ndarray, smin: int, n: int) -> np.ndarray:
    """Number of classes among ``member`` vertices whose class size is in [smin, n]."""
    out = np.zeros(len(sizes), dtype=np.int64)
    for s in range(smin, n + 1):
        out += ((sizes == s) & member).sum(axis=1) // s
    return out


def star_structure_batch(adj: np.ndarray):
    """(is_star, t0, p, q) with the normal form used everywhere else."""
    b, n, _ = adj.shape
    deg = adj.sum(axis=2)
    universal = deg == n - 1
    nu = universal.sum(axis=1)
    rest = ~universal
    closed = adj | np.eye(n, dtype=bool)
    eq = _pair_equal(closed)
    both_rest = rest[:, :, None] & rest[:, None, :]
    bad = (adj & both_rest & ~eq).any(axis=(1, 2))
    full = nu == n
    is_star = full | ((nu >= 1) & ~bad)
    size = deg - nu[:, None] + 1
    p = ((size == 1) & rest).sum(axis=1)
    q = _count_classes(size, rest, 2, n)
    t0 = nu.copy()
    t0[full], p[full], q[full] = n - 1, 1, 0
    return is_star, t0, p, q


def multipartite_parts_batch(adj: np.ndarray) -> np.ndarray:
    """Number of parts when the graph is complete multipartite, else 0."""
    b, n, _ = adj.shape
    off = ~np.eye(n, dtype=bool)
    nonadj = ~adj & off
    eq = _pair_equal(adj)
    ok = ~(nonadj & ~eq).any(axis=(1, 2))
    size = n - adj.sum(axis=2)
    parts = _count_classes(size, np.ones_like(size, dtype=bool), 1, n)
    return np.where(ok, parts, 0)


@lru_cache(maxsize=1)
def _obstruction_table() -> np.ndarray:
    """table[pattern] for the 64 labeled graphs on 4 vertices (slot order)."""
    keys = {canonical_key(path(4)), canonical_key(cycle(4)),
            canonical_key(disjoint_union(path(3), complete(1)))}
    return np.array([canonical_key(mask_to_graph(4, m)) in keys for m in range(64)])


def obstruction_batch(adj: np.ndarray) -> np.ndarray:
    """True where some 4 vertices induce P4, C4 or P3 + K1."""
    b, n, _ = adj.shape
    table = _obstruction_table()
    hit = np.zeros(b, dtype=bool)
    for quad in itertools.combinations(range(n), 4):
        code = np.zeros(b, dtype=np.int64)
        for k, (i, j) in enumerate(edge_slots(4)):
            code |= adj[:, quad[i], quad[j]].astype(np.int64) << k
        hit |= table[code]
    return hit


def scan_masks(n: int, masks: np.ndarray) -> dict[str, np.ndarray]:
    """All per-graph quantities for the connected graphs among ``masks``."""
    adj = adjacency_batch(n, masks)
    dist, conn = distances_batch(adj)
    masks, adj, dist = masks[conn], adj[conn], dist[conn]
    anti = anti_adjacency_batch(dist)
    cp = charpoly_batch(anti)
    m0 = lowest_nonzero(cp)
    m2 = root_multiplicity_batch(cp, -2)
    star, t0, p, q = star_structure_batch(adj)
    return {
        "mask": masks.astype(np.int64),
        "pos_anti": descartes_batch(cp),
        "outside": n - m0 - m2,
        "mult0": m0,
        "mult2": m2,
        "star": star,
        "t0": t0, "p": p, "q": q,
        "mp_parts": multipartite_parts_batch(adj),
        "pos_adj": descartes_batch(charpoly_batch(adj.astype(np.int64))),
        "diameter": dist.max(axis=(1, 2)),
        "obstructed": obstruction_batch(adj) if n >= 4 else np.zeros(len(masks), dtype=bool),
    }


def shard_range(n: int, shard: tuple[int, int] | None = None) -> range:
    """Mask range of shard ``(index, count)``; contiguous blocks, i.e. a
    split by bitmask prefix."""
    total = 1 << (n * (n - 1) // 2)
    if shard is None:
        return range(total)
    index, count = shard
    if not (count >= 1 and 0 <= index < count):
        raise ValueError(f"bad shard {shard}")
    lo = total * index // count
    hi = total * (index + 1) // count
    return range(lo, hi)


def scan(n: int, shard: tuple[int, int] | None = None, chunk: int = CHUNK) -> dict[str, np.ndarray]:
    if not 2 <= n <= MAX_N:
        raise ValueError(f"n must be in [2, {MAX_N}]")
    r = shard_range(n, shard)
    parts = []
    for lo in range(r.start, r.stop, chunk):
        masks = np.arange(lo, min(lo + chunk, r.stop), dtype=np.int64)
        parts.append(scan_masks(n, masks))
    if not parts:
        return {k: np.zeros(0, dtype=np.int64) for k in FIELDS}
    return {k: np.concatenate([pt[k] for pt in parts]) for k in FIELDS}
