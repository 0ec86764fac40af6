"""Integer kernels behind the brute-force, algebra and correlator modules.

Each kernel has a numba implementation (``_nb_*``) and a numpy one
(``_np_*``); the public name dispatches on ``_accel.HAVE_NUMBA``. Both paths
return identical integers, and the test-suite runs them against each other.
Permutations are 0-based int64 rows; tuples of S_m elements are addressed
by their lexicographic ranks.
"""
from __future__ import annotations

import numpy as np

from ._accel import HAVE_NUMBA, njit, prange

# --- cycle counts ------------------------------------------------------------


@njit(parallel=True)
def _nb_cycle_counts(perms):
    B, m = perms.shape
    out = np.zeros(B, dtype=np.int64)
    for r in prange(B):
        seen = np.zeros(m, dtype=np.bool_)
        c = 0
        for s in range(m):
            if seen[s]:
                continue
            c += 1
            j = s
            while not seen[j]:
                seen[j] = True
                j = perms[r, j]
        out[r] = c
    return out


def _np_cycle_counts(perms):
    B, m = perms.shape
    rows = np.arange(B)[:, None]
    cur = np.broadcast_to(np.arange(m), (B, m)).copy()
    low = cur.copy()
    for _ in range(m - 1):
        cur = perms[rows, cur]
        np.minimum(low, cur, out=low)
    # a point opens a new cycle iff it is the smallest point of its orbit
    return (low == np.arange(m)).sum(axis=1).astype(np.int64)


def cycle_counts(perms) -> np.ndarray:
    perms = np.ascontiguousarray(perms, dtype=np.int64)
    if perms.ndim == 1:
        perms = perms[None, :]
    return (_nb_cycle_counts if HAVE_NUMBA else _np_cycle_counts)(perms)


# --- orbits of a permutation action on {0..V-1} ----------------------------------


@njit
def _nb_orbit_labels(maps):
    G, V = maps.shape
    parent = np.arange(V)
    for g in range(G):
        for x in range(V):
            a = x
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            b = maps[g, x]
            while parent[b] != b:
                parent[b] = parent[parent[b]]
                b = parent[b]
            if a < b:
                parent[b] = a
            elif b < a:
                parent[a] = b
    for x in range(V):
        a = x
        while parent[a] != a:
            a = parent[a]
        parent[x] = a
    return parent


def _np_orbit_labels(maps):
    G, V = maps.shape
    labels = np.arange(V)
    while True:
        old = labels.copy()
        for g in range(G):
            np.minimum(labels, labels[maps[g]], out=labels)
            np.minimum.at(labels, maps[g], labels.copy())
        labels = labels[labels]
        if np.array_equal(labels, old):
            return labels


def orbit_labels(maps) -> np.ndarray:
    """Smallest member of each point's orbit under the maps (generators)."""
    maps = np.ascontiguousarray(maps, dtype=np.int64)
    return (_nb_orbit_labels if HAVE_NUMBA else _np_orbit_labels)(maps)


# --- Burnside delta sum ------------------------------------------------------------


@njit
def _nb_burnside(h_ranks, target, d):
    # prod_i delta(h_i == target[h_d, s_i]) factorizes slot by slot, so the
    # sum is sum_{h_d} (# of (h, s) pairs hitting)^(d-1)
    nh, ng = target.shape
    M = 0
    for x in range(nh):
        if h_ranks[x] + 1 > M:
            M = h_ranks[x] + 1
    for x in range(nh):
        for s in range(ng):
            if target[x, s] + 1 > M:
                M = target[x, s] + 1
    member = np.zeros(M, dtype=np.bool_)
    for x in range(nh):
        member[h_ranks[x]] = True
    total = 0
    for hd in range(nh):
        c = 0
        for s in range(ng):
            if member[target[hd, s]]:
                c += 1
        total += c ** (d - 1)
    return total


def _np_burnside(h_ranks, target, d):
    hit = np.isin(target, h_ranks).sum(axis=1)
    return int(sum(int(c) ** (d - 1) for c in hit))


def burnside_sum(h_ranks, target, d: int) -> int:
    h_ranks = np.ascontiguousarray(h_ranks, dtype=np.int64)
    target = np.ascontiguousarray(target, dtype=np.int64)
    if HAVE_NUMBA:
        return int(_nb_burnside(h_ranks, target, d))
    return _np_burnside(h_ranks, target, d)


# --- sparse convolution in C[S_m]^{(x) d} ---------------------------------------------


@njit
def _nb_convolve(a_keys, a_vals, b_keys, b_vals, mul, M, out):
    na, d = a_keys.shape
    nb = b_keys.shape[0]
    for i in range(na):
        va = a_vals[i]
        for j in range(nb):
            idx = 0
            for s in range(d):
                idx = idx * M + mul[a_keys[i, s], b_keys[j, s]]
            out[idx] += va * b_vals[j]
    return out


def _np_convolve(a_keys, a_vals, b_keys, b_vals, mul, M, out):
    d = a_keys.shape[1]
    exact_float = int(np.abs(a_vals).sum()) * int(np.abs(b_vals).max(initial=0)) < 2**53
    chunk = max(1, 2**21 // max(1, b_keys.shape[0]))
    for lo in range(0, a_keys.shape[0], chunk):
        a = a_keys[lo:lo + chunk]
        idx = np.zeros((a.shape[0], b_keys.shape[0]), dtype=np.int64)
        for s in range(d):
            idx = idx * M + mul[a[:, s][:, None], b_keys[:, s][None, :]]
        w = a_vals[lo:lo + chunk, None] * b_vals[None, :]
        if exact_float:
            # every partial sum is an integer below 2^53, so float64 is exact
            out += np.rint(np.bincount(idx.ravel(), w.ravel().astype(np.float64), out.size)).astype(np.int64)
        else:
            np.add.at(out, idx.ravel(), w.ravel())
    return out


def convolve(a_keys, a_vals, b_keys, b_vals, mul, M: int, d: int) -> np.ndarray:
    out = np.zeros(M**d, dtype=np.int64)
    args = (np.ascontiguousarray(a_keys, dtype=np.int64), np.ascontiguousarray(a_vals, dtype=np.int64),
            np.ascontiguousarray(b_keys, dtype=np.int64), np.ascontiguousarray(b_vals, dtype=np.int64),
            np.ascontiguousarray(mul, dtype=np.int64), M, out)
    return (_nb_convolve if HAVE_NUMBA else _np_convolve)(*args)


# --- counting index assignments satisfying equalities ---------------------------


@njit(parallel=True)
def _nb_count_assignments(V, pairs, N):
    total = 0
    count = N**V
    place = np.empty(V, dtype=np.int64)
    place[0] = 1
    for v in range(1, V):
        place[v] = place[v - 1] * N
    for flat in prange(count):
        vals = np.empty(V, dtype=np.int64)
        for v in range(V):
            vals[v] = (flat // place[v]) % N
        ok = 1
        for k in range(pairs.shape[0]):
            if vals[pairs[k, 0]] != vals[pairs[k, 1]]:
                ok = 0
                break
        total += ok
    return total


def _np_count_assignments(V, pairs, N):
    grid = np.indices((N,) * V).reshape(V, -1)
    ok = np.ones(grid.shape[1], dtype=bool)
    for a, b in pairs:
        ok &= grid[a] == grid[b]
    return int(ok.sum())


def count_assignments(V: int, pairs, N: int) -> int:
    """Number of maps {0..V-1} -> {1..N} equal on every listed pair."""
    pairs = np.ascontiguousarray(np.asarray(pairs, dtype=np.int64).reshape(-1, 2))
    if HAVE_NUMBA:
        return int(_nb_count_assignments(V, pairs, N))
    return _np_count_assignments(V, pairs, N)
