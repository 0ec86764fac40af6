"""Ground truth for the double-coset count at desk scale.

Tuples (sigma_1..sigma_d) of S_2n are identified under
(gamma_1 sigma_1 gamma, ..., gamma_d sigma_d gamma) with gamma_i in S_n[S_2]
and gamma in S_2n. ``orbit_count`` enumerates the orbits outright;
``burnside_count`` evaluates the gauge-fixed Burnside delta sum.

Orbit enumeration is capped by ``TENSOR_ORBIT_MAX_BRUTE`` (number of tuples,
default 2,000,000). The Burnside sum factorizes slot by slot, so it only
needs the multiplication table of S_2n and runs for 2n <= 6.
"""
from __future__ import annotations

import math
import os
from typing import Sequence

import numpy as np

from . import kernels
from .errors import BudgetExceeded
from .perm import (Permutation, base_pairing, inverse_ranks, mul_table, perm_table,
                   rank, rank_of, wreath_ranks)


def brute_budget() -> int:
    return int(os.environ.get("TENSOR_ORBIT_MAX_BRUTE", 2_000_000))


def _generators(n: int) -> tuple[list[int], list[int]]:
    """Ranks of generating sets for S_n[S_2] and S_2n inside S_2n."""
    m = 2 * n
    gens_h = [Permutation.from_cycles([(1, 2)], m)]
    if n > 1:
        gens_h.append(Permutation.from_cycles([(1, 3), (2, 4)], m))
        if n > 2:
            blocks = [tuple(range(1, m + 1, 2)), tuple(range(2, m + 1, 2))]
            gens_h.append(Permutation.from_cycles(blocks, m))
    gens_g = [Permutation.from_cycles([(1, 2)], m)]
    if m > 2:
        gens_g.append(Permutation.from_cycles([tuple(range(1, m + 1))], m))
    return [rank_of(g) for g in gens_h], [rank_of(g) for g in gens_g]


def _tuple_digits(M: int, d: int) -> np.ndarray:
    V = M**d
    idx = np.arange(V, dtype=np.int64)
    digits = np.empty((V, d), dtype=np.int64)
    for s in range(d - 1, -1, -1):
        digits[:, s] = idx % M
        idx //= M
    return digits


def _encode(digits: np.ndarray, M: int) -> np.ndarray:
    out = np.zeros(digits.shape[0], dtype=np.int64)
    for s in range(digits.shape[1]):
        out = out * M + digits[:, s]
    return out


def gauge_orbit_labels(d: int, n: int) -> np.ndarray:
    """For every tuple index, the smallest index in its gauge orbit."""
    M = math.factorial(2 * n)
    if M**d > brute_budget():
        raise BudgetExceeded(f"{M}^{d} tuples exceeds TENSOR_ORBIT_MAX_BRUTE={brute_budget()}")
    mul = mul_table(2 * n)
    digits = _tuple_digits(M, d)
    gens_h, gens_g = _generators(n)
    maps = []
    for s in range(d):
        for h in gens_h:
            moved = digits.copy()
            moved[:, s] = mul[h, digits[:, s]]
            maps.append(_encode(moved, M))
    for g in gens_g:
        maps.append(_encode(mul[digits, g], M))
    return kernels.orbit_labels(np.stack(maps))


def orbit_count(d: int, n: int) -> int:
    labels = gauge_orbit_labels(d, n)
    return int(np.count_nonzero(labels == np.arange(labels.size)))


def orbit_representatives(d: int, n: int) -> list[tuple[Permutation, ...]]:
    """Lexicographically smallest tuple of every orbit."""
    M = math.factorial(2 * n)
    labels = gauge_orbit_labels(d, n)
    reps = np.flatnonzero(labels == np.arange(labels.size))
    table = perm_table(2 * n)
    digits = _tuple_digits(M, d)[reps]
    return [tuple(Permutation.from_array0(table[r]) for r in row) for row in digits]


def burnside_count(d: int, n: int) -> int:
    """(1/|H|^d) sum_{gamma_i in H} sum_{sigma_1..sigma_{d-1}} prod_{i<d} delta(gamma_i sigma_i gamma_d sigma_i^-1)."""
    if d < 2:
        raise ValueError("need d >= 2")
    M = math.factorial(2 * n)
    h = wreath_ranks(n)
    if 2 * n > 6:
        raise BudgetExceeded("Burnside sum needs 2n <= 6")
    mul = mul_table(2 * n)
    inv = inverse_ranks(2 * n)
    s = np.arange(M)
    # delta(g_i s g_d s^-1) = 1  iff  g_i = s g_d^-1 s^-1
    target = mul[mul[s[None, :], inv[h][:, None]], inv[s][None, :]]
    total = kernels.burnside_sum(h, target, d)
    q, r = divmod(total, len(h) ** d)
    if r:
        raise ArithmeticError("Burnside sum not divisible by |H|^d")
    return q


def commutes_with_pairing(arr: np.ndarray, n: int) -> np.ndarray:
    """Row mask: which 0-based permutations lie in S_n[S_2]."""
    xi = base_pairing(n).array0()
    arr = np.atleast_2d(arr)
    return np.all(arr[:, xi] == xi[arr], axis=1)


def aut_order(sigmas: Sequence[Permutation]) -> int:
    """#{gamma in S_2n : sigma_i gamma sigma_i^-1 in S_n[S_2] for every i}."""
    m = sigmas[0].degree
    if m % 2 or m > 8:
        raise BudgetExceeded("aut_order needs an even degree <= 8")
    if any(s.degree != m for s in sigmas):
        raise ValueError("degree mismatch")
    table = perm_table(m)
    ok = np.ones(len(table), dtype=bool)
    for s in sigmas:
        sa = s.array0()
        s_inv = np.argsort(sa)
        conj = sa[table[:, s_inv]]  # x -> s(g(s^-1(x)))
        ok &= commutes_with_pairing(conj, m // 2)
    return int(ok.sum())


def tuple_rank(sigmas: Sequence[Permutation]) -> int:
    M = math.factorial(sigmas[0].degree)
    r = 0
    for s in sigmas:
        r = r * M + rank_of(s)
    return r


def gauge_transform(sigmas: Sequence[Permutation], lefts: Sequence[Permutation],
                    right: Permutation) -> tuple[Permutation, ...]:
    """(gamma_i sigma_i gamma)_i."""
    return tuple(g * s * right for g, s in zip(lefts, sigmas))


__all__ = ["orbit_count", "burnside_count", "aut_order", "orbit_representatives",
           "gauge_orbit_labels", "gauge_transform", "tuple_rank", "brute_budget", "rank"]
