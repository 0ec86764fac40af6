"""Real orthogonal irreps of S_m in Young's orthogonal form.

Basis vectors are standard Young tableaux. An adjacent transposition s_k
(swapping k and k+1) acts on tableau T through the axial distance
r = content(k+1) - content(k), content = column - row:

    s_k T = (1/r) T + sqrt(1 - 1/r^2) s_k(T)

where s_k(T) swaps the two letters (and the second term is absent when that
is not standard). A general permutation is factored into adjacent
transpositions by bubble sort. Matrices are float64.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import BudgetExceeded
from .partitions import Partition, is_even_partition
from .perm import Permutation, wreath_elements

Tableau = tuple  # tuple of rows, each a tuple of letters


def standard_tableaux(R: Sequence[int]) -> list[Tableau]:
    """All standard tableaux of shape R in last-letter order.

    Tableaux are compared by the row holding m, then the row holding m-1,
    and so on, smaller row first.
    """
    return list(_tableaux(tuple(R)))


@lru_cache(maxsize=None)
def _tableaux(R: Partition) -> tuple:
    m = sum(R)
    if m == 0:
        return ((),)
    out = []
    for i, length in enumerate(R):
        # the box at the end of row i is a corner if the next row is shorter
        if length and (i + 1 == len(R) or R[i + 1] < length):
            smaller = list(R)
            smaller[i] -= 1
            smaller = tuple(x for x in smaller if x)
            for T in _tableaux(smaller):
                rows = [list(r) for r in T] + [[]] * (len(R) - len(T))
                rows[i] = rows[i] + [m]
                out.append(tuple(tuple(r) for r in rows))
    return tuple(out)


def _positions(T: Tableau) -> dict[int, tuple[int, int]]:
    return {x: (i, j) for i, row in enumerate(T) for j, x in enumerate(row)}


@lru_cache(maxsize=None)
def _generator_data(R: Partition):
    """Per k: (diag, off, partner) so that D(s_k) = diag I + off P_partner."""
    tabs = _tableaux(R)
    index = {T: a for a, T in enumerate(tabs)}
    pos = [_positions(T) for T in tabs]
    m = sum(R)
    data = []
    for k in range(1, m):
        diag = np.empty(len(tabs))
        off = np.zeros(len(tabs))
        partner = np.arange(len(tabs))
        for a, T in enumerate(tabs):
            (r1, c1), (r2, c2) = pos[a][k], pos[a][k + 1]
            r = (c2 - r2) - (c1 - r1)
            diag[a] = 1.0 / r
            if abs(r) > 1:
                swapped = tuple(tuple(k + 1 if x == k else k if x == k + 1 else x for x in row) for row in T)
                partner[a] = index[swapped]
                off[a] = np.sqrt(1.0 - 1.0 / (r * r))
        data.append((diag, off, partner))
    return data


def adjacent_factorization(sigma: Permutation) -> list[int]:
    """[i_1, ..., i_l] with sigma = s_{i_l} ... s_{i_1} (reduced word)."""
    img = list(sigma.images)
    word = []
    while True:
        for i in range(len(img) - 1):
            if img[i] > img[i + 1]:
                # sigma = (sigma s_i) s_i, and sigma s_i has one inversion fewer
                img[i], img[i + 1] = img[i + 1], img[i]
                word.append(i + 1)
                break
        else:
            return word


def rep_matrix(R: Sequence[int], sigma: Permutation) -> np.ndarray:
    R = tuple(R)
    if sum(R) != sigma.degree:
        raise ValueError(f"weight mismatch: |R|={sum(R)}, degree={sigma.degree}")
    gens = _generator_data(R)
    M = np.eye(len(_tableaux(R)))
    for i in adjacent_factorization(sigma):
        diag, off, partner = gens[i - 1]
        M = diag[:, None] * M + off[:, None] * M[partner]
    return M


def branching_projector(R: Sequence[int]) -> np.ndarray:
    """Average of D^R over S_n[S_2]: the projector onto its invariant vectors."""
    R = tuple(R)
    m = sum(R)
    if m % 2:
        raise ValueError("need a partition of an even number")
    if m > 8:
        raise BudgetExceeded("branching projector limited to 2n <= 8")
    dim = len(_tableaux(R))
    P = np.zeros((dim, dim))
    count = 0
    for g in wreath_elements(m // 2):
        P += rep_matrix(R, g)
        count += 1
    return P / count


def trivial_branching(R: Sequence[int]) -> tuple[np.ndarray | None, float]:
    """(B, trace P): B spans the S_n[S_2]-fixed line of R, or None if there is none.

    B has unit norm and its first nonzero entry is positive.
    """
    P = branching_projector(R)
    tr = float(np.trace(P))
    rank = round(tr)
    if abs(tr - rank) > 1e-6 or rank not in (0, 1):
        raise ArithmeticError(f"projector trace {tr} is not 0 or 1")
    if rank == 0:
        return None, tr
    col = P[:, int(np.argmax(np.linalg.norm(P, axis=0)))]
    B = col / np.linalg.norm(col)
    lead = B[np.flatnonzero(np.abs(B) > 1e-9)[0]]
    return (B if lead > 0 else -B), tr


def predicts_invariant(R: Sequence[int]) -> bool:
    return is_even_partition(tuple(R))
