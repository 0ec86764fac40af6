"""Gaussian correlators of tensor observables as polynomials in N.

An observable built from d permutations sigma_i of 2n points contracts the
colour-i indices of its tensors along the pairing sigma_i^-1 xi sigma_i.
With Wick contractions across two observables indexed by mu in S_2n, every
colour contributes one factor of N per closed index loop. A loop alternates
between the two pairings, so the loops are half the cycles of
mu^-1 tau~_i mu sigma~_i. The exponent used here is that half count; the
``literal`` variants keep the full cycle count for comparison.
"""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from . import kernels
from .errors import BudgetExceeded
from .npoly import NPolynomial
from .perm import Permutation, pairings, perm_table, tilde


class Observable:
    """Tensor contraction labelled by a d-tuple of permutations of 2n points."""

    __slots__ = ("sigmas", "pairings")

    def __init__(self, sigmas: Sequence[Permutation]):
        sigmas = tuple(sigmas)
        if not sigmas:
            raise ValueError("need at least one colour")
        m = sigmas[0].degree
        if m % 2 or any(s.degree != m for s in sigmas):
            raise ValueError("all permutations must share one even degree")
        self.sigmas = sigmas
        self.pairings = tuple(tilde(s) for s in sigmas)

    @property
    def rank(self) -> int:
        return len(self.sigmas)

    @property
    def degree(self) -> int:
        return self.sigmas[0].degree

    def __eq__(self, other):
        return isinstance(other, Observable) and self.pairings == other.pairings

    def __hash__(self):
        return hash(self.pairings)

    def __repr__(self):
        return "Observable(" + ", ".join(s.cycle_string() for s in self.sigmas) + ")"


def _compatible(A: Observable, B: Observable) -> None:
    if A.rank != B.rank or A.degree != B.degree:
        raise ValueError("observables differ in rank or number of tensors")


def _poly_from_exponents(exps: np.ndarray) -> NPolynomial:
    values, counts = np.unique(exps, return_counts=True)
    return NPolynomial({int(e): int(c) for e, c in zip(values, counts)})


def _two_point_cycles(A: Observable, B: Observable) -> np.ndarray:
    """Total cycle count of mu^-1 tau~_i mu sigma~_i over colours, one entry per mu."""
    _compatible(A, B)
    m = A.degree
    if m > 8:
        raise BudgetExceeded("two-point sums limited to 2n <= 8")
    mu = perm_table(m)
    mu_inv = np.argsort(mu, axis=1)
    rows = np.arange(len(mu))[:, None]
    total = np.zeros(len(mu), dtype=np.int64)
    for s, t in zip(A.pairings, B.pairings):
        sa, ta = s.array0(), t.array0()
        # x -> mu^-1(tau(mu(sigma(x))))
        prod = mu_inv[rows, ta[mu[:, sa]]]
        total += kernels.cycle_counts(prod)
    return total


def _one_point_cycles(A: Observable) -> np.ndarray:
    m = A.degree
    if m > 10:
        raise BudgetExceeded("one-point sums limited to 2n <= 10")
    mus = np.array([p.array0() for p in pairings(m)])
    total = np.zeros(len(mus), dtype=np.int64)
    for s in A.pairings:
        total += kernels.cycle_counts(mus[:, s.array0()])
    return total


def correlator_2pt(A: Observable, B: Observable) -> NPolynomial:
    """sum over mu in S_2n of N^(half the total cycle count)."""
    cycles = _two_point_cycles(A, B)
    if np.any(cycles % 2):
        raise ArithmeticError("odd cycle count in a product of two pairings")
    return _poly_from_exponents(cycles // 2)


def correlator_1pt(A: Observable) -> NPolynomial:
    """sum over pairings mu of N^(half the total cycle count of mu sigma~_i)."""
    cycles = _one_point_cycles(A)
    if np.any(cycles % 2):
        raise ArithmeticError("odd cycle count in a product of two pairings")
    return _poly_from_exponents(cycles // 2)


def correlator_2pt_literal(A: Observable, B: Observable) -> NPolynomial:
    """Same sum with the full cycle count as exponent (does not match Wick contraction)."""
    return _poly_from_exponents(_two_point_cycles(A, B))


def correlator_1pt_literal(A: Observable) -> NPolynomial:
    return _poly_from_exponents(_one_point_cycles(A))


# --- index-summation oracles --------------------------------------------------


def _colour_2pt_pairs(s: Permutation, t: Permutation, mu: Sequence[int]) -> list[tuple[int, int]]:
    # a_j is variable j, b_j is variable m + j (0-based)
    m = s.degree
    pairs = [(j, s(j + 1) - 1) for j in range(m)]
    pairs += [(m + j, m + t(j + 1) - 1) for j in range(m)]
    pairs += [(j, m + mu[j]) for j in range(m)]
    return pairs


def _oracle_budget(A: Observable, N: int, factorize: bool) -> None:
    V = 2 * A.degree * (1 if factorize else A.rank)
    if N**V > 2**24 or A.degree > 4:
        raise BudgetExceeded("index sum too large for the oracle")


def correlator_2pt_oracle(A: Observable, B: Observable, N: int, factorize: bool = True) -> int:
    """Direct count of index assignments surviving all vertex and Wick deltas.

    The deltas never mix colours, so by default each colour is summed on its
    own and the results multiplied; ``factorize=False`` sums all colours at
    once (feasible only for the smallest cases).
    """
    _compatible(A, B)
    _oracle_budget(A, N, factorize)
    m = A.degree
    total = 0
    for row in perm_table(m):
        if factorize:
            term = 1
            for s, t in zip(A.pairings, B.pairings):
                term *= kernels.count_assignments(2 * m, _colour_2pt_pairs(s, t, row), N)
        else:
            pairs = []
            for i, (s, t) in enumerate(zip(A.pairings, B.pairings)):
                off = 2 * m * i
                pairs += [(a + off, b + off) for a, b in _colour_2pt_pairs(s, t, row)]
            term = kernels.count_assignments(2 * m * A.rank, pairs, N)
        total += term
    return total


def correlator_1pt_oracle(A: Observable, N: int, factorize: bool = True) -> int:
    """Direct index count for a single observable contracted with itself by pairings."""
    _oracle_budget(A, N, factorize)
    m = A.degree
    total = 0
    for mu in pairings(m):
        colour_pairs = [[(j, s(j + 1) - 1) for j in range(m)] + [(j, mu(j + 1) - 1) for j in range(m)]
                        for s in A.pairings]
        if factorize:
            term = math.prod(kernels.count_assignments(m, p, N) for p in colour_pairs)
        else:
            pairs = [(a + m * i, b + m * i) for i, p in enumerate(colour_pairs) for a, b in p]
            term = kernels.count_assignments(m * A.rank, pairs, N)
        total += term
    return total


__all__ = ["Observable", "correlator_2pt", "correlator_1pt", "correlator_2pt_literal",
           "correlator_1pt_literal", "correlator_2pt_oracle", "correlator_1pt_oracle"]
