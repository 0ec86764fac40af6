"""The algebra of gauge-invariant elements of C[S_2n]^{(x) d} at desk scale.

Elements are stored densely over all d-tuples (indexed by lexicographic
ranks) as an int64 array times one rational scale. A graph basis element is
a 0/1 indicator of a gauge orbit times a constant, so products of basis
elements stay in int64 for every size this module accepts.
"""
from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import kernels
from .bruteforce import brute_budget, orbit_representatives
from .errors import BudgetExceeded
from .perm import Permutation, mul_table, perm_table, rank_of, wreath_ranks

_INT_LIMIT = 2**62


def _check_size(m: int, d: int) -> int:
    size = math.factorial(m) ** d
    if size > brute_budget():
        raise BudgetExceeded(f"{size} tuples exceeds TENSOR_ORBIT_MAX_BRUTE={brute_budget()}")
    return size


class TensorAlgebraElement:
    """sum over d-tuples sigma of coeff(sigma) * (sigma_1 (x) ... (x) sigma_d)."""

    __slots__ = ("m", "d", "data", "scale")

    def __init__(self, m: int, d: int, data: np.ndarray, scale=1):
        self.m, self.d = m, d
        data = np.asarray(data, dtype=np.int64)
        if data.shape != (math.factorial(m) ** d,):
            raise ValueError("data length does not match (m, d)")
        scale = Fraction(scale)
        nz = data[data != 0]
        if nz.size == 0:
            data, scale = np.zeros_like(data), Fraction(1)
        else:
            g = int(np.gcd.reduce(np.abs(nz)))
            if scale < 0:
                g = -g
            if g != 1:
                data = data // g
                scale *= g
        self.data, self.scale = data, scale

    @classmethod
    def zero(cls, m: int, d: int) -> "TensorAlgebraElement":
        return cls(m, d, np.zeros(_check_size(m, d), dtype=np.int64))

    @classmethod
    def from_terms(cls, terms: dict, m: int, d: int) -> "TensorAlgebraElement":
        """Build from {tuple of Permutations: rational}."""
        _check_size(m, d)
        den = math.lcm(*(Fraction(c).denominator for c in terms.values())) if terms else 1
        data = np.zeros(math.factorial(m) ** d, dtype=np.int64)
        for key, c in terms.items():
            data[_tuple_index(key, m, d)] += int(Fraction(c) * den)
        return cls(m, d, data, Fraction(1, den))

    def _same_shape(self, other: "TensorAlgebraElement") -> None:
        if not isinstance(other, TensorAlgebraElement) or (self.m, self.d) != (other.m, other.d):
            raise ValueError("elements live in different algebras")

    def support(self) -> np.ndarray:
        return np.flatnonzero(self.data)

    def support_size(self) -> int:
        return int(np.count_nonzero(self.data))

    def is_zero(self) -> bool:
        return not self.data.any()

    def coefficient(self, sigmas: Sequence[Permutation]) -> Fraction:
        return int(self.data[_tuple_index(sigmas, self.m, self.d)]) * self.scale

    def terms(self) -> dict[tuple[Permutation, ...], Fraction]:
        table = perm_table(self.m)
        M = len(table)
        out = {}
        for idx in self.support():
            digits, r = [], int(idx)
            for _ in range(self.d):
                r, q = divmod(r, M)
                digits.append(q)
            key = tuple(Permutation.from_array0(table[q]) for q in reversed(digits))
            out[key] = int(self.data[idx]) * self.scale
        return out

    def __add__(self, other: "TensorAlgebraElement") -> "TensorAlgebraElement":
        self._same_shape(other)
        a, b = self.scale, other.scale
        s = Fraction(math.gcd(a.numerator, b.numerator), math.lcm(a.denominator, b.denominator))
        ka, kb = int(a / s), int(b / s)
        bound = abs(ka) * int(np.abs(self.data).max()) + abs(kb) * int(np.abs(other.data).max())
        if bound >= _INT_LIMIT:
            raise ArithmeticError("coefficient growth exceeds int64 storage")
        return TensorAlgebraElement(self.m, self.d, ka * self.data + kb * other.data, s)

    def __neg__(self) -> "TensorAlgebraElement":
        return TensorAlgebraElement(self.m, self.d, self.data, -self.scale)

    def __sub__(self, other: "TensorAlgebraElement") -> "TensorAlgebraElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TensorAlgebraElement):
            return multiply(self, other)
        return TensorAlgebraElement(self.m, self.d, self.data, self.scale * Fraction(other))

    def __rmul__(self, k):
        return TensorAlgebraElement(self.m, self.d, self.data, self.scale * Fraction(k))

    def __eq__(self, other):
        if not isinstance(other, TensorAlgebraElement):
            return NotImplemented
        return ((self.m, self.d) == (other.m, other.d) and self.scale == other.scale
                and np.array_equal(self.data, other.data))

    def __hash__(self):
        return hash((self.m, self.d, self.scale, self.data.tobytes()))

    def __repr__(self):
        return f"TensorAlgebraElement(m={self.m}, d={self.d}, support={self.support_size()}, scale={self.scale})"


def _tuple_index(sigmas: Sequence[Permutation], m: int, d: int) -> int:
    if len(sigmas) != d or any(s.degree != m for s in sigmas):
        raise ValueError(f"expected {d} permutations of degree {m}")
    M = math.factorial(m)
    idx = 0
    for s in sigmas:
        idx = idx * M + rank_of(s)
    return idx


def graph_basis_element(sigmas: Sequence[Permutation]) -> TensorAlgebraElement:
    """sum over gamma_i in S_n[S_2], gamma in S_2n of (gamma_1 sigma_1 gamma, ..., gamma_d sigma_d gamma)."""
    d, m = len(sigmas), sigmas[0].degree
    if m % 2:
        raise ValueError("degree must be even")
    size = _check_size(m, d)
    if len(wreath_ranks(m // 2)) ** d * math.factorial(m) > 64 * brute_budget():
        raise BudgetExceeded("too many gauge group elements")
    M = math.factorial(m)
    mul = mul_table(m)
    h = wreath_ranks(m // 2)
    g = np.arange(M)
    idx = np.zeros((1,) * d + (M,), dtype=np.int64)
    for i, s in enumerate(sigmas):
        left = mul[h, rank_of(s)]                     # gamma_i sigma_i
        slot = mul[left[:, None], g[None, :]]         # (gamma_i sigma_i) gamma
        shape = [1] * d + [M]
        shape[i] = len(h)
        idx = idx * M + slot.reshape(shape)
    counts = np.bincount(idx.ravel(), minlength=size)
    return TensorAlgebraElement(m, d, counts)


def multiply(A: TensorAlgebraElement, B: TensorAlgebraElement) -> TensorAlgebraElement:
    """Slotwise group-algebra product."""
    A._same_shape(B)
    M = math.factorial(A.m)
    sa, sb = A.support(), B.support()
    if int(np.abs(A.data).sum()) * int(np.abs(B.data).max(initial=0)) >= _INT_LIMIT:
        raise ArithmeticError("product coefficients could overflow int64")
    data = kernels.convolve(_digits(sa, M, A.d), A.data[sa], _digits(sb, M, A.d), B.data[sb],
                            mul_table(A.m), M, A.d)
    return TensorAlgebraElement(A.m, A.d, data, A.scale * B.scale)


def _digits(idx: np.ndarray, M: int, d: int) -> np.ndarray:
    out = np.empty((idx.size, d), dtype=np.int64)
    r = idx.astype(np.int64)
    for s in range(d - 1, -1, -1):
        out[:, s] = r % M
        r = r // M
    return out


def pairing(A: TensorAlgebraElement, B: TensorAlgebraElement) -> Fraction:
    """Sum of coefficient products over the common support."""
    A._same_shape(B)
    common = np.flatnonzero((A.data != 0) & (B.data != 0))
    raw = sum(int(x) * int(y) for x, y in zip(A.data[common], B.data[common]))
    return raw * A.scale * B.scale


@lru_cache(maxsize=8)
def _basis(d: int, n: int) -> tuple:
    reps = orbit_representatives(d, n)
    return tuple(reps), tuple(graph_basis_element(r) for r in reps)


def basis_representatives(d: int, n: int) -> list[tuple[Permutation, ...]]:
    return list(_basis(d, n)[0])


def basis_list(d: int, n: int) -> list[TensorAlgebraElement]:
    """One graph basis element per gauge orbit, ordered by smallest tuple."""
    return list(_basis(d, n)[1])


def gram_matrix(basis: Sequence[TensorAlgebraElement]) -> list[list[Fraction]]:
    return [[pairing(a, b) for b in basis] for a in basis]


def project(X: TensorAlgebraElement, basis: Sequence[TensorAlgebraElement]):
    """(coefficients, residual) of X against a pairwise-orthogonal basis."""
    coeffs = [pairing(X, b) / pairing(b, b) for b in basis]
    residual = X
    for c, b in zip(coeffs, basis):
        if c:
            residual = residual - c * b
    return coeffs, residual


def structure_report(d: int, n: int, samples: int = 20, seed: int = 0) -> dict:
    """Dimension, Gram matrix, closure residuals and associativity samples."""
    basis = basis_list(d, n)
    gram = gram_matrix(basis)
    k = len(basis)
    off_diagonal_zero = all(gram[i][j] == 0 for i in range(k) for j in range(k) if i != j)
    closure = []
    for i in range(k):
        for j in range(k):
            coeffs, residual = project(multiply(basis[i], basis[j]), basis)
            closure.append({"i": i, "j": j, "coefficients": [str(c) for c in coeffs],
                            "residual_zero": residual.is_zero()})
    rng = random.Random(seed)
    assoc = []
    for _ in range(samples):
        i, j, l = (rng.randrange(k) for _ in range(3))
        A, B, C = basis[i], basis[j], basis[l]
        assoc.append({"triple": [i, j, l], "equal": multiply(multiply(A, B), C) == multiply(A, multiply(B, C))})
    return {
        "rank": d,
        "tensors": 2 * n,
        "dimension": k,
        "representatives": [[str(s) for s in rep] for rep in basis_representatives(d, n)],
        "gram_diagonal": [str(gram[i][i]) for i in range(k)],
        "gram_off_diagonal_zero": off_diagonal_zero,
        "closure": closure,
        "closure_all_zero": all(c["residual_zero"] for c in closure),
        "associativity": assoc,
        "associativity_all_equal": all(a["equal"] for a in assoc),
        "unit_check": unit_check(d, n),
    }


def unit_check(d: int, n: int) -> dict:
    """Does (1/c) b_id act as a two-sided identity for one scalar c?

    b_id b_sigma and b_sigma b_id are expanded in the graph basis; a unit of
    that form exists iff every product is c b_sigma with the same c.
    """
    basis = basis_list(d, n)
    reps = basis_representatives(d, n)
    ident = tuple(Permutation.identity(2 * n) for _ in range(d))
    unit_idx = next(i for i, r in enumerate(reps) if r == ident)
    b_id = basis[unit_idx]
    left, right, ratios = [], [], set()
    proportional = True
    for i, b in enumerate(basis):
        for side, prod in (("left", multiply(b_id, b)), ("right", multiply(b, b_id))):
            coeffs, residual = project(prod, basis)
            (left if side == "left" else right).append([str(c) for c in coeffs])
            others = [c for k, c in enumerate(coeffs) if k != i]
            if any(others) or not residual.is_zero() or coeffs[i] == 0:
                proportional = False
            else:
                ratios.add(coeffs[i])
    found = proportional and len(ratios) == 1
    return {
        "found": found,
        "c": str(next(iter(ratios))) if found else None,
        "identity_index": unit_idx,
        "left_products": left,
        "right_products": right,
    }


__all__ = ["TensorAlgebraElement", "graph_basis_element", "multiply", "pairing", "basis_list",
           "basis_representatives", "gram_matrix", "project", "structure_report", "unit_check"]
