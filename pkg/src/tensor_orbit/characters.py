"""Irreducible characters of S_m and the Kronecker-coefficient form of the count.

Characters come from the Murnaghan-Nakayama rule on beta-sets: removing a
border strip of length k is moving one bead k places down, with sign
(-1)^(beads jumped over). The largest cycle is stripped first.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from functools import lru_cache
from typing import Sequence

from .partitions import Partition, even_partitions_of, partitions_of, sym
from .wreath import wreath_class_sizes, wreath_order


def _strip(R: Partition, k: int):
    """Yield (sign, R') for every k-border strip removable from R."""
    ell = len(R)
    beta = [R[i] + ell - 1 - i for i in range(ell)]
    occupied = set(beta)
    for i, b in enumerate(beta):
        t = b - k
        if t < 0 or t in occupied:
            continue
        jumped = sum(1 for x in beta if t < x < b)
        new = sorted((x if x != b else t) for x in beta)[::-1]
        parts = tuple(new[j] - (ell - 1 - j) for j in range(ell))
        yield (-1) ** jumped, tuple(x for x in parts if x > 0)


@lru_cache(maxsize=None)
def _chi(R: Partition, p: Partition) -> int:
    if not p:
        return 1
    k, rest = p[0], p[1:]
    return sum(sign * _chi(Rp, rest) for sign, Rp in _strip(R, k))


def character(R: Sequence[int], p: Sequence[int]) -> int:
    """chi^R on the class of cycle type p."""
    R, p = tuple(R), tuple(sorted(p, reverse=True))
    if sum(R) != sum(p):
        raise ValueError(f"weight mismatch: |R|={sum(R)}, |p|={sum(p)}")
    return _chi(R, p)


character.cache_info = _chi.cache_info
character.cache_clear = _chi.cache_clear


def character_table(m: int) -> tuple[list[Partition], list[Partition], list[list[int]]]:
    """(irreps, classes, table) with table[i][j] = chi^{irreps[i]}(classes[j])."""
    parts = list(partitions_of(m))
    return parts, parts, [[_chi(R, p) for p in parts] for R in parts]


def _weighted_sum(chars_per_class: dict[Partition, int], m: int) -> int:
    # sum_p X(p) / sym(p), done as sum_p X(p) |C_p| / m! in integers
    fact = math.factorial(m)
    num = sum(x * (fact // sym(p)) for p, x in chars_per_class.items())
    q, r = divmod(num, fact)
    if r:
        raise ArithmeticError("class-weighted character sum is not integral")
    return q


def kronecker_k(Rs: Sequence[Sequence[int]]) -> int:
    """Multiplicity of the trivial irrep in R_1 x ... x R_k.

    k = 3 is the Kronecker coefficient; k = 2 is delta(R_1, R_2) by
    orthogonality.
    """
    Rs = [tuple(R) for R in Rs]
    if len(Rs) < 2:
        raise ValueError("need at least two partitions")
    m = sum(Rs[0])
    if any(sum(R) != m for R in Rs):
        raise ValueError("weight mismatch")
    vals = {}
    for p in partitions_of(m):
        prod = 1
        for R in Rs:
            prod *= _chi(R, p)
            if not prod:
                break
        vals[p] = prod
    return _weighted_sum(vals, m)


def kronecker(R1, R2, R3) -> int:
    return kronecker_k([R1, R2, R3])


def kronecker_convolution(Rs: Sequence[Sequence[int]]) -> int:
    """C_k as a chain of ordinary Kronecker coefficients over intermediate irreps."""
    Rs = [tuple(R) for R in Rs]
    k = len(Rs)
    if k < 3:
        raise ValueError("need k >= 3")
    if k == 3:
        return kronecker(*Rs)
    m = sum(Rs[0])
    irreps = list(partitions_of(m))
    # v[S] = multiplicity of S in R_1 x R_2 (irreps are self-dual)
    v = {S: kronecker(Rs[0], Rs[1], S) for S in irreps}
    for R in Rs[2:-2]:
        v = {T: sum(c * kronecker(S, R, T) for S, c in v.items() if c) for T in irreps}
    return sum(c * kronecker(S, Rs[-2], Rs[-1]) for S, c in v.items() if c)


def count_invariants_kronecker(d: int, n: int) -> int:
    """Sum of C_d over d-tuples of even partitions of 2n.

    C_d is symmetric, so each multiset of irreps is evaluated once and
    weighted by the number of its orderings.
    """
    if d < 2 or n < 1:
        raise ValueError("need d >= 2 and n >= 1")
    m = 2 * n
    evens = even_partitions_of(m)
    classes = list(partitions_of(m))
    chars = {R: [_chi(R, p) for p in classes] for R in evens}
    fact = math.factorial(m)
    weights = [fact // sym(p) for p in classes]
    total = 0
    for combo in itertools.combinations_with_replacement(evens, d):
        orderings = math.factorial(d)
        for mult in Counter(combo).values():
            orderings //= math.factorial(mult)
        num = 0
        for j, w in enumerate(weights):
            prod = w
            for R in combo:
                prod *= chars[R][j]
                if not prod:
                    break
            num += prod
        c, r = divmod(num, fact)
        assert r == 0
        total += orderings * c
    return total


def even_character_sum(p: Partition) -> int:
    """sum of chi^R(p) over the even partitions R of |p|."""
    return sum(_chi(R, tuple(p)) for R in even_partitions_of(sum(p)))


def count_invariants_squares(n: int) -> int:
    """Rank-3 count as a normalized sum of squares over S_n[S_2]:
    (1 / 2^n n!) sum_gamma (sum_{R even} chi^R(gamma))^2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = 0
    for p, size in wreath_class_sizes(n).items():
        total += size * even_character_sum(p) ** 2
    q, r = divmod(total, wreath_order(n))
    if r:
        raise ArithmeticError("sum of squares not divisible by |S_n[S_2]|")
    return q
