"""Integer partitions as weakly decreasing tuples, plus the class and
dimension numerology of the symmetric group."""
from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache
from typing import Iterator, Sequence

from .npoly import NPolynomial

Partition = tuple  # weakly decreasing tuple of positive ints


def as_partition(parts: Sequence[int]) -> Partition:
    p = tuple(int(x) for x in parts)
    if any(x < 1 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"not a partition: {list(parts)}")
    return p


@lru_cache(maxsize=None)
def _partitions(m: int, largest: int) -> tuple:
    if m == 0:
        return ((),)
    out = []
    for k in range(min(m, largest), 0, -1):
        for rest in _partitions(m - k, k):
            out.append((k,) + rest)
    return tuple(out)


def partitions_of(m: int) -> Iterator[Partition]:
    """Partitions of m in reverse lexicographic order, [m] first, [1^m] last."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return iter(_partitions(m, m))


def partition_count(m: int) -> int:
    return len(_partitions(m, m))


def multiplicities(p: Partition) -> dict[int, int]:
    return dict(Counter(p))


def sym(p: Partition) -> int:
    """Centralizer order prod_i i^{m_i} m_i!; a class of type p in S_m has m!/sym(p) elements."""
    out = 1
    for part, mult in Counter(p).items():
        out *= part**mult * math.factorial(mult)
    return out


def class_size(p: Partition) -> int:
    return math.factorial(sum(p)) // sym(p)


def is_even_partition(R: Partition) -> bool:
    return all(x % 2 == 0 for x in R)


def even_partitions_of(m: int) -> list[Partition]:
    return [R for R in partitions_of(m) if is_even_partition(R)]


def conjugate_partition(R: Partition) -> Partition:
    if not R:
        return ()
    return tuple(sum(1 for r in R if r > j) for j in range(R[0]))


def hook_product(R: Partition) -> int:
    cols = conjugate_partition(R)
    out = 1
    for i, r in enumerate(R):
        for j in range(r):
            out *= (r - j - 1) + (cols[j] - i - 1) + 1
    return out


def dim_sn(R: Partition) -> int:
    """Dimension of the S_m irrep R by the hook length formula."""
    return math.factorial(sum(R)) // hook_product(R)


def f_poly(R: Partition, N: int) -> int:
    """Product of box weights N - i + j over the diagram (1-based row i, column j)."""
    out = 1
    for i, r in enumerate(R):
        for j in range(r):
            out *= N + j - i
    return out


def dim_un(R: Partition, N: int) -> int:
    """Dimension of the U(N) irrep labelled by R; 0 when R has more than N rows."""
    if len(R) > N:
        return 0
    return f_poly(R, N) // hook_product(R)


def f_poly_symbolic(R: Partition) -> NPolynomial:
    out = NPolynomial.constant(1)
    for i, r in enumerate(R):
        for j in range(r):
            out = out * (NPolynomial.N() + (j - i))
    return out


def dim_un_symbolic(R: Partition) -> NPolynomial:
    return f_poly_symbolic(R) / hook_product(R)
