"""How many elements of S_n[S_2] fall in each conjugacy class of S_2n.

The normative route expands the cycle-index generating function

    exp( sum_i t^i/i * (x_i^2 + x_{2i}) / 2 )

as a sparse series in t whose coefficients are polynomials in the x_k; the
monomial prod_k x_k^{p_k} is keyed by the partition with p_k parts equal to
k. Multiplying the coefficient of t^n x^p by 2^n n! gives the class size.

Two other routes exist for cross-checking: the signed-cycle formula for the
hyperoctahedral group and a brute-force count over ``perm.wreath_elements``.
"""
from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction

from .partitions import Partition, partitions_of
from .perm import cycle_type, wreath_elements


def _merge(p: Partition, q: Partition) -> Partition:
    return tuple(sorted(p + q, reverse=True))


class CycleIndexSeries:
    """Truncated series sum_n t^n sum_p c(n, p) x^p with rational c."""

    def __init__(self, max_n: int):
        self.max_n = max_n
        self._terms: list[dict[Partition, Fraction]] = [{(): Fraction(1)}]
        self.extend(max_n)

    def extend(self, max_n: int) -> None:
        # n F_n = sum_k k g_k F_{n-k},  k g_k = (x_k^2 + x_{2k}) / 2
        half = Fraction(1, 2)
        for n in range(len(self._terms), max_n + 1):
            acc: dict[Partition, Fraction] = {}
            for k in range(1, n + 1):
                for mono, c in self._terms[n - k].items():
                    for extra in ((k, k), (2 * k,)):
                        key = _merge(mono, extra)
                        acc[key] = acc.get(key, 0) + c * half
            self._terms.append({key: c / n for key, c in acc.items() if c})
        self.max_n = max(self.max_n, max_n)

    def terms(self, n: int) -> dict[Partition, Fraction]:
        if n > self.max_n:
            self.extend(n)
        return dict(self._terms[n])

    def coefficient(self, n: int, p: Partition) -> Fraction:
        if n > self.max_n:
            self.extend(n)
        return self._terms[n].get(tuple(p), Fraction(0))


_SERIES = CycleIndexSeries(1)


def wreath_series(max_n: int) -> CycleIndexSeries:
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    _SERIES.extend(max_n)
    return _SERIES


def wreath_order(n: int) -> int:
    return 2**n * math.factorial(n)


def _check(n: int, p: Partition) -> Partition:
    p = tuple(p)
    if sum(p) != 2 * n:
        raise ValueError(f"partition {list(p)} has weight {sum(p)}, expected {2 * n}")
    return p


def wreath_class_size(n: int, p: Partition) -> int:
    p = _check(n, p)
    c = wreath_series(n).coefficient(n, p) * wreath_order(n)
    assert c.denominator == 1
    return int(c)


def wreath_class_sizes(n: int) -> dict[Partition, int]:
    """Nonzero class sizes for every p |- 2n, from the series."""
    order = wreath_order(n)
    out = {}
    for p, c in wreath_series(n).terms(n).items():
        v = c * order
        assert v.denominator == 1
        out[p] = int(v)
    return out


def wreath_class_size_signed(n: int, p: Partition) -> int:
    """Same count through signed cycle types (alpha, beta) of S_n[S_2].

    A positive cycle of length a contributes two a-cycles in S_2n, a negative
    cycle of length b one 2b-cycle; the signed class (alpha, beta) has
    2^n n! / (prod_a (2a)^{m_a} m_a! * prod_b (2b)^{m_b} m_b!) elements.
    """
    p = _check(n, p)
    target = Counter(p)
    total = 0
    for beta_weight in range(n + 1):
        for alpha in partitions_of(n - beta_weight):
            for beta in partitions_of(beta_weight):
                got = Counter()
                for a in alpha:
                    got[a] += 2
                for b in beta:
                    got[2 * b] += 1
                if got != target:
                    continue
                denom = 1
                for part, mult in Counter(alpha).items():
                    denom *= (2 * part) ** mult * math.factorial(mult)
                for part, mult in Counter(beta).items():
                    denom *= (2 * part) ** mult * math.factorial(mult)
                total += wreath_order(n) // denom
    return total


def wreath_class_size_oracle(n: int, p: Partition) -> int:
    """Brute-force count over the enumerated subgroup (n <= 5)."""
    if n > 5:
        raise ValueError("oracle limited to n <= 5")
    p = _check(n, p)
    return sum(1 for g in wreath_elements(n) if cycle_type(g) == p)
