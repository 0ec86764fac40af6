"""Counting d-regular edge-coloured graphs on 2n vertices.

``count_invariants`` is the double-coset class formula fed by the wreath
cycle index; ``count_read`` is Read's product of Hermite-type series;
``count_connected`` takes the plethystic logarithm of either. All arithmetic
is exact (ints and Fractions).
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Sequence

from .errors import BudgetExceeded, CrossCheckError
from .partitions import sym
from .wreath import wreath_series

Series = list  # list of Fraction, index = power of t


def count_invariants(d: int, n: int) -> int:
    """Number of rank-d O(N) invariants built from 2n tensors."""
    if d < 2 or n < 1:
        raise ValueError("need d >= 2 and n >= 1")
    total = Fraction(0)
    for p, c in wreath_series(n).terms(n).items():
        total += c**d * sym(p) ** (d - 1)
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral count {total} at d={d}, n={n}")
    return int(total)


# --- truncated power series in t ------------------------------------------

def series_mul(a: Series, b: Series, n: int) -> Series:
    out = [Fraction(0)] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if not x:
            continue
        for j, y in enumerate(b[: n + 1 - i]):
            if y:
                out[i + j] += x * y
    return out


def series_log(f: Series, n: int) -> Series:
    """log f for f(0) = 1, via n L_n = n f_n - sum_{k<n} k L_k f_{n-k}."""
    if f[0] != 1:
        raise ValueError("log needs constant term 1")
    f = list(f) + [Fraction(0)] * (n + 1 - len(f))
    L = [Fraction(0)] * (n + 1)
    for m in range(1, n + 1):
        acc = m * Fraction(f[m])
        for k in range(1, m):
            acc -= k * L[k] * f[m - k]
        L[m] = acc / m
    return L


def series_exp(g: Series, n: int) -> Series:
    """exp g for g(0) = 0, via m F_m = sum_k k g_k F_{m-k}."""
    g = list(g) + [Fraction(0)] * (n + 1 - len(g))
    F = [Fraction(0)] * (n + 1)
    F[0] = Fraction(1)
    for m in range(1, n + 1):
        F[m] = sum((k * g[k] * F[m - k] for k in range(1, m + 1)), Fraction(0)) / m
    return F


def mobius(k: int) -> int:
    if k < 1:
        raise ValueError("mobius needs k >= 1")
    out, p = 1, 2
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            out = -out
        p += 1
    return -out if k > 1 else out


# --- Read's formula ---------------------------------------------------------

def hermite_a(k: int, jmax: int) -> list[int]:
    """A_k(j) = (i sqrt k)^j H_j(1/(2 i sqrt k)) for j = 0..jmax.

    The Hermite recurrence collapses to the integer recurrence
    A(0) = A(1) = 1, A(j+1) = A(j) + 2kj A(j-1).
    """
    a = [1, 1]
    for j in range(1, jmax):
        a.append(a[j] + 2 * k * j * a[j - 1])
    return a[: jmax + 1]


def read_factor(m: int, d: int, n: int) -> Series:
    """Phi_m(t) truncated at t^n."""
    phi = [Fraction(0)] * (n + 1)
    if m % 2 == 0:
        k = m // 2
        a = hermite_a(k, n // k)
        for j in range(n // k + 1):
            phi[k * j] = Fraction(a[j] ** d, math.factorial(j) * m**j)
    else:
        ratio = Fraction(m ** (d - 2), 2**d)
        for j in range(n // m + 1):
            phi[m * j] = Fraction(math.factorial(2 * j) ** (d - 1), math.factorial(j) ** d) * ratio**j
    return phi


def read_series(d: int, n: int) -> Series:
    out = [Fraction(1)] + [Fraction(0)] * n
    # Phi_m only moves powers >= m/2, so m = 1..2n is enough
    for m in range(1, 2 * n + 1):
        out = series_mul(out, read_factor(m, d, n), n)
    return out


def count_read(d: int, n: int) -> int:
    if d < 2 or n < 1:
        raise ValueError("need d >= 2 and n >= 1")
    c = read_series(d, n)[n]
    if c.denominator != 1:
        raise ArithmeticError(f"Read coefficient {c} not integral")
    return int(c)


# --- connected counts -------------------------------------------------------

def invariant_series(d: int, n: int, counter: Callable[[int, int], int] = count_invariants) -> Series:
    return [Fraction(1)] + [Fraction(counter(d, k)) for k in range(1, n + 1)]


def plethystic_log(f: Series, n: int) -> list[int]:
    """Connected coefficients c_1..c_n with f = PE[sum c_k t^k]; index 0 unused."""
    L = series_log(f, n)
    out = [0]
    for m in range(1, n + 1):
        acc = Fraction(0)
        for i in range(1, m + 1):
            if m % i == 0:
                acc += Fraction(mobius(i), i) * L[m // i]
        if acc.denominator != 1:
            raise ArithmeticError(f"plethystic log coefficient {acc} at t^{m} not integral")
        out.append(int(acc))
    return out


def plethystic_exp(c: Sequence[int], n: int) -> list[int]:
    """Inverse of ``plethystic_log``: multiset series from connected counts c[1..n]."""
    g = [Fraction(0)] * (n + 1)
    for m in range(1, n + 1):
        for k in range(1, m + 1):
            if m % k == 0:
                g[m] += Fraction(c[m // k], k)
    F = series_exp(g, n)
    assert all(x.denominator == 1 for x in F)
    return [int(x) for x in F]


def count_connected(d: int, n: int) -> int:
    if d < 2 or n < 1:
        raise ValueError("need d >= 2 and n >= 1")
    return plethystic_log(invariant_series(d, n), n)[n]


def connected_sequence(d: int, n_max: int) -> list[int]:
    return plethystic_log(invariant_series(d, n_max), n_max)[1:]


# --- sequence emission ------------------------------------------------------

METHODS = ("coset", "read", "kronecker", "squares", "brute")


def _method(name: str) -> Callable[[int, int], int]:
    if name == "coset":
        return count_invariants
    if name == "read":
        return count_read
    if name == "kronecker":
        from .characters import count_invariants_kronecker
        return count_invariants_kronecker
    if name == "squares":
        from .characters import count_invariants_squares

        def squares(d, n):
            if d != 3:
                raise BudgetExceeded("the sum-of-squares route exists only at rank 3")
            return count_invariants_squares(n)
        return squares
    if name == "brute":
        from .bruteforce import orbit_count
        return orbit_count
    raise ValueError(f"unknown method {name!r}; choose from {METHODS}")


def sequence(d: int, n_max: int, method: str = "coset", connected: bool = False,
             check: bool = True) -> list[tuple[int, int]]:
    """[(n, Z_d(2n))] for n = 1..n_max by the chosen route.

    With ``check`` every value from a non-coset route is compared with the
    class formula and a divergence raises ``CrossCheckError``.
    """
    f = _method(method)
    values = [f(d, n) for n in range(1, n_max + 1)]
    if check and method != "coset":
        for n, v in enumerate(values, start=1):
            ref = count_invariants(d, n)
            if v != ref:
                raise CrossCheckError(f"{method} gives {v} at d={d}, n={n}; coset formula gives {ref}")
    if connected:
        values = plethystic_log([Fraction(1)] + [Fraction(v) for v in values], n_max)[1:]
    return list(enumerate(values, start=1))
