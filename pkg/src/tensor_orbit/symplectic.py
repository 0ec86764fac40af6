"""The complete-graph (K4) contraction of four rank-3 tensors with a
symplectic form J on every edge.

Tensors are indexed by a, b, c, d; edge pairs (tensor slot, tensor slot):

    colour 1: a-b, c-d      colour 2: a-c, b-d      colour 3: b-c, a-d

Each edge carries J[x][y] between the two slot indices (first tensor's index
first). The result is a polynomial in the symbols T_ijk, stored as
{sorted 4-tuple of index triples: integer coefficient}.
"""
from __future__ import annotations

import itertools
import re
from collections import Counter
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import BudgetExceeded

Symbol = tuple  # (i, j, k)
Monomial = tuple  # sorted tuple of Symbols


def symplectic_matrix(N: int) -> np.ndarray:
    """[[0, I_N], [-I_N, 0]] as an int64 array."""
    if N < 1:
        raise ValueError("N must be >= 1")
    J = np.zeros((2 * N, 2 * N), dtype=np.int64)
    J[:N, N:] = np.eye(N, dtype=np.int64)
    J[N:, :N] = -np.eye(N, dtype=np.int64)
    return J


def k4_invariant(N: int = 2) -> dict[Monomial, int]:
    if N < 1:
        raise ValueError("N must be >= 1")
    if N > 3:
        raise BudgetExceeded("K4 expansion limited to N <= 3")
    J = symplectic_matrix(N)
    dim = 2 * N
    # J has one nonzero per row: partner[x] and its sign
    partner = [int(np.flatnonzero(J[x])[0]) for x in range(dim)]
    sign = [int(J[x, partner[x]]) for x in range(dim)]
    poly: Counter = Counter()
    for a1, a2, a3, b2, b3, c1 in itertools.product(range(dim), repeat=6):
        b1, c2, c3, d1, d2, d3 = partner[a1], partner[a2], partner[b3], partner[c1], partner[b2], partner[a3]
        coeff = sign[a1] * sign[a2] * sign[b3] * sign[c1] * sign[b2] * sign[a3]
        mono = tuple(sorted([(a1, a2, a3), (b1, b2, b3), (c1, c2, c3), (d1, d2, d3)]))
        poly[mono] += coeff
    return {m: c for m, c in poly.items() if c}


_SYMBOL = re.compile(r"^T_?(\d)(\d)(\d)$")


def parse_symbol(text: str) -> Symbol:
    m = _SYMBOL.match(text.strip())
    if not m:
        raise ValueError(f"malformed symbol {text!r}; expected T_ijk")
    return tuple(int(x) for x in m.groups())


def symbol_name(s: Symbol) -> str:
    return "T_" + "".join(map(str, s))


def parse_monomial(text: str) -> Monomial:
    """'T_000*T_032' or 'T_000,T_032' or 'T_000^2' -> sorted symbol tuple."""
    out = []
    for part in re.split(r"[*,\s]+", text.strip()):
        if not part:
            continue
        base, _, power = part.partition("^")
        out += [parse_symbol(base)] * (int(power) if power else 1)
    return tuple(sorted(out))


def coefficient(poly: dict[Monomial, int], monomial: Sequence[Symbol]) -> int | dict[Monomial, int]:
    """Coefficient of a monomial, with exact exponents on the queried symbols.

    A full degree-4 query gives an integer. A shorter query gives the
    residual polynomial over terms where every queried symbol appears
    exactly as often as in the query, or 0 when no term qualifies.
    """
    query = Counter(tuple(s) for s in monomial)
    if sum(query.values()) > 4:
        raise ValueError("monomial degree exceeds 4")
    residual: Counter = Counter()
    for mono, c in poly.items():
        have = Counter(mono)
        if all(have[s] == k for s, k in query.items()):
            rest = have - query
            residual[tuple(sorted(rest.elements()))] += c
    residual = {m: c for m, c in residual.items() if c}
    if sum(query.values()) == 4:
        return residual.get((), 0)
    return residual or 0


def format_poly(poly: dict[Monomial, int]) -> str:
    if not poly:
        return "0"
    parts = []
    for mono in sorted(poly):
        c = poly[mono]
        body = "*".join(symbol_name(s) for s in mono) or "1"
        parts.append(("- " if c < 0 else "+ ") + (f"{abs(c)}*" if abs(c) != 1 or not mono else "") + body)
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def transform(tensor: np.ndarray, K) -> np.ndarray:
    """T'_{abc} = sum K_{aa'} K_{bb'} K_{cc'} T_{a'b'c'} (object arrays keep Fractions exact)."""
    K = np.asarray(K, dtype=object)
    out = np.tensordot(K, tensor, axes=([1], [0]))
    out = np.tensordot(K, out, axes=([1], [1])).transpose(1, 0, 2)
    out = np.tensordot(K, out, axes=([1], [2])).transpose(1, 2, 0)
    return out


def evaluate(poly: dict[Monomial, int], tensor: np.ndarray):
    total = 0
    for mono, c in poly.items():
        term = c
        for s in mono:
            term = term * tensor[s]
        total += term
    return total


def transvection(v: Iterable, c, N: int) -> np.ndarray:
    """I + c v v^T J, a symplectic matrix for any vector v and scalar c."""
    J = symplectic_matrix(N).astype(object)
    v = np.asarray([Fraction(x) for x in v], dtype=object).reshape(-1, 1)
    return np.eye(2 * N, dtype=object) + Fraction(c) * (v @ v.T) @ J


def is_symplectic(K, N: int) -> bool:
    J = symplectic_matrix(N).astype(object)
    K = np.asarray(K, dtype=object)
    return bool(np.all(K.T @ J @ K == J))


__all__ = ["symplectic_matrix", "k4_invariant", "coefficient", "parse_symbol", "parse_monomial",
           "symbol_name", "format_poly", "transform", "evaluate", "transvection", "is_symplectic"]
