"""Permutations of {1..m} as one-line image arrays.

``Permutation((2, 3, 1))`` sends 1->2, 2->3, 3->1. Composition follows the
functional convention ``compose(p, q)(i) == p(q(i))``. Cycle strings such as
``"(1 2)(3 4)"`` are accepted as input only.

Bulk helpers at the bottom (``perm_table``, ``rank``, ``mul_table``) work on
0-based int arrays in lexicographic order and feed the numeric kernels.
"""
from __future__ import annotations

import itertools
import math
import re
from typing import Iterator, Sequence

import numpy as np

from .errors import BudgetExceeded

WREATH_BUDGET = 10**6


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(range(1, m + 1))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], degree: int) -> "Permutation":
        images = list(range(1, degree + 1))
        seen = set()
        for cyc in cycles:
            for k, a in enumerate(cyc):
                if not 1 <= a <= degree or a in seen:
                    raise ValueError(f"bad cycle entry {a}")
                seen.add(a)
                images[a - 1] = cyc[(k + 1) % len(cyc)]
        return cls(images)

    @classmethod
    def from_array0(cls, arr) -> "Permutation":
        return cls(int(x) + 1 for x in arr)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def __str__(self):
        return "[" + ",".join(map(str, self.images)) + "]"

    def array0(self) -> np.ndarray:
        return np.asarray(self.images, dtype=np.int64) - 1

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest point, fixed points included."""
        seen = [False] * (self.degree + 1)
        out = []
        for start in range(1, self.degree + 1):
            if seen[start]:
                continue
            cyc = []
            j = start
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.images[j - 1]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial)


def _check_degree(p: Permutation, q: Permutation) -> None:
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    _check_degree(p, q)
    pi = p.images
    return Permutation(tuple(pi[j - 1] for j in q.images))


def inverse(p: Permutation) -> Permutation:
    out = [0] * p.degree
    for i, j in enumerate(p.images, start=1):
        out[j - 1] = i
    return Permutation(out)


def conjugate(p: Permutation, g: Permutation) -> Permutation:
    """g o p o g^-1."""
    _check_degree(p, g)
    return compose(compose(g, p), inverse(g))


def cycle_type(p: Permutation) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in p.cycles()), reverse=True))


def num_cycles(p: Permutation) -> int:
    return len(p.cycles())


def base_pairing(n: int) -> Permutation:
    """The fixed pairing (1 2)(3 4)...(2n-1 2n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    images = []
    for k in range(n):
        images += [2 * k + 2, 2 * k + 1]
    return Permutation(images)


def tilde(p: Permutation) -> Permutation:
    """p^-1 o xi o p: the pairing that a tuple slot actually contracts."""
    if p.degree % 2:
        raise ValueError("tilde needs an even degree")
    xi = base_pairing(p.degree // 2)
    return compose(compose(inverse(p), xi), p)


def pairings(m: int) -> Iterator[Permutation]:
    """All fixed-point-free involutions of {1..m}, lexicographic in image arrays."""
    if m % 2:
        raise ValueError("pairings need an even number of points")

    def rec(free):
        if not free:
            yield []
            return
        a = free[0]
        for k in range(1, len(free)):
            b = free[k]
            for rest in rec(free[1:k] + free[k + 1:]):
                yield [(a, b)] + rest

    found = []
    for pairs in rec(list(range(1, m + 1))):
        images = [0] * m
        for a, b in pairs:
            images[a - 1], images[b - 1] = b, a
        found.append(tuple(images))
    for images in sorted(found):
        yield Permutation(images)


def wreath_elements(n: int, budget: int = WREATH_BUDGET) -> Iterator[Permutation]:
    """S_n[S_2] realized as the centralizer of ``base_pairing(n)`` in S_2n.

    Every element permutes the blocks {2k-1, 2k} among themselves, optionally
    swapping inside each block.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    order = 2**n * math.factorial(n)
    if order > budget:
        raise BudgetExceeded(f"|S_{n}[S_2]| = {order} exceeds budget {budget}")
    found = []
    for blocks in itertools.permutations(range(n)):
        for flips in itertools.product((0, 1), repeat=n):
            images = [0] * (2 * n)
            for k, (b, f) in enumerate(zip(blocks, flips)):
                images[2 * k] = 2 * b + 1 + f
                images[2 * k + 1] = 2 * b + 2 - f
            found.append(tuple(images))
    for images in sorted(found):
        yield Permutation(images)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int | None = None) -> Permutation:
    """Parse ``[2,1,4,3]`` or ``(1 2)(3 4)``; cycle strings need ``degree``
    unless every point appears."""
    text = text.strip()
    if text.startswith("["):
        body = text.strip("[]").strip()
        images = [int(x) for x in re.split(r"[,\s]+", body) if x]
        p = Permutation(images)
        if degree is not None and p.degree != degree:
            raise ValueError(f"expected degree {degree}, got {p.degree}")
        return p
    if text.startswith("("):
        cycles = []
        for body in _CYCLE_RE.findall(text):
            entries = [int(x) for x in re.split(r"[,\s]+", body.strip()) if x]
            if entries:
                cycles.append(entries)
        if _CYCLE_RE.sub("", text).strip():
            raise ValueError(f"malformed cycle string {text!r}")
        top = max((max(c) for c in cycles), default=0)
        if degree is None:
            degree = top
        if top > degree:
            raise ValueError(f"cycle entry {top} exceeds degree {degree}")
        return Permutation.from_cycles(cycles, degree)
    raise ValueError(f"cannot parse permutation {text!r}")


# --- bulk 0-based helpers -------------------------------------------------

_TABLES: dict[int, np.ndarray] = {}


def perm_table(m: int) -> np.ndarray:
    """All of S_m as a (m!, m) array of 0-based images, lexicographic."""
    if m not in _TABLES:
        if m > 10:
            raise BudgetExceeded(f"refusing to tabulate S_{m}")
        arr = np.array(list(itertools.permutations(range(m))), dtype=np.int64)
        arr = arr.reshape(math.factorial(m), m)
        arr.setflags(write=False)
        _TABLES[m] = arr
    return _TABLES[m]


def rank(arr) -> np.ndarray:
    """Lexicographic index of each 0-based permutation row (Lehmer code)."""
    a = np.atleast_2d(np.asarray(arr, dtype=np.int64))
    m = a.shape[1]
    out = np.zeros(a.shape[0], dtype=np.int64)
    for i in range(m):
        smaller_after = (a[:, i + 1:] < a[:, i:i + 1]).sum(axis=1)
        out += smaller_after * math.factorial(m - 1 - i)
    return out


def rank_of(p: Permutation) -> int:
    return int(rank(p.array0())[0])


_MUL: dict[int, np.ndarray] = {}


def mul_table(m: int) -> np.ndarray:
    """``mul[a, b] = rank(perm[a] o perm[b])`` over S_m."""
    if m not in _MUL:
        if m > 6:
            raise BudgetExceeded(f"multiplication table of S_{m} too large")
        t = perm_table(m)
        # comp[a, b, i] = t[a, t[b, i]]
        comp = t[np.arange(len(t))[:, None, None], t[None, :, :]]
        tab = rank(comp.reshape(-1, m)).reshape(len(t), len(t))
        tab.setflags(write=False)
        _MUL[m] = tab
    return _MUL[m]


def inverse_ranks(m: int) -> np.ndarray:
    t = perm_table(m)
    inv = np.empty_like(t)
    rows = np.arange(len(t))[:, None]
    inv[rows, t] = np.arange(m)[None, :]
    return rank(inv)


def wreath_ranks(n: int) -> np.ndarray:
    """Lexicographic ranks, inside S_2n, of the elements of S_n[S_2]."""
    arr = np.array([p.images for p in wreath_elements(n)], dtype=np.int64) - 1
    return rank(arr)
