"""Polynomials in a single symbol N with exact coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping


class NPolynomial:
    """Sparse univariate polynomial ``sum c_k N^k``.

    Coefficients are ints for correlator values; dimension polynomials may
    carry Fractions. Zero coefficients are never stored.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int | Fraction] | None = None):
        c = {}
        for k, v in (coeffs or {}).items():
            if k < 0:
                raise ValueError("negative exponent")
            if v:
                if isinstance(v, Fraction) and v.denominator == 1:
                    v = int(v)
                c[int(k)] = v
        self._c = c

    @classmethod
    def constant(cls, v) -> "NPolynomial":
        return cls({0: v})

    @classmethod
    def N(cls) -> "NPolynomial":
        return cls({1: 1})

    @property
    def coeffs(self) -> dict[int, int | Fraction]:
        return dict(self._c)

    def degree(self) -> int:
        return max(self._c, default=-1)

    def __call__(self, n):
        return sum(v * n**k for k, v in self._c.items())

    def __add__(self, other):
        other = _lift(other)
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return NPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return NPolynomial({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-_lift(other))

    def __mul__(self, other):
        other = _lift(other)
        out: dict[int, int | Fraction] = {}
        for i, a in self._c.items():
            for j, b in other._c.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return NPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, k):
        return NPolynomial({e: Fraction(v) / k for e, v in self._c.items()})

    def __eq__(self, other):
        try:
            return self._c == _lift(other)._c
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        return f"NPolynomial({self._c!r})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for k in sorted(self._c, reverse=True):
            v = self._c[k]
            sign = "-" if v < 0 else "+"
            a = -v if v < 0 else v
            if k == 0:
                body = str(a)
            else:
                mono = "N" if k == 1 else f"N^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


def _lift(x) -> NPolynomial:
    if isinstance(x, NPolynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return NPolynomial.constant(x)
    raise TypeError(f"cannot combine NPolynomial with {type(x).__name__}")
