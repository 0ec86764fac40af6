import itertools
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from tensor_orbit.errors import BudgetExceeded
from tensor_orbit.perm import (Permutation, base_pairing, compose, conjugate, cycle_type, inverse,
                               mul_table, num_cycles, pairings, parse_permutation, perm_table, rank,
                               rank_of, tilde, wreath_elements, wreath_ranks)

P = Permutation


@st.composite
def perms(draw, m=None):
    m = m if m is not None else draw(st.integers(1, 8))
    return P(draw(st.permutations(range(1, m + 1))))


@st.composite
def perm_pairs(draw):
    m = draw(st.integers(1, 8))
    return draw(perms(m)), draw(perms(m))


def test_compose_examples():
    assert compose(P([2, 1]), P([2, 1])) == P.identity(2)
    q = P([3, 1, 2, 4])
    assert compose(P.identity(4), q) == q
    assert compose(P([2, 3, 1]), P([2, 1, 3])) == P([3, 2, 1])


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(P([2, 1]), P([1, 2, 3]))


def test_inverse_and_conjugate_examples():
    assert inverse(P([2, 3, 1])) == P([3, 1, 2])
    t12 = parse_permutation("(1 2)", 3)
    t13 = parse_permutation("(1 3)", 3)
    assert conjugate(t12, t13) == parse_permutation("(2 3)", 3)
    assert conjugate(t12, P.identity(3)) == t12


def test_cycle_type_examples():
    assert cycle_type(P.identity(4)) == (1, 1, 1, 1) and num_cycles(P.identity(4)) == 4
    c = parse_permutation("(1 2 3)", 4)
    assert cycle_type(c) == (3, 1) and num_cycles(c) == 2
    d = parse_permutation("(1 2)(3 4)")
    assert cycle_type(d) == (2, 2) and num_cycles(d) == 2


def test_base_pairing():
    assert base_pairing(1) == P([2, 1])
    assert base_pairing(2) == P([2, 1, 4, 3])
    assert cycle_type(base_pairing(3)) == (2, 2, 2)


def test_tilde_examples():
    assert tilde(P.identity(4)) == parse_permutation("(1 2)(3 4)")
    assert tilde(P([2, 1])) == P([2, 1])
    assert tilde(parse_permutation("(2 3)", 4)) == parse_permutation("(1 3)(2 4)")
    with pytest.raises(ValueError):
        tilde(P.identity(3))


@pytest.mark.parametrize("m,count", [(2, 1), (4, 3), (6, 15), (8, 105)])
def test_pairings_count(m, count):
    ps = list(pairings(m))
    assert len(ps) == count == len(set(ps))
    assert all(cycle_type(p) == (2,) * (m // 2) for p in ps)
    assert ps == sorted(ps)


def test_pairings_odd():
    with pytest.raises(ValueError):
        list(pairings(3))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_wreath_elements(n):
    xi = base_pairing(n)
    els = list(wreath_elements(n))
    assert len(els) == len(set(els)) == 2**n * math.factorial(n)
    assert all(conjugate(xi, g) == xi for g in els)
    if n == 1:
        assert set(els) == {P([1, 2]), P([2, 1])}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_wreath_closed(n):
    els = set(wreath_elements(n))
    assert all(compose(a, b) in els for a in els for b in els)
    assert all(inverse(a) in els for a in els)


def test_wreath_budget():
    with pytest.raises(BudgetExceeded):
        list(wreath_elements(6, budget=1000))


@given(perm_pairs())
def test_conjugation_preserves_cycle_type(pq):
    p, q = pq
    assert cycle_type(conjugate(p, q)) == cycle_type(p)
    assert sum(cycle_type(p)) == p.degree


@given(perm_pairs())
def test_group_laws(pq):
    p, q = pq
    assert compose(p, inverse(p)) == P.identity(p.degree)
    assert inverse(compose(p, q)) == compose(inverse(q), inverse(p))
    assert all(compose(p, q)(i) == p(q(i)) for i in range(1, p.degree + 1))


@given(st.integers(1, 4).flatmap(lambda n: perms(2 * n)))
def test_tilde_is_pairing_and_left_wreath_invariant(s):
    n = s.degree // 2
    t = tilde(s)
    assert cycle_type(t) == (2,) * n
    if n <= 3:
        assert {tilde(compose(h, s)) for h in wreath_elements(n)} == {t}


def test_parse_round_trip():
    p = P([3, 1, 2, 5, 4])
    assert parse_permutation(str(p)) == p
    assert parse_permutation(p.cycle_string(), 5) == p
    assert parse_permutation("()", 3) == P.identity(3)
    for bad in ("(1 2", "[1,1]", "x", "(1 2)(2 3)"):
        with pytest.raises(ValueError):
            parse_permutation(bad, 3)


def test_bulk_helpers():
    t = perm_table(4)
    assert np.array_equal(rank(t), np.arange(24))
    mul = mul_table(4)
    for a, b in itertools.product(range(24), repeat=2):
        pa, pb = P.from_array0(t[a]), P.from_array0(t[b])
        assert mul[a, b] == rank_of(pa * pb)
    assert sorted(wreath_ranks(2).tolist()) == sorted(rank_of(g) for g in wreath_elements(2))


def test_immutable():
    p = P([1, 2])
    with pytest.raises(AttributeError):
        p.images = (2, 1)
