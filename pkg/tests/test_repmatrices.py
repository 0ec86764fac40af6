import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tensor_orbit.characters import character
from tensor_orbit.errors import BudgetExceeded
from tensor_orbit.kernels import cycle_counts
from tensor_orbit.partitions import dim_sn, f_poly, is_even_partition, partitions_of
from tensor_orbit.perm import Permutation, cycle_type, inverse, parse_permutation, perm_table
from tensor_orbit.repmatrices import (adjacent_factorization, branching_projector, rep_matrix,
                                      standard_tableaux, trivial_branching)


def _is_standard(T):
    rows_ok = all(row[i] < row[i + 1] for row in T for i in range(len(row) - 1))
    cols_ok = all(T[i][j] < T[i + 1][j] for i in range(len(T) - 1) for j in range(len(T[i + 1])))
    return rows_ok and cols_ok


def test_tableaux_examples():
    assert len(standard_tableaux((2, 1))) == 2
    assert standard_tableaux((5,)) == [((1, 2, 3, 4, 5),)]
    assert len(standard_tableaux((2, 2))) == 2
    # last-letter order: the tableau with m in the top row comes first
    assert standard_tableaux((2, 1)) == [((1, 3), (2,)), ((1, 2), (3,))]


@pytest.mark.parametrize("m", range(1, 8))
def test_tableaux_are_standard(m):
    for R in partitions_of(m):
        tabs = standard_tableaux(R)
        assert len(tabs) == len(set(tabs)) == dim_sn(R)
        assert all(_is_standard(T) and tuple(map(len, T)) == R for T in tabs)


def test_rep_examples():
    assert np.array_equal(rep_matrix((2, 1), Permutation.identity(3)), np.eye(2))
    assert rep_matrix((1, 1), Permutation([2, 1])).tolist() == [[-1.0]]
    assert np.trace(rep_matrix((2, 1), parse_permutation("(1 2 3)"))) == pytest.approx(-1)
    with pytest.raises(ValueError):
        rep_matrix((2, 1), Permutation.identity(4))


@given(st.integers(1, 7).flatmap(lambda m: st.permutations(range(1, m + 1))))
def test_factorization(images):
    s = Permutation(images)
    word = adjacent_factorization(s)
    p = Permutation.identity(s.degree)
    for i in word:
        p = Permutation.from_cycles([(i, i + 1)], s.degree) * p
    assert p == s
    inversions = sum(1 for a in range(len(images)) for b in range(a + 1, len(images)) if images[a] > images[b])
    assert len(word) == inversions


@settings(max_examples=60)
@given(st.integers(2, 7).flatmap(lambda m: st.tuples(
    st.sampled_from(list(partitions_of(m))), st.permutations(range(1, m + 1)), st.permutations(range(1, m + 1)))))
def test_homomorphism(args):
    R, a, b = args
    a, b = Permutation(a), Permutation(b)
    assert np.allclose(rep_matrix(R, a * b), rep_matrix(R, a) @ rep_matrix(R, b), atol=1e-10)
    assert np.allclose(rep_matrix(R, inverse(a)), rep_matrix(R, a).T, atol=1e-10)


@pytest.mark.parametrize("m", range(1, 6))
def test_traces_and_orthogonality(m):
    els = [Permutation.from_array0(r) for r in perm_table(m)]
    mats = {R: np.array([rep_matrix(R, s) for s in els]) for R in partitions_of(m)}
    for R, D in mats.items():
        eye = np.eye(D.shape[1])
        assert all(np.abs(X.T @ X - eye).max() < 1e-10 for X in D)
        traces = np.trace(D, axis1=1, axis2=2)
        chars = [character(R, cycle_type(s)) for s in els]
        assert np.abs(traces - chars).max() < 1e-6
    fact = math.factorial(m)
    for R, DR in mats.items():
        for S, DS in mats.items():
            gram = np.einsum("gij,gkl->ijkl", DR, DS)
            if R != S:
                assert np.abs(gram).max() < 1e-8
            else:
                dim = DR.shape[1]
                expected = np.einsum("ik,jl->ijkl", np.eye(dim), np.eye(dim)) * fact / dim
                assert np.abs(gram - expected).max() < 1e-8


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("N", [2, 3])
def test_weighted_sum_is_scalar(m, N):
    table = perm_table(m)
    weights = N ** cycle_counts(table).astype(float)
    els = [Permutation.from_array0(r) for r in table]
    for R in partitions_of(m):
        total = sum(w * rep_matrix(R, s) for w, s in zip(weights, els))
        assert np.abs(total - f_poly(R, N) * np.eye(len(total))).max() < 1e-6


def test_branching_examples():
    B, tr = trivial_branching((4,))
    assert B.tolist() == [1.0] and tr == pytest.approx(1)
    B, tr = trivial_branching((3, 1))
    assert B is None and abs(tr) < 1e-6
    B, tr = trivial_branching((2, 2))
    assert B is not None and abs(tr - 1) < 1e-6


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_projector_trace_detects_even(n):
    for R in partitions_of(2 * n):
        P = branching_projector(R)
        assert np.abs(P - P.T).max() < 1e-8
        assert np.abs(P @ P - P).max() < 1e-8
        B, tr = trivial_branching(R)
        assert abs(tr - is_even_partition(R)) < 1e-6
        if B is not None:
            assert abs(np.linalg.norm(B) - 1) < 1e-10
            assert B[np.flatnonzero(np.abs(B) > 1e-9)[0]] > 0
            assert np.abs(np.outer(B, B) - P).max() < 1e-8


def test_branching_limits():
    with pytest.raises(ValueError):
        branching_projector((2, 1))
    with pytest.raises(BudgetExceeded):
        branching_projector((10,))
