import random
from fractions import Fraction

import numpy as np
import pytest

from tensor_orbit.algebra import (TensorAlgebraElement, basis_list, basis_representatives,
                                  graph_basis_element, gram_matrix, multiply, pairing, project,
                                  structure_report, unit_check)
from tensor_orbit.bruteforce import aut_order, gauge_transform
from tensor_orbit.counting import count_invariants
from tensor_orbit.perm import Permutation, perm_table, wreath_elements

I = Permutation.identity


def test_identity_element_small():
    b = graph_basis_element([I(2)] * 3)
    assert b.support_size() == 8
    assert set(b.terms().values()) == {2}
    assert 2 * b.support_size() == 2**3 * 2
    assert pairing(b, b) == 32
    assert multiply(b, b) == 16 * b


def test_coefficients_constant_on_orbit(rng):
    S4 = [Permutation.from_array0(r) for r in perm_table(4)]
    for _ in range(5):
        sigmas = [rng.choice(S4) for _ in range(3)]
        b = graph_basis_element(sigmas)
        vals = set(b.terms().values())
        assert len(vals) == 1
        coeff = vals.pop()
        assert coeff * b.support_size() == 8**3 * 24
        H = list(wreath_elements(2))
        moved = gauge_transform(sigmas, [rng.choice(H) for _ in range(3)], rng.choice(S4))
        assert graph_basis_element(moved) == b
        assert b.coefficient(moved) == coeff


@pytest.mark.parametrize("d,n", [(3, 1), (3, 2), (4, 1), (4, 2)])
def test_dimension_and_gram(d, n):
    basis = basis_list(d, n)
    assert len(basis) == count_invariants(d, n)
    gram = gram_matrix(basis)
    for i, row in enumerate(gram):
        for j, v in enumerate(row):
            assert (v > 0) if i == j else v == 0
    # closed form of the diagonal: |H|^d |G| aut
    H, G = 2**n * [1, 1, 2][n], [1, 2, 24][n]
    for b, rep in zip(basis, basis_representatives(d, n)):
        assert pairing(b, b) == H**d * G * aut_order(rep)


def test_projection_residual_nonzero_for_non_invariant():
    basis = basis_list(3, 2)
    single = TensorAlgebraElement.from_terms({(I(4), I(4), I(4)): 1}, 4, 3)
    coeffs, residual = project(single, basis)
    assert not residual.is_zero()
    # coefficient over pairing on the identity orbit is 1 / (|H|^d |G|)
    assert coeffs[0] == Fraction(1, 8**3 * 24)


def test_element_arithmetic():
    basis = basis_list(3, 2)
    a, b = basis[1], basis[2]
    s = a + Fraction(1, 3) * b
    assert s - a == Fraction(1, 3) * b
    assert (s - s).is_zero()
    assert pairing(s, b) == pairing(b, b) / 3
    assert hash(a + b) == hash(b + a)
    with pytest.raises(ValueError):
        multiply(a, basis_list(3, 1)[0])


def test_product_distributes():
    basis = basis_list(3, 2)
    a, b, c = basis[0], basis[1], basis[3]
    assert multiply(a, b + c) == multiply(a, b) + multiply(a, c)


def test_structure_report_small():
    r = structure_report(4, 1, samples=3)
    assert r["dimension"] == 1 and r["closure_all_zero"] and r["associativity_all_equal"]
    assert unit_check(3, 1)["found"] and unit_check(3, 1)["c"] == "16"


def test_unit_check_rank3_four_tensors():
    report = unit_check(3, 2)
    # recorded outcome: b_id acts on b_sigma with cross terms, so no scalar multiple is a unit
    assert report["found"] is False
    assert report["left_products"][0] == ["6144", "2048", "2048", "2048", "0"]
    assert len(report["right_products"]) == 5
