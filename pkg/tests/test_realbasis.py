import random

import pytest

from torunits.cyclotomic import CycInt, real_trace
from torunits.numtheory import basis_exponents, euler_phi, moebius, near_zero_part
from torunits.realbasis import (
    DecompositionError,
    RealCoords,
    basis_change_det,
    basis_coeff,
    basis_indices,
    decompose,
    decompose_combination,
    recompose,
)


def test_basis_indices_examples():
    assert basis_indices(15) == (1, 2, 4, 7)
    assert basis_indices(9) == (2, 3, 4)
    assert len(basis_indices(45)) == 12
    with pytest.raises(ValueError):
        basis_indices(10)


def test_basis_indices_sizes():
    for n in range(3, 106, 2):
        assert len(basis_indices(n)) == euler_phi(n) // 2


def test_basis_coeff_examples():
    assert basis_coeff(15, 2, 3) == -1
    assert basis_coeff(15, 1, 1) == 1
    # real_trace(45, 5) has near-zero part 5 and coefficient -1 exactly
    # at the basis indices congruent to +-5 mod 9
    assert near_zero_part(45, 5) == 5
    for b in basis_indices(45):
        want = -1 if b % 9 in (4, 5) else 0
        assert basis_coeff(45, b, 5) == want


def test_basis_coeff_rejects_non_basis_index():
    with pytest.raises(ValueError):
        basis_coeff(15, 3, 1)
    with pytest.raises(ValueError):
        basis_coeff(45, 5, 5)


def test_decompose_examples():
    x = real_trace(15, 1) + real_trace(15, 2) + real_trace(15, 3)
    assert decompose(x).coords == {1: 1, 2: 0, 4: 0, 7: -1}
    assert decompose(CycInt.integer(15, 2)).coords == {1: 2, 2: 2, 4: 2, 7: 2}
    assert decompose(CycInt.zero(15)).coords == {1: 0, 2: 0, 4: 0, 7: 0}


def test_decompose_combination_agrees_with_solver():
    rng = random.Random(31)
    for n in (9, 15, 21, 45, 75):
        for _ in range(10):
            terms = {rng.randrange(n): rng.randint(-4, 4) for _ in range(5)}
            elem = CycInt.zero(n)
            for i, c in terms.items():
                elem = elem + c * real_trace(n, i)
            fast = decompose_combination(n, terms)
            assert decompose(elem).coords == fast.coords
            assert recompose(fast) == elem


def test_decompose_rejects_non_real():
    with pytest.raises(ValueError):
        decompose(CycInt.root(15))


def test_recompose_round_trips():
    assert recompose(decompose(real_trace(15, 7))) == real_trace(15, 7)
    zero = RealCoords(15, {b: 0 for b in basis_indices(15)})
    assert recompose(zero).is_zero()
    x = real_trace(15, 1) + real_trace(15, 2) + real_trace(15, 3)
    assert recompose(decompose(x)) == x


def test_coords_round_trip_on_basis():
    for n in (9, 15, 33, 45):
        for b in basis_indices(n):
            coords = decompose(real_trace(n, b)).coords
            assert coords == {c: (1 if c == b else 0) for c in basis_indices(n)}


def test_change_of_basis_det_is_unimodular_sample():
    for n in (9, 15, 21, 25, 45, 63, 75):
        assert basis_change_det(n) in (1, -1), n


def test_expansion_identity_sample():
    # zeta^i = moebius(g) * sum of zeta^b over basis exponents b = i mod n/g
    for n in (9, 15, 45, 75):
        for i in range(n):
            g = near_zero_part(n, i)
            acc = [0] * n
            for b in basis_exponents(n):
                if (b - i) % (n // g) == 0:
                    acc[b] += 1
            assert CycInt.root(n, i) == moebius(g) * CycInt(n, acc)


def test_real_coords_validation():
    with pytest.raises(ValueError):
        RealCoords(15, {1: 1, 2: 0})  # missing indices
    with pytest.raises(ValueError):
        RealCoords(15, {1: 1, 2: 0, 4: 0, 7: 0, 3: 5})  # foreign index


def test_formula_vs_oracle_all_indices_small():
    for n in (9, 15, 21, 45):
        idx = basis_indices(n)
        for i in range(n):
            oracle = decompose(real_trace(n, i))
            for b in idx:
                assert oracle[b] == basis_coeff(n, b, i), (n, b, i)


def test_decomposition_error_type():
    assert issubclass(DecompositionError, ArithmeticError)
