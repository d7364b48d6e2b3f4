import cmath
import random

import pytest

from torunits.cyclotomic import (
    CycInt,
    IntPoly,
    cyclotomic_poly,
    eval_at_root,
    rational_trace,
    real_trace,
)
from torunits.numtheory import divisors, euler_phi


def poly_remainder(num, den):
    """Independent long-division oracle on coefficient lists (monic divisor)."""
    rem = list(num)
    dd = len(den) - 1
    while len(rem) - 1 >= dd and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dd:
            break
        c = rem[-1]
        off = len(rem) - 1 - dd
        for j, dc in enumerate(den):
            rem[off + j] -= c * dc
    rem = rem[:dd]
    rem.extend([0] * (dd - len(rem)))
    return tuple(rem)


# -- cyclotomic polynomials -------------------------------------------


def test_small_cyclotomic_polys():
    assert cyclotomic_poly(1) == IntPoly((-1, 1))
    assert cyclotomic_poly(2) == IntPoly((1, 1))
    assert cyclotomic_poly(6) == IntPoly((1, -1, 1))
    assert cyclotomic_poly(15).degree == 8
    assert cyclotomic_poly(15).coeffs == (1, -1, 0, 1, -1, 1, 0, -1, 1)


def test_cyclotomic_product_identity():
    for n in range(1, 201):
        prod = IntPoly((1,))
        for d in divisors(n):
            prod = prod * cyclotomic_poly(d)
        assert prod == IntPoly.x_power_minus_one(n), n


def test_cyclotomic_is_monic_of_degree_phi():
    for n in list(range(1, 130)) + [105 * 4, 45 * 49]:
        f = cyclotomic_poly(n)
        assert f.is_monic and f.degree == euler_phi(n)


def test_cyclotomic_vanishes_at_its_root():
    for n in range(1, 201):
        assert eval_at_root(cyclotomic_poly(n), n).is_zero(), n


def test_inexact_division_raises():
    with pytest.raises(ValueError):
        IntPoly((1, 1, 1)).divide_exact(IntPoly((1, 1)))


# -- ring operations ---------------------------------------------------


def test_add_and_mul_examples():
    z = CycInt.root(5)
    assert z + z.conjugate() == real_trace(5, 1)
    assert CycInt.root(5, 2) * CycInt.root(5, 3) == CycInt.one(5)
    # 1 + z3 + z3^2 = 0
    s = CycInt.one(3) + CycInt.root(3, 1) + CycInt.root(3, 2)
    assert s.is_zero()


def test_reduce_examples():
    assert CycInt.root(3, 2).reduced == (-1, -1)
    assert CycInt.zero(9).reduced == (0,) * 6
    want = poly_remainder([0] * 14 + [1], cyclotomic_poly(15).coeffs)
    assert CycInt.root(15, 14).reduced == want


def test_eval_at_root_examples():
    assert eval_at_root(IntPoly((1, 1, 1)), 3).is_zero()
    assert eval_at_root(cyclotomic_poly(6), 3) == -2 * CycInt.root(3)
    assert eval_at_root(IntPoly((-1, 1)), 1).is_zero()


def test_mul_matches_polynomial_multiplication():
    rng = random.Random(2024)
    for n in (7, 15, 24, 45, 105):
        for _ in range(8):
            a = CycInt(n, [rng.randint(-9, 9) for _ in range(n)])
            b = CycInt(n, [rng.randint(-9, 9) for _ in range(n)])
            prod = [0] * (2 * n - 1)
            for i, ai in enumerate(a.coeffs):
                for j, bj in enumerate(b.coeffs):
                    prod[i + j] += ai * bj
            want = poly_remainder(prod, cyclotomic_poly(n).coeffs)
            assert (a * b).reduced == want


def test_galois_examples_and_homomorphism():
    assert CycInt.root(5).galois(2) == CycInt.root(5, 2)
    assert real_trace(15, 1).galois(4) == real_trace(15, 4)
    assert CycInt.one(15).galois(7) == CycInt.one(15)
    rng = random.Random(5)
    for n, s in ((15, 2), (45, 7), (21, 5)):
        a = CycInt(n, [rng.randint(-5, 5) for _ in range(n)])
        b = CycInt(n, [rng.randint(-5, 5) for _ in range(n)])
        assert (a + b).galois(s) == a.galois(s) + b.galois(s)
        assert (a * b).galois(s) == a.galois(s) * b.galois(s)
        sinv = pow(s, -1, n)
        assert a.galois(s).galois(sinv) == a


def test_galois_rejects_noninvertible():
    with pytest.raises(ValueError):
        CycInt.root(15).galois(3)


def test_real_trace_examples():
    assert real_trace(15, 0) == CycInt.integer(15, 2)
    assert real_trace(15, 3) == -real_trace(15, 2) - real_trace(15, 7)
    assert real_trace(5, 1) == CycInt.root(5, 1) + CycInt.root(5, 4)
    for n, x in ((15, 4), (45, 11), (9, 2)):
        assert real_trace(n, x) == real_trace(n, -x) == real_trace(n, x + n)
        assert real_trace(n, x).is_real()


def test_divisible_by():
    assert eval_at_root(cyclotomic_poly(6), 3).divisible_by(2)
    assert not CycInt.root(5).divisible_by(2)
    assert CycInt.zero(7).divisible_by(11)


def test_modulus_mismatch_raises():
    with pytest.raises(ValueError):
        CycInt.one(5) + CycInt.one(7)


def test_equality_is_representation_independent():
    # same element via different raw exponent vectors
    a = CycInt(3, (1, 0, 0))
    b = CycInt(3, (0, -1, -1))
    assert a == b
    assert hash(a) == hash(b)


def test_rational_trace():
    # trace of 1 is phi(n); trace of a primitive root is the moebius value
    assert rational_trace(CycInt.one(15)) == 8
    assert rational_trace(CycInt.root(15)) == 1
    assert rational_trace(CycInt.root(9)) == 0
    assert rational_trace(CycInt.root(5)) == -1
    assert rational_trace(CycInt.integer(1, 3)) == 3


def test_complex_embedding_cross_check():
    rng = random.Random(77)
    for n in (9, 15, 28, 45, 105):
        for _ in range(6):
            a = CycInt(n, [rng.randint(-100, 100) for _ in range(n)])
            w = 2j * cmath.pi / n
            raw = sum(c * cmath.exp(w * j) for j, c in enumerate(a.coeffs))
            red = sum(c * cmath.exp(w * j) for j, c in enumerate(a.reduced))
            assert abs(raw - red) <= 1e-9 * (1 + abs(raw))
