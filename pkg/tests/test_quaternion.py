"""Scalar quaternion algebra: Hamilton relations, conjugation, inversion."""


import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
import numpy as np

from qframes.quaternion import I, J, K, ONE, ZERO, Quaternion

REL_TOL = 1e-13

UNITS = {"1": ONE, "i": I, "j": J, "k": K}

# full signed multiplication table; rows multiply columns on the right
TABLE = {
    ("1", "1"): ONE, ("1", "i"): I, ("1", "j"): J, ("1", "k"): K,
    ("i", "1"): I, ("i", "i"): -ONE, ("i", "j"): K, ("i", "k"): -J,
    ("j", "1"): J, ("j", "i"): -K, ("j", "j"): -ONE, ("j", "k"): I,
    ("k", "1"): K, ("k", "i"): J, ("k", "j"): -I, ("k", "k"): -ONE,
}


def test_multiplication_table_all_signs():
    for (a, b), expected in TABLE.items():
        for sa in (1.0, -1.0):
            for sb in (1.0, -1.0):
                got = (UNITS[a] * sa) * (UNITS[b] * sb)
                want = expected * (sa * sb)
                assert got == want, f"({sa}{a})({sb}{b}) -> {got}, want {want}"


def test_noncommutativity():
    assert I * J == K
    assert J * I == -K
    assert I * J != J * I


def test_mixed_product_example():
    # (1+i)(1+j) = 1 + i + j + k: the cross term lands on +k
    assert Quaternion(1, 1, 0, 0) * Quaternion(1, 0, 1, 0) == Quaternion(1, 1, 1, 1)


def test_modulus_multiplicative_bulk():
    rng = np.random.default_rng(101)
    for _ in range(10_000):
        p = Quaternion(*rng.standard_normal(4))
        q = Quaternion(*rng.standard_normal(4))
        lhs = (p * q).modulus()
        rhs = p.modulus() * q.modulus()
        assert abs(lhs - rhs) <= REL_TOL * rhs


def test_conjugation_antihomomorphism_bulk():
    rng = np.random.default_rng(202)
    for _ in range(10_000):
        p = Quaternion(*rng.standard_normal(4))
        q = Quaternion(*rng.standard_normal(4))
        gap = (p * q).conjugate() - q.conjugate() * p.conjugate()
        assert gap.modulus() <= REL_TOL * (p.modulus() * q.modulus())


def test_conjugate_fixes_reals_negates_imaginaries():
    assert Quaternion(5).conjugate() == Quaternion(5)
    assert I.conjugate() == -I
    assert J.conjugate() == -J
    assert K.conjugate() == -K
    q = Quaternion(1, -2, 3, -4)
    assert q.conjugate() == Quaternion(1, 2, -3, 4)


def test_conjugate_times_self_is_modulus_squared():
    rng = np.random.default_rng(303)
    for _ in range(100):
        q = Quaternion(*rng.standard_normal(4))
        square = q.conjugate() * q
        assert abs(square.a0 - q.modulus() ** 2) <= REL_TOL * q.modulus() ** 2
        assert Quaternion(0, square.a1, square.a2, square.a3).modulus() \
            <= REL_TOL * q.modulus() ** 2


def test_inverse_known_value():
    q = Quaternion(1, 1, 1, 1)
    assert q.inverse() == Quaternion(0.25, -0.25, -0.25, -0.25)


def test_inverse_round_trip():
    rng = np.random.default_rng(404)
    for _ in range(1000):
        q = Quaternion(*rng.standard_normal(4))
        assert (q * q.inverse() - ONE).modulus() <= 1e-12
        assert (q.inverse() * q - ONE).modulus() <= 1e-12


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()
    with pytest.raises(ZeroDivisionError):
        Quaternion(1e-301, 0, 0, 0).inverse()
    # just above the cutoff still inverts
    Quaternion(1e-290, 0, 0, 0).inverse()


def test_complex_pair_round_trip():
    q = Quaternion(1.5, -2.25, 3.125, -4.0625)
    z1, z2 = q.to_complex_pair()
    assert z1 == complex(1.5, -2.25)
    assert z2 == complex(3.125, -4.0625)
    assert Quaternion.from_complex_pair(z1, z2) == q


def test_split_twists_complex_scalars():
    # j z = conj(z) j is the rule that makes the split representation work
    z = Quaternion(0.7, -1.3, 0, 0)
    z_conj = z.conjugate()
    assert (J * z - z_conj * J).modulus() <= 1e-15


def test_real_scalar_arithmetic():
    q = Quaternion(1, 2, 3, 4)
    assert 2 * q == q * 2 == Quaternion(2, 4, 6, 8)
    assert q / 2 == Quaternion(0.5, 1, 1.5, 2)
    assert q + 1 == Quaternion(2, 2, 3, 4)
    assert 1 - q == Quaternion(0, -2, -3, -4)


def test_str_rendering():
    assert str(Quaternion(1, 1, 1, 1)) == "1 + i + j + k"
    assert str(ZERO) == "0"
    assert str(-I) == "-i"


finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False)
quaternions = st.builds(Quaternion, finite, finite, finite, finite)


@settings(max_examples=200)
@given(quaternions, quaternions, quaternions)
def test_associativity(p, q, r):
    lhs = (p * q) * r
    rhs = p * (q * r)
    scale = p.modulus() * q.modulus() * r.modulus() + 1.0
    assert (lhs - rhs).modulus() <= 1e-12 * scale


@settings(max_examples=200)
@given(quaternions, quaternions, quaternions)
def test_right_distributivity(p, q, r):
    lhs = (p + q) * r
    rhs = p * r + q * r
    scale = (p.modulus() + q.modulus()) * r.modulus() + 1.0
    assert (lhs - rhs).modulus() <= 1e-12 * scale
