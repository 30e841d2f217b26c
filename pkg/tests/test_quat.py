from fractions import Fraction

import pytest
from hypothesis import given

from quatalg.errors import ParseError
from quatalg.quat import (I, J, K, ONE, ZERO, Quaternion, quaternion_from_json,
                          quaternion_to_json, rational_from_json,
                          rational_to_json)

from helpers import nonzero_quaternions, quaternions


def test_component_addition():
    assert Quaternion(1) + I == Quaternion(1, 1, 0, 0)


def test_additive_identity():
    q = Quaternion(Fraction(2, 3), -1, 4, Fraction(-5, 7))
    assert q + ZERO == q


def test_rational_addition():
    assert Quaternion(Fraction(1, 2)) + Quaternion(Fraction(1, 3)) == Quaternion(Fraction(5, 6))


@pytest.mark.parametrize("left, right, product", [
    (I, J, K),
    (J, K, I),
    (K, I, J),
    (J, I, -K),
    (K, J, -I),
    (I, K, -J),
    (I, I, -ONE),
    (J, J, -ONE),
    (K, K, -ONE),
])
def test_multiplication_table(left, right, product):
    assert left * right == product


def test_conjugation():
    assert (ONE + I).conjugate() == ONE - I
    assert Quaternion(5).conjugate() == Quaternion(5)
    assert (I * J).conjugate() == J.conjugate() * I.conjugate()


def test_inverse_examples():
    assert Quaternion(2).inverse() == Quaternion(Fraction(1, 2))
    assert I.inverse() == -I
    q = Quaternion(1, 1, 1, 1)
    assert q.inverse() == Quaternion(1, -1, -1, -1) / 4
    assert q * q.inverse() == ONE


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_real_scalar_division():
    assert (I + J) / 2 == Quaternion(0, Fraction(1, 2), Fraction(1, 2), 0)
    with pytest.raises(ZeroDivisionError):
        ONE / 0


@given(quaternions, quaternions, quaternions)
def test_associativity_and_distributivity(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) * r == p * r + q * r


@given(nonzero_quaternions)
def test_two_sided_inverse(q):
    assert q * q.inverse() == ONE
    assert q.inverse() * q == ONE


@given(quaternions, quaternions)
def test_conjugation_is_an_antiautomorphism(p, q):
    assert (p * q).conjugate() == q.conjugate() * p.conjugate()
    assert p.conjugate().conjugate() == p


@given(quaternions)
def test_norm_is_conjugate_product(q):
    assert q * q.conjugate() == Quaternion(q.norm2())
    assert q.norm2() >= 0


@given(quaternions, quaternions)
def test_real_quaternions_are_central(p, q):
    real = Quaternion(q.a0)
    assert real * p == p * real


def test_pretty_form():
    assert str(ZERO) == "0"
    assert str(Quaternion(3, -1, 2, 0)) == "3 - i + 2 j"
    assert str(Quaternion(0, 0, 0, Fraction(-1, 4))) == "-1/4 k"
    assert str(Quaternion(Fraction(3, 8), Fraction(1, 8))) == "3/8 + 1/8 i"


def test_json_round_trip():
    q = Quaternion(Fraction(3, 8), -1, 0, Fraction(-2, 7))
    encoded = quaternion_to_json(q)
    assert encoded == ["3/8", -1, 0, "-2/7"]
    assert quaternion_from_json(encoded) == q


@given(quaternions)
def test_json_round_trip_survives_serialization(q):
    import json
    wire = json.loads(json.dumps(quaternion_to_json(q)))
    assert quaternion_from_json(wire) == q


def test_rational_json_forms():
    assert rational_to_json(Fraction(4, 2)) == 2
    assert rational_from_json("10/4") == Fraction(5, 2)
    assert rational_from_json(-7) == Fraction(-7)


@pytest.mark.parametrize("bad", [1.5, "1.5", "1/0", "a/b", True, None, "1 /2"])
def test_rational_json_rejects_inexact_forms(bad):
    with pytest.raises(ParseError):
        rational_from_json(bad)


@pytest.mark.parametrize("bad", [[1, 2, 3], "1", [1, 2, 3, 4, 5], {"a0": 1}])
def test_quaternion_json_rejects_bad_shapes(bad):
    with pytest.raises(ParseError):
        quaternion_from_json(bad)
