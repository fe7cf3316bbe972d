from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import inverse_mod_bruteforce

from billiard.errors import FieldMismatchError, ParseError
from billiard.field import QQ, FieldSpec, Scalar, is_prime, scalar_arith, scalar_parse

GF7 = FieldSpec.gf(7)
PRIMES = [2, 3, 5, 7, 13, 101, 65537, 2**61 - 1]


def test_parse_reduces():
    x = scalar_parse("3/6", QQ)
    assert x.value == Fraction(1, 2)
    assert str(x) == "1/2"


def test_parse_negative_residue():
    assert scalar_parse("-4", GF7).value == 3


def test_parse_inverts_denominator_mod_p():
    expected = inverse_mod_bruteforce(3, 7)
    assert expected == 5
    assert scalar_parse("1/3", GF7).value == expected


@pytest.mark.parametrize("text", ["", "abc", "1/", "/2", "1.5", "1/2/3", "0x10"])
def test_parse_rejects_malformed(text):
    with pytest.raises(ParseError):
        scalar_parse(text, QQ)


def test_parse_rejects_zero_denominator():
    with pytest.raises(ParseError):
        scalar_parse("1/0", QQ)
    with pytest.raises(ParseError, match="not representable"):
        scalar_parse("1/14", GF7)


def test_parse_accepts_unicode_minus_and_signed_denominator():
    assert scalar_parse("−3/7", QQ) == Fraction(-3, 7)
    assert scalar_parse("3/-6", QQ) == Fraction(-1, 2)


def test_arith_examples():
    half, third = QQ("1/2"), QQ("1/3")
    assert scalar_arith(half, third, "add") == QQ("5/6")
    assert scalar_arith(QQ(2), QQ(0) - QQ(2), "div") == -1
    with pytest.raises(ZeroDivisionError):
        scalar_arith(half, QQ(0), "div")
    with pytest.raises(ValueError):
        scalar_arith(half, half, "pow")


def test_mixing_fields_is_rejected():
    with pytest.raises(FieldMismatchError):
        QQ(1) + GF7(1)
    with pytest.raises(FieldMismatchError):
        scalar_arith(QQ(1), GF7(1), "mul")
    assert QQ(1) != GF7(1)


def test_field_spec_validation():
    with pytest.raises(ValueError):
        FieldSpec.gf(9)
    with pytest.raises(ValueError):
        FieldSpec("rational", 5)
    with pytest.raises(ValueError):
        FieldSpec("complex")
    assert FieldSpec.from_flag("gfp:11") == FieldSpec.gf(11)
    assert FieldSpec.from_flag("rational") == QQ
    with pytest.raises(ParseError):
        FieldSpec.from_flag("gfp:12")
    assert FieldSpec.from_json(FieldSpec.gf(13).to_json()) == FieldSpec.gf(13)


def test_is_prime_against_trial_division():
    def trial(n):
        return n >= 2 and all(n % k for k in range(2, int(n**0.5) + 1))

    assert [n for n in range(2000) if is_prime(n)] == [n for n in range(2000) if trial(n)]
    assert is_prime(2**61 - 1) and not is_prime(2**61 + 1)


def test_scalar_is_immutable_and_hashable():
    x = QQ("2/3")
    with pytest.raises(AttributeError):
        x.value = 1
    assert len({QQ("2/3"), QQ("4/6"), GF7(2)}) == 2


def test_power_and_inverse():
    assert QQ(2) ** -3 == QQ("1/8")
    assert GF7(3) ** 6 == 1
    assert GF7(3).inverse() * 3 == 1
    with pytest.raises(ZeroDivisionError):
        GF7(0).inverse()


rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x.numerator) < 10**6)


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    x, y, z = QQ(a), QQ(b), QQ(c)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x - x == 0
    if x:
        assert x * x.inverse() == 1
        assert (y / x) * x == y


@st.composite
def prime_and_residues(draw):
    p = draw(st.sampled_from(PRIMES))
    xs = draw(st.lists(st.integers(-(10**20), 10**20), min_size=3, max_size=3))
    return p, xs


@given(prime_and_residues())
def test_prime_field_axioms_and_agreement_with_integers(data):
    p, (a, b, c) = data
    f = FieldSpec.gf(p)
    x, y, z = f(a), f(b), f(c)
    assert 0 <= x.value < p
    assert (x + y).value == (a + b) % p
    assert (x - y).value == (a - b) % p
    assert (x * y).value == (a * b) % p
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    if x:
        assert x * x.inverse() == 1


@given(st.integers(-(10**9), 10**9), st.integers(1, 10**9))
def test_rational_normalization_is_idempotent(n, d):
    once = QQ.parse(f"{n}/{d}")
    twice = QQ.parse(str(once))
    assert once == twice and str(once) == str(twice)
    assert once.value.denominator > 0
    assert Fraction(once.value.numerator, once.value.denominator) == Fraction(n, d)


def test_constructor_coerces():
    assert Scalar(Fraction(6, 4)) == QQ("3/2")
    assert Scalar(10, GF7) == 3
