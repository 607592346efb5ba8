from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfsuper.errors import CyclotomicDivisionError, ScalarParseError
from hopfsuper.scalars import (
    CycRational,
    as_scalar,
    common_conductor,
    cyc_arith,
    field,
    roots_of_unity,
    unity_order,
    zeta,
)

CONDUCTORS = [1, 3, 4, 5, 8, 12]

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def cyc_values(conductor: int) -> st.SearchStrategy[CycRational]:
    degree = field(conductor).degree
    return st.lists(small_fractions, min_size=degree, max_size=degree).map(lambda cs: CycRational(conductor, cs))


scalars = st.sampled_from(CONDUCTORS).flatmap(cyc_values)


@given(scalars, scalars, scalars)
@settings(max_examples=60, deadline=None)
def test_field_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * 1 == a


@given(scalars)
@settings(max_examples=60, deadline=None)
def test_inverse_contract(a):
    if a.is_zero():
        with pytest.raises(CyclotomicDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == 1
        assert a / a == 1


@given(scalars)
@settings(max_examples=40, deadline=None)
def test_format_parse(a):
    assert CycRational.parse(a.format()) == a


@given(scalars, scalars)
@settings(max_examples=40, deadline=None)
def test_equal_values_hash_alike_across_conductors(a, b):
    m = common_conductor([a, b]) * 2
    assert a.promote(m) == a
    assert hash(a.promote(m)) == hash(a)


def test_zeta_basic_identities():
    assert zeta(4, 1) * zeta(4, 1) == -1
    assert zeta(3, 1) + zeta(3, 2) == -1
    assert zeta(2, 1) == -1
    assert cyc_arith(zeta(8, 1), zeta(8, 7), "mul") == 1


def test_division_inverts_multiplication():
    u = 1 - zeta(3, 1)
    assert cyc_arith(1, u, "div") * u == 1


def test_mixed_conductors_promote_to_lcm():
    v = zeta(2, 1) * zeta(3, 1)
    assert v.conductor in (3, 6)
    assert v**6 == 1
    assert v**3 == -1
    assert v == zeta(6, 5)


def test_zeta_rejects_bad_conductor():
    with pytest.raises(ValueError):
        zeta(0)


def test_unknown_operation():
    with pytest.raises(ValueError):
        cyc_arith(1, 2, "pow")  # type: ignore[arg-type]


@pytest.mark.parametrize(
    "value, order",
    [
        (CycRational.rational(-1), 2),
        (-zeta(5, 1), 10),
        (zeta(12, 1), 12),
        (zeta(8, 2), 4),
        (CycRational.one(), 1),
    ],
)
def test_unity_order(value, order):
    assert unity_order(value) == order


def test_unity_order_of_non_roots():
    assert unity_order(CycRational.rational(2)) is None
    assert unity_order(CycRational.zero()) is None
    assert unity_order(1 + zeta(4)) is None


def test_roots_of_unity():
    roots = roots_of_unity(6, 4)
    assert len(roots) == 6
    assert len(set(roots)) == 6
    assert all(r.conductor == 12 for r in roots)
    assert all(r**6 == 1 for r in roots)


def test_rational_values():
    half = CycRational.rational(Fraction(1, 2), 4)
    assert half.is_rational()
    assert half.to_fraction() == Fraction(1, 2)
    assert str(half) == "1/2"
    assert half == Fraction(1, 2)
    with pytest.raises(ValueError):
        zeta(4).to_fraction()


def test_promote_requires_multiple():
    with pytest.raises(ValueError):
        zeta(4).promote(6)
    assert zeta(4).promote(12) == zeta(4)


def test_as_scalar():
    assert as_scalar(3, 4).conductor == 4
    assert as_scalar(zeta(3), 4).conductor == 12
    with pytest.raises(TypeError):
        as_scalar(1.5)  # type: ignore[arg-type]


def test_wrong_coefficient_count():
    with pytest.raises(ValueError):
        CycRational(5, [1, 2])


@pytest.mark.parametrize(
    "text, expected",
    [
        ("3/4", CycRational.rational(Fraction(3, 4))),
        ("1*z @4", zeta(4)),
        ("-z @4", -zeta(4)),
        ("1 + 1*z @3", -zeta(3, 2)),
        ("1*z^4 @4", CycRational.one()),
    ],
)
def test_parse(text, expected):
    assert CycRational.parse(text) == expected


@pytest.mark.parametrize("text", ["", "1*z @x", "1*z @0", "1*q @4", "a + 1 @3", "1*z^k @4"])
def test_parse_errors(text):
    with pytest.raises(ScalarParseError):
        CycRational.parse(text)


def test_format_text():
    assert zeta(4).format() == "1*z @4"
    assert CycRational.rational(-2, 3).format() == "-2 @3"
    assert CycRational.zero(5).format() == "0 @5"
