import pytest
from hypothesis import given, strategies as st

from vaguesets import (
    MembershipCurve,
    RangeError,
    TNorm,
    Universe,
    curve_tconorm,
    curve_tnorm,
    tconorm_apply,
    tnorm_apply,
)

U = Universe(0, 80)
KINDS = (TNorm.MINIMUM, TNorm.PRODUCT, TNorm.LUKASIEWICZ)
unit = st.floats(0, 1, allow_nan=False)


def test_scalar_examples():
    assert tnorm_apply(TNorm.MINIMUM, 0.3, 0.7) == 0.3
    assert tnorm_apply(TNorm.PRODUCT, 0.5, 0.5) == 0.25
    assert tnorm_apply(TNorm.LUKASIEWICZ, 0.5, 0.4) == 0.0


def test_conorm_examples():
    assert tconorm_apply(TNorm.MINIMUM, 0.3, 0.7) == 0.7
    assert tconorm_apply(TNorm.PRODUCT, 0.5, 0.5) == 0.75
    assert tconorm_apply(TNorm.LUKASIEWICZ, 0.5, 0.6) == 1.0


@pytest.mark.parametrize("bad", [-0.1, 1.5, float("nan"), float("inf")])
def test_arguments_outside_unit_interval_rejected(bad):
    with pytest.raises(RangeError):
        tnorm_apply(TNorm.MINIMUM, bad, 0.5)
    with pytest.raises(RangeError):
        tconorm_apply(TNorm.PRODUCT, 0.5, bad)


def test_kind_parsing():
    assert TNorm.from_name("min") is TNorm.MINIMUM
    assert TNorm.from_name("Product") is TNorm.PRODUCT
    assert TNorm.from_name("lukasiewicz") is TNorm.LUKASIEWICZ
    with pytest.raises(ValueError):
        TNorm.from_name("hamacher")


@given(unit, unit)
def test_commutative(a, b):
    for kind in KINDS:
        assert tnorm_apply(kind, a, b) == tnorm_apply(kind, b, a)
        assert tconorm_apply(kind, a, b) == tconorm_apply(kind, b, a)


@given(unit, unit, unit)
def test_associative(a, b, c):
    for kind in KINDS:
        left = tnorm_apply(kind, tnorm_apply(kind, a, b), c)
        right = tnorm_apply(kind, a, tnorm_apply(kind, b, c))
        assert left == pytest.approx(right, abs=1e-12)


@given(unit, unit, unit)
def test_monotone(a, b, c):
    lo, hi = min(b, c), max(b, c)
    for kind in KINDS:
        assert tnorm_apply(kind, a, lo) <= tnorm_apply(kind, a, hi) + 1e-15


@given(unit)
def test_identity_and_annihilator(a):
    for kind in KINDS:
        assert tnorm_apply(kind, a, 1.0) == a
        assert tnorm_apply(kind, a, 0.0) == 0.0
        assert tconorm_apply(kind, a, 0.0) == a
        assert tconorm_apply(kind, a, 1.0) == 1.0


@given(unit, unit)
def test_ordering_lukasiewicz_product_minimum(a, b):
    luk = tnorm_apply(TNorm.LUKASIEWICZ, a, b)
    prod = tnorm_apply(TNorm.PRODUCT, a, b)
    low = tnorm_apply(TNorm.MINIMUM, a, b)
    assert luk <= prod + 1e-15 <= low + 2e-15


@given(unit, unit)
def test_duality(a, b):
    for kind in KINDS:
        dual = 1.0 - tnorm_apply(kind, 1.0 - a, 1.0 - b)
        assert tconorm_apply(kind, a, b) == pytest.approx(dual, abs=1e-12)


def test_curve_tnorm_constant_reduction():
    one_third = MembershipCurve.constant(U, 1, 3)
    two_thirds = MembershipCurve.constant(U, 2, 3)
    assert curve_tnorm(TNorm.MINIMUM, one_third, two_thirds).value_at(5) == 1 / 3
    assert curve_tnorm(TNorm.LUKASIEWICZ, one_third, two_thirds).value_at(5) == 0.0
    half = MembershipCurve.constant(U, 1, 2)
    assert curve_tnorm(TNorm.PRODUCT, half, half).value_at(5) == 0.25
    assert curve_tconorm(TNorm.PRODUCT, half, half).value_at(5) == 0.75


def test_curve_tnorm_refines_breakpoints():
    a = MembershipCurve(U, (0, 20, 80), (1, 3), 4)
    b = MembershipCurve(U, (0, 50, 80), (2, 0), 4)
    combined = curve_tnorm(TNorm.MINIMUM, a, b)
    for omega in (0, 19, 20, 49, 50, 79):
        expected = min(a.float_at(omega), b.float_at(omega))
        assert combined.value_at(omega) == expected
