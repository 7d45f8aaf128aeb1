import math

import pytest
from hypothesis import given, strategies as st

from vaguesets import (
    ConstraintViolation,
    InvalidHedge,
    Universe,
    VagueCurve,
    VagueSet,
    VagueValue,
)

U = Universe(0, 80)


# --- construction and span ---------------------------------------------------


def test_valid_pair_and_span():
    v = VagueValue(0.7, 0.2)
    assert v.span == (0.7, pytest.approx(0.8))


def test_sum_above_one_rejected():
    with pytest.raises(ConstraintViolation):
        VagueValue(0.6, 0.6)


def test_total_ignorance_spans_unit_interval():
    assert VagueValue(0.0, 0.0).span == (0.0, 1.0)


def test_out_of_range_component_rejected():
    with pytest.raises(ConstraintViolation):
        VagueValue(-0.1, 0.2)
    with pytest.raises(ConstraintViolation):
        VagueValue(0.2, 1.1)
    with pytest.raises(ConstraintViolation):
        VagueValue(float("nan"), 0.0)


def test_rounding_noise_is_clamped():
    v = VagueValue(0.7, 0.3 + 5e-13)
    assert v.t + v.f <= 1.0


def test_span_examples():
    assert VagueValue(0.3, 0.5).span == (0.3, 0.5)
    lo, hi = VagueValue(0.4, 0.6).span
    assert lo == hi == pytest.approx(0.4)


# --- connectives -------------------------------------------------------------


def test_and_is_min_truth_max_false():
    assert VagueValue(0.7, 0.2) & VagueValue(0.3, 0.5) == VagueValue(0.3, 0.5)


def test_and_idempotent_and_identity():
    v = VagueValue(0.4, 0.3)
    assert v & v == v
    assert v & VagueValue(1.0, 0.0) == v


def test_or_is_max_truth_min_false():
    assert VagueValue(0.7, 0.2) | VagueValue(0.3, 0.5) == VagueValue(0.7, 0.2)


def test_or_idempotent_and_identity():
    v = VagueValue(0.4, 0.3)
    assert v | v == v
    assert v | VagueValue(0.0, 1.0) == v


def test_not_swaps_components():
    assert ~VagueValue(0.7, 0.2) == VagueValue(0.2, 0.7)
    v = VagueValue(0.4, 0.3)
    assert ~~v == v
    assert ~VagueValue(0.5, 0.5) == VagueValue(0.5, 0.5)


# --- hedges -------------------------------------------------------------------


def test_very_squares_both_bounds():
    assert VagueValue(0.5, 0.5).hedge(2) == VagueValue(0.25, 0.75)


def test_exponent_one_is_identity():
    v = VagueValue(0.3, 0.2)
    assert v.hedge(1) == v


def test_more_or_less_takes_square_roots():
    # Oracle by hand: sqrt(0.25) = 0.5 and 1 - sqrt(1 - 0.75) = 0.5.
    assert VagueValue(0.25, 0.75).hedge(0.5) == VagueValue(0.5, 0.5)


def test_bad_exponent_rejected():
    v = VagueValue(0.3, 0.2)
    for exponent in (0, -1, float("nan")):
        with pytest.raises(InvalidHedge):
            v.hedge(exponent)


# --- properties ---------------------------------------------------------------


@st.composite
def vague_values(draw):
    t = draw(st.floats(0, 1, allow_nan=False))
    f = draw(st.floats(0, 1, allow_nan=False)) * (1 - t)
    return VagueValue(t, f)


@given(vague_values(), vague_values())
def test_operations_preserve_constraint(a, b):
    for v in (a & b, a | b, ~a, a.hedge(2), a.hedge(0.5), a.hedge(3)):
        assert v.t + v.f <= 1 + 1e-12
        assert -1e-12 <= v.t <= 1 + 1e-12
        assert -1e-12 <= v.f <= 1 + 1e-12


@given(vague_values(), vague_values())
def test_de_morgan_exact(a, b):
    assert ~(a & b) == (~a | ~b)
    assert ~(a | b) == (~a & ~b)


@given(vague_values(), vague_values())
def test_span_monotone_under_and(a, b):
    lo, hi = (a & b).span
    assert lo == min(a.span[0], b.span[0])
    assert hi == min(a.span[1], b.span[1])


@given(vague_values())
def test_hedge_preserves_span_order(v):
    for exponent in (0.5, 2, 3):
        lo, hi = v.hedge(exponent).span
        assert lo <= hi + 1e-12


# --- vague sets ----------------------------------------------------------------


def test_vague_set_lookup():
    animals = VagueSet(
        {"DOG": VagueValue(0.7, 0.2), "CAT": VagueValue(0.3, 0.5)}
    )
    assert animals.elements == ("DOG", "CAT")
    assert animals["DOG"].span == (0.7, pytest.approx(0.8))
    assert "CAT" in animals and len(animals) == 2


def test_vague_set_rejects_anonymous_elements():
    with pytest.raises(ValueError):
        VagueSet({"": VagueValue(0.1, 0.1)})


# --- curves ---------------------------------------------------------------------


def constant(v):
    return VagueCurve.constant(U, v)


def test_constant_curves_reduce_to_scalar_case():
    a, b = VagueValue(0.7, 0.2), VagueValue(0.3, 0.5)
    assert (constant(a) & constant(b)).value_at(40) == (a & b)
    assert (constant(a) | constant(b)).value_at(40) == (a | b)
    assert (~constant(a)).value_at(40) == ~a
    assert constant(VagueValue(0.5, 0.5)).hedge(2).value_at(40) == VagueValue(0.25, 0.75)


def test_lifting_commutes_with_pointwise_evaluation():
    a = VagueCurve(U, (0, 20, 80), (VagueValue(0.2, 0.1), VagueValue(0.8, 0.1)))
    b = VagueCurve(U, (0, 50, 80), (VagueValue(0.5, 0.4), VagueValue(0.1, 0.0)))
    combined = a & b
    for omega in (0, 10, 20, 35, 50, 64, 79.5):
        assert combined.value_at(omega) == (a.value_at(omega) & b.value_at(omega))


def test_curve_breakpoints_must_span_universe():
    with pytest.raises(ValueError):
        VagueCurve(U, (0, 20), (VagueValue(0.1, 0.1), VagueValue(0.2, 0.2)))
    with pytest.raises(ValueError):
        VagueCurve(U, (5, 80), (VagueValue(0.1, 0.1),))


def test_equal_adjacent_pieces_fuse():
    v = VagueValue(0.5, 0.2)
    curve = VagueCurve(U, (0, 30, 80), (v, v))
    assert curve.breakpoints == (0, 80)
    assert curve.pieces == (v,)


def test_curve_span_steps():
    curve = VagueCurve(U, (0, 40, 80), (VagueValue(0.2, 0.3), VagueValue(0.6, 0.1)))
    assert curve.lower_step().values == (0.2, 0.6)
    assert curve.upper_step().values == (0.7, pytest.approx(0.9))


def test_curve_sampling():
    curve = constant(VagueValue(0.25, 0.25))
    samples = curve.sample(40)
    assert [omega for omega, _ in samples] == [0, 40]
    assert all(v == VagueValue(0.25, 0.25) for _, v in samples)
