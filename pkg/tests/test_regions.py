import pytest
from hypothesis import given, strategies as st

from vaguesets import (
    Interval,
    InvalidInterval,
    OutOfUniverse,
    Region,
    Universe,
    UniverseMismatch,
    breakpoints,
    normalize,
)

U = Universe(0, 80)


def region(*pairs, u=U):
    return Region.from_pairs(pairs, u)


def parts(r):
    return [(p.lo, p.hi) for p in r.parts]


# --- construction / normalize ---------------------------------------------


def test_overlapping_inputs_merge():
    assert parts(region((10, 30), (20, 40))) == [(10, 40)]


def test_adjacent_inputs_fuse():
    assert parts(region((10, 20), (20, 30))) == [(10, 30)]


def test_empty_union_is_empty_region():
    r = region()
    assert r.is_empty and r.parts == ()


def test_zero_width_pairs_contribute_nothing():
    assert region((10, 10), (5, 5)) == Region.empty(U)


def test_inputs_clip_to_universe():
    assert parts(region((-5, 10), (70, 90))) == [(0, 10), (70, 80)]


def test_nonfinite_input_rejected():
    with pytest.raises(InvalidInterval):
        region((float("nan"), 10))
    with pytest.raises(InvalidInterval):
        region((0, float("inf")))


def test_reversed_endpoints_rejected():
    with pytest.raises(InvalidInterval):
        region((30, 10))


def test_interval_entirely_outside_universe_rejected():
    with pytest.raises(OutOfUniverse):
        region((90, 95))
    with pytest.raises(OutOfUniverse):
        region((80, 90))


def test_normalize_alias():
    assert normalize([(10, 30), (20, 40)], U) == region((10, 30), (20, 40))


def test_universe_requires_ordered_finite_bounds():
    with pytest.raises(InvalidInterval):
        Universe(10, 10)
    with pytest.raises(InvalidInterval):
        Universe(0, float("inf"))


def test_interval_invariants():
    with pytest.raises(InvalidInterval):
        Interval(5, 5)


# --- the four operations ----------------------------------------------------


def test_union_overlap():
    assert region((10, 30)) | region((20, 40)) == region((10, 40))


def test_union_identity():
    r = region((10, 30), (50, 60))
    assert r | Region.empty(U) == r


def test_union_disjoint_keeps_two_parts():
    assert parts(region((0, 10)) | region((20, 30))) == [(0, 10), (20, 30)]


def test_intersect_overlap():
    assert region((10, 30)) & region((20, 40)) == region((20, 30))


def test_intersect_disjoint_is_empty():
    assert (region((0, 10)) & region((20, 30))).is_empty


def test_intersect_idempotent():
    r = region((10, 30), (50, 60))
    assert r & r == r


def test_complement_of_interval():
    assert parts(~region((20, 30))) == [(0, 20), (30, 80)]


def test_complement_of_empty_is_full():
    assert ~Region.empty(U) == Region.full(U)


def test_double_complement():
    r = region((10, 30), (50, 60))
    assert ~~r == r


def test_symdiff_overlap():
    assert parts(region((10, 30)) ^ region((20, 40))) == [(10, 20), (30, 40)]


def test_symdiff_self_is_empty():
    r = region((10, 30))
    assert (r ^ r).is_empty


def test_symdiff_identity():
    r = region((10, 30))
    assert r ^ Region.empty(U) == r


def test_universe_mismatch_raises():
    other = Region.from_pairs([(1, 2)], Universe(0, 10))
    with pytest.raises(UniverseMismatch):
        region((10, 30)).union(other)


# --- contains ---------------------------------------------------------------


def test_contains_left_endpoint_included():
    assert region((10, 30)).contains(10)


def test_contains_right_endpoint_excluded():
    assert not region((10, 30)).contains(30)


def test_empty_contains_nothing():
    assert not Region.empty(U).contains(15)


def test_contains_operator():
    assert 12 in region((10, 30))
    assert 40 not in region((10, 30))


# --- breakpoints ------------------------------------------------------------


def test_breakpoints_single_region():
    assert breakpoints([region((10, 30))]) == (0, 10, 30, 80)


def test_breakpoints_empty_sequence_needs_universe():
    assert breakpoints([], U) == (0, 80)
    with pytest.raises(ValueError):
        breakpoints([])


def test_breakpoints_collects_all_endpoints():
    assert breakpoints([region((10, 20)), region((10, 40))]) == (0, 10, 20, 40, 80)


# --- canonicity and algebraic laws vs the bit-vector oracle -----------------

N = 24
UN = Universe(0, N)


def mask_of(r):
    m = 0
    for p in r.parts:
        m |= ((1 << int(p.hi - p.lo)) - 1) << int(p.lo)
    return m


FULL = (1 << N) - 1


@st.composite
def int_regions(draw):
    pairs = []
    for _ in range(draw(st.integers(0, 4))):
        a = draw(st.integers(0, N - 1))
        b = draw(st.integers(a + 1, N))
        pairs.append((a, b))
    return Region.from_pairs(pairs, UN)


def assert_canonical(r):
    prev_hi = None
    for p in r.parts:
        assert p.lo < p.hi
        assert UN.lo <= p.lo and p.hi <= UN.hi
        if prev_hi is not None:
            assert prev_hi < p.lo
        prev_hi = p.hi


@given(int_regions(), int_regions())
def test_ops_match_bitmask_oracle(a, b):
    assert mask_of(a | b) == mask_of(a) | mask_of(b)
    assert mask_of(a & b) == mask_of(a) & mask_of(b)
    assert mask_of(a ^ b) == mask_of(a) ^ mask_of(b)
    assert mask_of(~a) == FULL ^ mask_of(a)
    for r in (a | b, a & b, a ^ b, ~a):
        assert_canonical(r)


@given(int_regions(), int_regions(), int_regions())
def test_boolean_laws(a, b, c):
    assert a | b == b | a
    assert a & b == b & a
    assert (a | b) | c == a | (b | c)
    assert (a & b) & c == a & (b & c)
    assert a & (b | c) == (a & b) | (a & c)
    assert a | (b & c) == (a | b) & (a | c)
    assert ~(a | b) == ~a & ~b
    assert ~(a & b) == ~a | ~b
    assert a | (a & b) == a
    assert a & (a | b) == a
    assert ~~a == a


@given(int_regions(), int_regions())
def test_contains_consistent_with_ops(a, b):
    points = breakpoints([a, b], UN)
    probes = list(points[:-1])
    probes += [(points[i] + points[i + 1]) / 2 for i in range(len(points) - 1)]
    for omega in probes:
        assert (a | b).contains(omega) == (a.contains(omega) or b.contains(omega))
        assert (a & b).contains(omega) == (a.contains(omega) and b.contains(omega))
        assert (a ^ b).contains(omega) == (a.contains(omega) != b.contains(omega))
        assert (~a).contains(omega) == (not a.contains(omega))
