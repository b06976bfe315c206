import pytest
from hypothesis import given
from hypothesis import strategies as st

from rimhom import (
    CyclicEdgeInterval,
    Rim,
    decompose,
    height_profile,
    is_interval,
    is_noncrossing,
    peak_count,
    peaks,
    shift,
    valleys,
)
from rimhom.rims import (
    peak_after,
    peak_at_or_after,
    peak_before,
    reduce_label,
    valley_before,
)

from helpers import rims

RIM_A = Rim(15, frozenset({1, 2, 4, 9, 11, 12, 14}))
RIM_B = Rim(15, frozenset({2, 4, 9, 11, 12, 14, 15}))


def test_rim_validation():
    with pytest.raises(ValueError):
        Rim(6, frozenset())
    with pytest.raises(ValueError):
        Rim(6, frozenset(range(1, 7)))
    with pytest.raises(ValueError):
        Rim(6, frozenset({0, 3}))
    with pytest.raises(ValueError):
        Rim(6, frozenset({3, 7}))
    with pytest.raises(ValueError):
        Rim(1, frozenset({1}))


def test_peaks_valleys_golden():
    assert peaks(RIM_A) == (3, 8, 10, 13, 15)
    assert valleys(RIM_A) == (2, 4, 9, 12, 14)
    assert peaks(RIM_B) == (1, 3, 8, 10, 13)
    assert valleys(RIM_B) == (2, 4, 9, 12, 15)


def test_decompose_golden():
    dec = decompose(RIM_A)
    assert dec.starts == (1, 4, 9, 11, 14)
    assert dec.run_lengths == (2, 1, 1, 2, 1)
    assert dec.gap_lengths == (1, 4, 1, 1, 1)
    assert dec.peak_count == 5
    assert dec.rim() == RIM_A


def test_height_profile_golden():
    assert height_profile(RIM_B).heights == (
        0, 1, 0, 1, 0, 1, 2, 3, 4, 3, 4, 3, 2, 3, 2, 1,
    )


def test_shift_golden():
    assert shift(Rim(6, frozenset({1, 2, 5})), 3).sorted() == (2, 4, 5)
    assert shift(Rim(6, frozenset({1, 2, 5})), 6) == Rim(6, frozenset({1, 2, 5}))
    assert shift(Rim(6, frozenset({1, 2, 5})), -1).sorted() == (1, 4, 6)


def test_interval_edges_golden():
    assert CyclicEdgeInterval(15, 15, 1).edges() == (1,)
    assert CyclicEdgeInterval(15, 4, 8).edges() == (5, 6, 7, 8)
    assert CyclicEdgeInterval(15, 13, 2).edges() == (14, 15, 1, 2)
    assert CyclicEdgeInterval(15, 6, 6).edges() == ()
    assert len(CyclicEdgeInterval(15, 6, 6)) == 0
    assert 14 in CyclicEdgeInterval(15, 13, 2)
    assert 3 not in CyclicEdgeInterval(15, 13, 2)
    assert CyclicEdgeInterval(15, 13, 2).count_in(frozenset({14, 3})) == 1


def test_neighbour_scans():
    assert peak_at_or_after(RIM_B, 1) == 1
    assert peak_at_or_after(RIM_B, 14) == 1
    assert peak_after(RIM_B, 1) == 3
    assert peak_before(RIM_B, 1) == 13
    assert valley_before(RIM_B, 1) == 15
    assert valley_before(RIM_B, 3) == 2


def test_is_interval():
    assert is_interval(Rim(6, frozenset({5, 6, 1})))
    assert not is_interval(Rim(6, frozenset({1, 3})))


def test_is_noncrossing_golden():
    assert not is_noncrossing(Rim(4, frozenset({1, 3})), Rim(4, frozenset({2, 4})))
    assert is_noncrossing(Rim(4, frozenset({1, 3})), Rim(4, frozenset({2, 3})))
    assert is_noncrossing(RIM_A, RIM_A)


@given(rims())
def test_peaks_valleys_alternate(rim):
    us, vs = peaks(rim), valleys(rim)
    assert len(us) == len(vs) >= 1
    # between consecutive peaks there is exactly one valley
    for i, u in enumerate(us):
        nxt = us[(i + 1) % len(us)]
        between = [v for v in vs if 0 < (v - u) % rim.n < ((nxt - u) % rim.n or rim.n)]
        assert len(between) == 1


@given(rims())
def test_decompose_reconstructs(rim):
    dec = decompose(rim)
    assert dec.rim() == rim
    assert sum(dec.run_lengths) == rim.k
    assert sum(dec.gap_lengths) == rim.n - rim.k
    assert dec.peak_count == peak_count(rim)


@given(rims())
def test_decompose_rotation_anchor(rim):
    dec = decompose(rim)
    anchor = max(valleys(rim))
    first = dec.starts[0]
    # no member strictly between the largest valley and the first start
    gap = CyclicEdgeInterval(rim.n, anchor, reduce_label(rim.n, first - 1))
    assert gap.count_in(rim.elements) == 0


@given(rims())
def test_height_profile_invariants(rim):
    h = height_profile(rim).heights
    assert h[0] == 0
    assert h[rim.n] == rim.n - 2 * rim.k
    assert all(h[i] % 2 == i % 2 for i in range(rim.n + 1))
    assert all(abs(h[i + 1] - h[i]) == 1 for i in range(rim.n))


@given(rims(), st.integers(-30, 30), st.integers(-30, 30))
def test_shift_composes(rim, a, b):
    assert shift(shift(rim, a), b) == shift(rim, a + b)
    assert shift(rim, 0) == rim


@given(rims(), st.integers(-30, 30))
def test_shift_equivariance(rim, d):
    moved = shift(rim, d)
    assert sorted(reduce_label(rim.n, u + d) for u in peaks(rim)) == list(peaks(moved))
    assert sorted(reduce_label(rim.n, v + d) for v in valleys(rim)) == list(valleys(moved))
