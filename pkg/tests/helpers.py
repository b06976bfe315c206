"""Shared strategies and enumeration helpers for the test suite."""

from hypothesis import strategies as st

from rimhom import Rim, all_rims, peak_count


def rim_pairs_upto(max_n):
    """All ordered pairs of k-subset rims sharing (n, k), n from 2 to max_n."""
    for n in range(2, max_n + 1):
        for k in range(1, n):
            rims = list(all_rims(n, k))
            for a in rims:
                for b in rims:
                    yield a, b


@st.composite
def rims(draw, min_n=2, max_n=12):
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(1, n - 1))
    members = draw(st.sets(st.integers(1, n), min_size=k, max_size=k))
    return Rim(n, frozenset(members))


def multi_peak_rims(min_n=4, max_n=12):
    return rims(min_n, max_n).filter(lambda r: peak_count(r) >= 2)


@st.composite
def rim_pairs(draw, min_n=2, max_n=12):
    a = draw(rims(min_n, max_n))
    members = draw(st.sets(st.integers(1, a.n), min_size=a.k, max_size=a.k))
    return a, Rim(a.n, frozenset(members))


def positive_box_sequences():
    pair = st.tuples(st.integers(1, 6), st.integers(1, 6))
    return st.lists(pair, min_size=1, max_size=6).map(tuple)
