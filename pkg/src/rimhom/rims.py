"""Cyclic rims: k-subsets of {1..n} encoding rank-1 Cohen-Macaulay modules.

A rim is a k-element subset I of the cyclic label set {1..n}; vertex 0 and
vertex n are the same point.  Reading label i as the lattice edge from
vertex i-1 to vertex i, membership in I means a down-step and absence an
up-step, so I determines a closed zig-zag path (the rim of the module).
Every cyclic interval count in the package goes through CyclicEdgeInterval
so the convention lives in exactly one place.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator


def reduce_label(n: int, x: int) -> int:
    """Reduce an integer to its representative in {1..n}."""
    return (x - 1) % n + 1


@dataclass(frozen=True)
class CyclicEdgeInterval:
    """Cyclic interval (start, stop] realised as the edge set {start+1..stop}.

    Labels reduce mod n into {1..n}.  start == stop (mod n) gives the empty
    interval, never the full circle.
    """

    n: int
    start: int
    stop: int

    def __len__(self) -> int:
        return (self.stop - self.start) % self.n

    def edges(self) -> tuple[int, ...]:
        return tuple(
            reduce_label(self.n, self.start + i) for i in range(1, len(self) + 1)
        )

    def __iter__(self) -> Iterator[int]:
        return iter(self.edges())

    def __contains__(self, edge: int) -> bool:
        return 0 < (edge - self.start) % self.n <= len(self)

    def count_in(self, members: frozenset[int]) -> int:
        """Number of interval edges that belong to members."""
        return sum(1 for e in self if e in members)

    def count_not_in(self, members: frozenset[int]) -> int:
        return len(self) - self.count_in(members)


@dataclass(frozen=True)
class Rim:
    """A k-subset of {1..n} with 1 <= k <= n-1 (down-edge set of a cyclic path)."""

    n: int
    elements: frozenset[int]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"n must be an integer >= 2, got {self.n!r}")
        object.__setattr__(self, "elements", frozenset(self.elements))
        bad = sorted(x for x in self.elements if not 1 <= x <= self.n)
        if bad:
            raise ValueError(f"rim elements must lie in 1..{self.n}, got {bad}")
        if not 1 <= len(self.elements) <= self.n - 1:
            raise ValueError(
                f"rim must have between 1 and {self.n - 1} elements, "
                f"got {len(self.elements)}"
            )

    @property
    def k(self) -> int:
        return len(self.elements)

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements))

    def __contains__(self, label: int) -> bool:
        return label in self.elements


@dataclass(frozen=True)
class HeightProfile:
    """Vertex heights h(0..n): h(0) = 0, down-step at each rim edge, up otherwise."""

    heights: tuple[int, ...]

    def __getitem__(self, vertex: int) -> int:
        return self.heights[vertex]

    def max(self) -> int:
        return max(self.heights)

    def min(self) -> int:
        return min(self.heights)


@dataclass(frozen=True)
class SegmentDecomposition:
    """Maximal runs of a rim (segments) and the gaps after them, in cyclic order.

    The first segment is the one starting right after the largest valley, so
    the cyclic data is rotation-normalised while keeping absolute starts.
    run_lengths[i] is the size of segment i, gap_lengths[i] the number of
    non-members between segment i and segment i+1.
    """

    n: int
    starts: tuple[int, ...]
    run_lengths: tuple[int, ...]
    gap_lengths: tuple[int, ...]

    @property
    def peak_count(self) -> int:
        return len(self.starts)

    @property
    def segments(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.starts, self.run_lengths))

    def rim(self) -> Rim:
        members = []
        for start, size in self.segments:
            members.extend(reduce_label(self.n, start + i) for i in range(size))
        return Rim(self.n, frozenset(members))


def peaks(rim: Rim) -> tuple[int, ...]:
    """Vertices u with u not in I and u+1 in I, in ascending order."""
    n, members = rim.n, rim.elements
    return tuple(
        u
        for u in range(1, n + 1)
        if u not in members and reduce_label(n, u + 1) in members
    )


def valleys(rim: Rim) -> tuple[int, ...]:
    """Vertices v with v in I and v+1 not in I, in ascending order."""
    n, members = rim.n, rim.elements
    return tuple(
        v
        for v in range(1, n + 1)
        if v in members and reduce_label(n, v + 1) not in members
    )


def peak_count(rim: Rim) -> int:
    return len(peaks(rim))


def is_interval(rim: Rim) -> bool:
    """Single-segment rims are exactly the projective ones."""
    return peak_count(rim) == 1


def peak_at_or_after(rim: Rim, vertex: int) -> int:
    """First peak reached scanning vertex, vertex+1, ... cyclically."""
    n, members = rim.n, rim.elements
    for step in range(n):
        x = reduce_label(n, vertex + step)
        if x not in members and reduce_label(n, x + 1) in members:
            return x
    raise ValueError("rim has no peaks")  # unreachable for valid rims


def peak_after(rim: Rim, vertex: int) -> int:
    """First peak strictly after vertex in cyclic order."""
    return peak_at_or_after(rim, reduce_label(rim.n, vertex + 1))


def peak_before(rim: Rim, vertex: int) -> int:
    """First peak strictly before vertex in cyclic order."""
    n, members = rim.n, rim.elements
    for step in range(1, n + 1):
        x = reduce_label(n, vertex - step)
        if x not in members and reduce_label(n, x + 1) in members:
            return x
    raise ValueError("rim has no peaks")


def valley_before(rim: Rim, vertex: int) -> int:
    """First valley strictly before vertex in cyclic order."""
    n, members = rim.n, rim.elements
    for step in range(1, n + 1):
        x = reduce_label(n, vertex - step)
        if x in members and reduce_label(n, x + 1) not in members:
            return x
    raise ValueError("rim has no valleys")


def shift(rim: Rim, delta: int) -> Rim:
    """Rotate every label by delta, reducing mod n."""
    return Rim(
        rim.n, frozenset(reduce_label(rim.n, x + delta) for x in rim.elements)
    )


def height_profile(rim: Rim) -> HeightProfile:
    h = [0]
    for i in range(1, rim.n + 1):
        h.append(h[-1] - 1 if i in rim.elements else h[-1] + 1)
    return HeightProfile(tuple(h))


def decompose(rim: Rim) -> SegmentDecomposition:
    n, members = rim.n, rim.elements
    anchor = max(valleys(rim))
    start = next(
        reduce_label(n, anchor + i)
        for i in range(1, n + 1)
        if reduce_label(n, anchor + i) in members
    )
    starts: list[int] = []
    runs: list[int] = []
    gaps: list[int] = []
    x = start
    remaining = rim.k
    while remaining:
        starts.append(x)
        d = 1
        while reduce_label(n, x + d) in members:
            d += 1
        runs.append(d)
        remaining -= d
        g = 1
        while reduce_label(n, x + d + g) not in members:
            g += 1
        gaps.append(g)
        x = reduce_label(n, x + d + g)
    return SegmentDecomposition(n, tuple(starts), tuple(runs), tuple(gaps))


def is_noncrossing(rim_i: Rim, rim_j: Rim) -> bool:
    """True when the two rims do not interleave (at most one mismatch box)."""
    from .trapezia import build_word  # local import avoids a module cycle

    return len(build_word(rim_i, rim_j).boxes) <= 1


def all_rims(n: int, k: int) -> Iterator[Rim]:
    """All k-subset rims of {1..n} in lexicographic order."""
    for combo in itertools.combinations(range(1, n + 1), k):
        yield Rim(n, frozenset(combo))
