"""Projective covers, syzygy rims and minimal-resolution periods."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .rims import (
    Rim,
    decompose,
    peak_after,
    peak_count,
    peaks,
    reduce_label,
    shift,
    valleys,
)


class ProjectiveModuleError(ValueError):
    """Raised when an operation needs a rim with at least two peaks."""


class NotTwoPeakError(ValueError):
    """Raised when the explicit two-peak syzygy form is applied off-domain."""


@dataclass(frozen=True)
class ProjectiveCover:
    """Indecomposable projective summands of the cover, indexed by peaks."""

    summands: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.summands)


@dataclass(frozen=True)
class PresentationMatrixD:
    """Relations of the projective cover: rows valleys, columns peaks.

    The diagonal entry (v_i, u_i) is -y^((u_i - v_i) mod n), pairing each
    valley with the peak right after it; the subdiagonal entry (v_{i+1}, u_i)
    is +x^((v_{i+1} - u_i) mod n).  Every other position vanishes, so each
    row and column has exactly two nonzero entries when there are at least
    two peaks.  degenerate marks the 1x1 single-peak case, where the cover
    is an isomorphism and the matrix carries no relation.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    entries: dict[tuple[int, int], tuple[str, int, int]]
    degenerate: bool


@dataclass(frozen=True)
class PeriodResult:
    """Either the Projective variant or a finite minimal period m >= 1."""

    projective: bool
    period: int | None

    @classmethod
    def finite(cls, m: int) -> "PeriodResult":
        return cls(False, m)

    @classmethod
    def projective_module(cls) -> "PeriodResult":
        return cls(True, None)


def projective_cover(rim: Rim) -> ProjectiveCover:
    """Cover of the rim module, one projective P_u per peak u."""
    return ProjectiveCover(peaks(rim))


def build_D(rim: Rim) -> PresentationMatrixD:
    n = rim.n
    vs = valleys(rim)
    us = tuple(peak_after(rim, v) for v in vs)
    p = len(vs)
    entries: dict[tuple[int, int], tuple[str, int, int]] = {}
    if p == 1:
        entries[(vs[0], us[0])] = ("x", 1, (vs[0] - us[0]) % n)
        return PresentationMatrixD(vs, us, entries, degenerate=True)
    for i in range(p):
        entries[(vs[i], us[i])] = ("y", -1, (us[i] - vs[i]) % n)
        v_next = vs[(i + 1) % p]
        entries[(v_next, us[i])] = ("x", 1, (v_next - us[i]) % n)
    return PresentationMatrixD(vs, us, entries, degenerate=False)


def syzygy_rim_even(rim: Rim, steps: int) -> Rim:
    """Rim of the steps-th syzygy for even steps: a rotation by (steps/2)*k."""
    if peak_count(rim) < 2:
        raise ProjectiveModuleError("projective rim has zero syzygies")
    if steps < 0 or steps % 2:
        raise ValueError(f"steps must be a nonnegative even number, got {steps}")
    return shift(rim, (steps // 2) * rim.k)


def syzygy_rim_two_peak(rim: Rim, steps: int) -> Rim:
    """Rim of the steps-th syzygy of a two-peak rim, any steps >= 0.

    Odd steps use the explicit two-segment form after rotating the first
    segment to start at 1; even steps reduce to the rotation rule.
    """
    dec = decompose(rim)
    if dec.peak_count != 2:
        raise NotTwoPeakError(f"rim has {dec.peak_count} peaks, need exactly 2")
    if steps < 0:
        raise ValueError(f"steps must be nonnegative, got {steps}")
    n, k = rim.n, rim.k
    t, odd = divmod(steps, 2)
    if not odd:
        return shift(rim, t * k)
    (d1, d2), (_, l2) = dec.run_lengths, dec.gap_lengths
    base = dec.starts[0] - 1
    first = range(1 - l2 + t * k, d1 - l2 + t * k + 1)
    second = range(d1 + 1 + t * k, d1 + d2 + t * k + 1)
    members = frozenset(
        reduce_label(n, x + base) for x in itertools.chain(first, second)
    )
    return Rim(n, members)


def _min_shift_count(n: int, k: int, residue: int) -> int | None:
    """Smallest t >= 1 with t*k = residue (mod n), None when unsolvable."""
    r = residue % n
    for t in range(1, n + 1):
        if (t * k) % n == r:
            return t
    return None


def _two_peak_period(rim: Rim) -> int:
    n, k = rim.n, rim.k
    dec = decompose(rim)
    (d1, d2), (l1, l2) = dec.run_lengths, dec.gap_lengths
    candidates = [2 * n // gcd(n, k)]
    if d1 == d2:
        t = _min_shift_count(n, k, -d1)
        if t is not None:
            candidates.append(2 * t + 1)
    if l1 == l2:
        t = _min_shift_count(n, k, l2)
        if t is not None:
            candidates.append(2 * t + 1)
    if d1 == d2 and l1 == l2:
        t = _min_shift_count(n, k, -(d1 + l1))
        if t is not None:
            candidates.append(2 * t)
    return min(candidates)


def _general_period(rim: Rim) -> int:
    n, k = rim.n, rim.k
    dec = decompose(rim)
    d, l = dec.run_lengths, dec.gap_lengths
    p = dec.peak_count
    # residues kt may hit: prefix offsets of rotations fixing the (d, l) data
    prefix = list(itertools.accumulate((d[i] + l[i] for i in range(p)), initial=0))
    residues = {
        prefix[c] % n
        for c in range(p)
        if all(d[(c + i) % p] == d[i] and l[(c + i) % p] == l[i] for i in range(p))
    }
    for t in range(1, n + 1):
        if (t * k) % n in residues:
            return 2 * t
    raise AssertionError("period search exceeded the 2n/gcd(n,k) bound")


def period_closed_form(rim: Rim) -> PeriodResult:
    """Minimal period of the resolution via the segment-data case analysis."""
    p = peak_count(rim)
    if p == 1:
        return PeriodResult.projective_module()
    if p == 2:
        return PeriodResult.finite(_two_peak_period(rim))
    return PeriodResult.finite(_general_period(rim))


def period_iterative(rim: Rim) -> PeriodResult:
    """Minimal period by direct syzygy iteration; independent of the case analysis."""
    p = peak_count(rim)
    if p == 1:
        return PeriodResult.projective_module()
    n, k = rim.n, rim.k
    bound = 2 * n // gcd(n, k)
    if p == 2:
        for m in range(1, bound + 1):
            if syzygy_rim_two_peak(rim, m) == rim:
                return PeriodResult.finite(m)
    else:
        for t in range(1, bound // 2 + 1):
            if shift(rim, t * k) == rim:
                return PeriodResult.finite(2 * t)
    raise AssertionError("period search exceeded the 2n/gcd(n,k) bound")
