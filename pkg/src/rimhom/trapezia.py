"""Mismatch words and the hom-image matrix for a pair of rims.

Lay the two rims over the same vertex line.  Edges where only the second rim
descends are left trapezia (letter L), edges where only the first descends
are right trapezia (letter R); matching edges contribute nothing.  Merging
cyclically adjacent letters of the same kind gives the word (LR)^s whose box
laterals drive the whole Ext computation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .resolution import ProjectiveModuleError
from .rims import (
    CyclicEdgeInterval,
    Rim,
    height_profile,
    peak_at_or_after,
    peak_after,
    peaks,
    valley_before,
    valleys,
)
from .snf import MonomialMatrix


class MismatchedParametersError(ValueError):
    """The two rims do not share (n, k)."""


class KernelRelationError(RuntimeError):
    """The canonical kernel vector failed to annihilate the matrix columns."""


@dataclass(frozen=True)
class TrapeziumLetter:
    """One maximal run of same-kind mismatch edges."""

    kind: str  # 'L': edge in J only, 'R': edge in I only
    length: int
    edges: tuple[int, ...]


@dataclass(frozen=True)
class TrapeziumWord:
    """Rotated mismatch word: first letter L, last letter R; empty iff I == J.

    boxes holds the (left, right) lateral pairs after merging consecutive
    same-kind letters; s = len(boxes) is the number of crossings.
    """

    letters: tuple[TrapeziumLetter, ...]
    boxes: tuple[tuple[int, int], ...]
    rotation_edge: int | None

    @property
    def raw(self) -> str:
        return "".join(letter.kind for letter in self.letters)

    @property
    def s(self) -> int:
        return len(self.boxes)


def _check_pair(rim_i: Rim, rim_j: Rim) -> None:
    if (rim_i.n, rim_i.k) != (rim_j.n, rim_j.k):
        raise MismatchedParametersError(
            f"rims have parameters (n={rim_i.n}, k={rim_i.k}) and "
            f"(n={rim_j.n}, k={rim_j.k})"
        )


def build_word(rim_i: Rim, rim_j: Rim) -> TrapeziumWord:
    _check_pair(rim_i, rim_j)
    n = rim_i.n
    only_j = rim_j.elements - rim_i.elements
    only_i = rim_i.elements - rim_j.elements
    kinds = {e: "L" for e in only_j} | {e: "R" for e in only_i}
    if not kinds:
        return TrapeziumWord((), (), None)

    runs: list[list[int]] = []
    for e in range(1, n + 1):
        if e not in kinds:
            continue
        if runs and runs[-1][-1] == e - 1 and kinds[runs[-1][-1]] == kinds[e]:
            runs[-1].append(e)
        else:
            runs.append([e])
    # the run through the n -> 1 seam is one run
    if len(runs) > 1 and runs[0][0] == 1 and runs[-1][-1] == n and kinds[1] == kinds[n]:
        runs[0] = runs.pop() + runs[0]

    start = min(
        (
            idx
            for idx, run in enumerate(runs)
            if kinds[run[0]] == "L" and kinds[runs[idx - 1][0]] == "R"
        ),
        key=lambda idx: runs[idx][0],
    )
    rotated = runs[start:] + runs[:start]
    letters = tuple(
        TrapeziumLetter(kinds[run[0]], len(run), tuple(run)) for run in rotated
    )

    boxes: list[tuple[int, int]] = []
    left = right = 0
    for letter in letters:
        if letter.kind == "L":
            if right:
                boxes.append((left, right))
                left = right = 0
            left += letter.length
        else:
            right += letter.length
    boxes.append((left, right))
    return TrapeziumWord(letters, tuple(boxes), letters[0].edges[0])


def _column_peaks(rim_i: Rim, rim_j: Rim) -> tuple[int, ...]:
    """Peaks of I in matrix column order, anchored at the word rotation."""
    us = peaks(rim_i)
    word = build_word(rim_i, rim_j)
    if word.rotation_edge is not None:
        u1 = peak_at_or_after(rim_i, word.rotation_edge)
    else:
        u1 = peak_after(rim_i, max(valleys(rim_i)))
    at = us.index(u1)
    return us[at:] + us[:at]


def build_Dstar(rim_i: Rim, rim_j: Rim) -> MonomialMatrix:
    """Matrix of the induced map on covers for hom(L_I, L_J), over F[t].

    Cyclic bidiagonal: the diagonal entry at (v_i, u_i) is -t^(a_i) with
    a_i the number of J-edges in the ascent (v_i, u_i]; the subdiagonal
    entry at (v_{i+1}, u_i) is +t^(b_i) with b_i the number of non-J-edges
    in the descent (u_i, v_{i+1}].
    """
    _check_pair(rim_i, rim_j)
    cols = _column_peaks(rim_i, rim_j)
    p = len(cols)
    if p < 2:
        raise ProjectiveModuleError("single-peak rim has no relation matrix")
    n = rim_i.n
    members_j = rim_j.elements
    rows = tuple(valley_before(rim_i, u) for u in cols)
    entries: dict[tuple[int, int], tuple[int, int]] = {}
    for i in range(p):
        v, u = rows[i], cols[i]
        a = CyclicEdgeInterval(n, v, u).count_in(members_j)
        entries[(v, u)] = (-1, a)
        v_next = rows[(i + 1) % p]
        b = CyclicEdgeInterval(n, u, v_next).count_not_in(members_j)
        entries[(v_next, u)] = (1, b)
    return MonomialMatrix(rows, cols, entries)


def canonical_hom_offset(rim_i: Rim, rim_j: Rim) -> int:
    """Smallest t-power c with t^c * (graph of J) fitting under the graph of I."""
    _check_pair(rim_i, rim_j)
    hi = height_profile(rim_i).heights
    hj = height_profile(rim_j).heights
    return max(a - b for a, b in zip(hi, hj)) // 2


def kernel_coefficients(rim_i: Rim, rim_j: Rim) -> tuple[int, ...]:
    """Exponents alpha with sum_i t^(alpha_i) col_i = 0, in column order.

    alpha_u = (max delta - delta(u)) / 2 where delta is the height gap
    between the rims; normalised so min alpha = 0.  The relation is checked
    against the matrix entries and KernelRelationError raised on failure.
    """
    matrix = build_Dstar(rim_i, rim_j)
    hi = height_profile(rim_i).heights
    hj = height_profile(rim_j).heights
    top = max(a - b for a, b in zip(hi, hj))
    alphas = tuple((top - (hi[u] - hj[u])) // 2 for u in matrix.cols)
    p = len(alphas)
    if min(alphas) != 0:
        raise KernelRelationError(f"kernel coefficients {alphas} are not normalised")
    for r in range(p):
        _, a = matrix.entries[(matrix.rows[r], matrix.cols[r])]
        _, b = matrix.entries[(matrix.rows[r], matrix.cols[r - 1])]
        if alphas[r] + a != alphas[r - 1] + b:
            raise KernelRelationError(
                f"columns {matrix.cols[r - 1]} and {matrix.cols[r]} do not cancel in row {matrix.rows[r]}"
            )
    return alphas
