"""Invariant factors of monomial matrices over F[t], by two independent routes.

The fast route reads the cyclic bidiagonal shape directly: strip unit factors
(zero exponents), then repeatedly extract the minimal remaining offset while
merging its box into a neighbour.  The slow route, snf_oracle, knows nothing
about the shape: it computes determinantal divisors as exact integer-coefficient
polynomials and insists every quotient is a monomial.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd as igcd


class MalformedMatrixError(ValueError):
    """Input is not a cyclic bidiagonal monomial matrix."""


class EmptyInputError(ValueError):
    """Box merging needs at least one box."""


class NonMonomialFactorError(ArithmeticError):
    """A determinantal divisor quotient was not a power of t."""


class TooLargeError(ValueError):
    """Input exceeds a configured size cap."""


@dataclass(frozen=True)
class MonomialMatrix:
    """Matrix over F[t] with entries 0 or (sign)*t^exponent, keyed by labels.

    rows and cols are distinct labels in display order; entries maps
    (row_label, col_label) to (sign, exponent) for the nonzero positions.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    entries: dict[tuple[int, int], tuple[int, int]]

    def dense(self) -> list[list[tuple[int, int] | None]]:
        return [[self.entries.get((r, c)) for c in self.cols] for r in self.rows]


@dataclass(frozen=True)
class BoxOffsets:
    """Cyclic alternating exponent sequence, one (a_i, b_i) pair per box.

    a_i is the diagonal exponent of column i, b_i the subdiagonal one.  For
    matrices built from rim pairs the residual pairs are strictly positive
    and the lateral sums balance.
    """

    pairs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class InvariantFactorList:
    """Invariant factors split as units / positive t-powers / zeros."""

    unit_count: int
    exponents: tuple[int, ...]
    zero_count: int

    @property
    def dimension(self) -> int:
        return sum(self.exponents)


def _cyclic_offsets(matrix: MonomialMatrix) -> list[tuple[int, int]]:
    p = len(matrix.rows)
    if len(matrix.cols) != p or p < 2:
        raise MalformedMatrixError(f"need a square matrix of size >= 2, got {len(matrix.rows)}x{len(matrix.cols)}")
    if len(set(matrix.rows)) != p or len(set(matrix.cols)) != p:
        raise MalformedMatrixError("row and column labels must be distinct")
    pairs: list[tuple[int, int]] = []
    expected: set[tuple[int, int]] = set()
    for i in range(p):
        dkey = (matrix.rows[i], matrix.cols[i])
        skey = (matrix.rows[(i + 1) % p], matrix.cols[i])
        diag = matrix.entries.get(dkey)
        sub = matrix.entries.get(skey)
        if diag is None or sub is None:
            raise MalformedMatrixError(f"column {matrix.cols[i]} is missing a diagonal or subdiagonal entry")
        if diag[0] != -1 or sub[0] != 1 or diag[1] < 0 or sub[1] < 0:
            raise MalformedMatrixError(f"column {matrix.cols[i]} violates the sign or exponent convention")
        pairs.append((diag[1], sub[1]))
        expected.add(dkey)
        expected.add(skey)
    if set(matrix.entries) != expected:
        raise MalformedMatrixError("nonzero entries outside the two cyclic diagonals")
    return pairs


def reduce_units(matrix: MonomialMatrix) -> tuple[int, BoxOffsets]:
    """Strip unit invariant factors from a cyclic bidiagonal monomial matrix.

    Each zero offset lets one generator be eliminated against a relation;
    the neighbouring offsets merge by the sum rule.  Returns the number of
    units stripped and the residual boxes; an empty residual means the
    matrix was entirely units plus the single zero factor (equal rims).
    """
    pairs = _cyclic_offsets(matrix)
    units = 0
    while len(pairs) > 1:
        j = next((i for i, (a, b) in enumerate(pairs) if a == 0 or b == 0), None)
        if j is None:
            break
        a, b = pairs[j]
        if a == 0:
            prev = pairs[j - 1]
            pairs[j - 1] = (prev[0], prev[1] + b - a)
        else:
            nxt = (j + 1) % len(pairs)
            pairs[nxt] = (pairs[nxt][0] + a - b, pairs[nxt][1])
        del pairs[j]
        units += 1
    if len(pairs) == 1 and pairs[0] == (0, 0):
        return units, BoxOffsets(())
    return units, BoxOffsets(tuple(pairs))


def box_merge_invariants(boxes: BoxOffsets) -> InvariantFactorList:
    """Extract positive invariant factors by cyclic minimum merging.

    Repeatedly take the minimal offset h (lowest cyclic position on ties,
    diagonal before subdiagonal), record t^h, and merge the box into its
    neighbour with the sum-minus-min rule; the last box left is the zero
    factor.  Offsets must be strictly positive.
    """
    if not boxes.pairs:
        raise EmptyInputError("no boxes to merge")
    pairs = [list(p) for p in boxes.pairs]
    extracted: list[int] = []
    while len(pairs) > 1:
        best_j, best_side, best_val = 0, 0, pairs[0][0]
        for j, (a, b) in enumerate(pairs):
            if a < best_val:
                best_j, best_side, best_val = j, 0, a
            if b < best_val:
                best_j, best_side, best_val = j, 1, b
        extracted.append(best_val)
        if best_side == 0:
            pairs[best_j - 1][1] += pairs[best_j][1] - best_val
        else:
            pairs[(best_j + 1) % len(pairs)][0] += pairs[best_j][0] - best_val
        del pairs[best_j]
    return InvariantFactorList(0, tuple(sorted(extracted)), 1)


def invariant_factors(matrix: MonomialMatrix) -> InvariantFactorList:
    """Full fast-route factor list: units stripped, then boxes merged."""
    units, residual = reduce_units(matrix)
    if not residual.pairs:
        return InvariantFactorList(units, (), 1)
    merged = box_merge_invariants(residual)
    return InvariantFactorList(
        units + merged.unit_count, merged.exponents, merged.zero_count
    )


# Polynomials in t with integer coefficients, as {exponent: coefficient}
# with no zero coefficients.  The zero polynomial is the empty dict.

def _poly_add_scaled(acc: dict[int, int], p: dict[int, int], coeff: int, shift: int) -> None:
    for e, c in p.items():
        e2 = e + shift
        c2 = acc.get(e2, 0) + coeff * c
        if c2:
            acc[e2] = c2
        else:
            acc.pop(e2, None)


def _poly_primitive(p: dict[int, int]) -> dict[int, int]:
    """Divide out the integer content and make the leading coefficient positive."""
    content = 0
    for c in p.values():
        content = igcd(content, c)
    if max(p) >= 0 and p[max(p)] < 0:
        content = -content
    return {e: c // content for e, c in p.items()}


def _poly_prem(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    """Pseudo-remainder of a by b (b nonzero, deg a >= deg b)."""
    a = dict(a)
    db, lb = max(b), b[max(b)]
    while a and max(a) >= db:
        da, la = max(a), a[max(a)]
        scaled: dict[int, int] = {}
        _poly_add_scaled(scaled, a, lb, 0)
        _poly_add_scaled(scaled, b, -la, da - db)
        a = scaled
    return a


def _poly_gcd(p: dict[int, int], q: dict[int, int]) -> dict[int, int]:
    """Primitive gcd in Q[t] (integer content discarded, leading coeff positive)."""
    a, b = _poly_primitive(p), _poly_primitive(q)
    if max(a) < max(b):
        a, b = b, a
    while b:
        r = _poly_prem(a, b)
        a, b = b, (_poly_primitive(r) if r else {})
    return _poly_primitive(a)


def _minor_det(dense: list[list[tuple[int, int] | None]], rsel: tuple[int, ...], csel: tuple[int, ...]) -> dict[int, int]:
    if len(rsel) == 1:
        entry = dense[rsel[0]][csel[0]]
        return {entry[1]: entry[0]} if entry else {}
    acc: dict[int, int] = {}
    row = dense[rsel[0]]
    rest = rsel[1:]
    for idx, c in enumerate(csel):
        entry = row[c]
        if entry is None:
            continue
        sub = _minor_det(dense, rest, csel[:idx] + csel[idx + 1 :])
        if sub:
            sign = entry[0] if idx % 2 == 0 else -entry[0]
            _poly_add_scaled(acc, sub, sign, entry[1])
    return acc


_UNIT_POLY = {0: 1}


def _determinantal_divisor(dense: list[list[tuple[int, int] | None]], size: int) -> dict[int, int] | None:
    """Primitive gcd of all size x size minors, None when they all vanish."""
    nrows, ncols = len(dense), len(dense[0])
    divisor: dict[int, int] | None = None
    for rsel in itertools.combinations(range(nrows), size):
        for csel in itertools.combinations(range(ncols), size):
            det = _minor_det(dense, rsel, csel)
            if not det:
                continue
            divisor = _poly_primitive(det) if divisor is None else _poly_gcd(divisor, det)
            if divisor == _UNIT_POLY:
                return divisor
    return divisor


def snf_oracle(matrix: MonomialMatrix, max_dim: int = 12) -> InvariantFactorList:
    """Invariant factors via determinantal divisors, shape-agnostic.

    Works on any matrix with entries 0 or (sign)*t^e.  Every nonzero
    determinantal divisor must normalise to a single power of t, otherwise
    NonMonomialFactorError; the enumeration is factorial, hence the size cap.
    """
    nrows, ncols = len(matrix.rows), len(matrix.cols)
    if max(nrows, ncols) > max_dim:
        raise TooLargeError(f"matrix is {nrows}x{ncols}, oracle cap is {max_dim}")
    dense = matrix.dense()
    unit_count = 0
    exponents: list[int] = []
    prev_val = 0
    rank = 0
    for size in range(1, min(nrows, ncols) + 1):
        divisor = _determinantal_divisor(dense, size)
        if divisor is None:
            break
        rank = size
        if len(divisor) != 1 or divisor[max(divisor)] != 1:
            raise NonMonomialFactorError(f"determinantal divisor {divisor} at size {size} is not a power of t")
        (val,) = divisor
        step = val - prev_val
        if step == 0:
            unit_count += 1
        else:
            exponents.append(step)
        prev_val = val
    return InvariantFactorList(unit_count, tuple(exponents), min(nrows, ncols) - rank)
