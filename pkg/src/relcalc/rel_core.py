"""Finite binary relations over {0..n-1} stored as packed bit rows.

Row i is a Python int whose bit j is set iff the pair (i, j) is in the
relation.  Arbitrary-precision ints give word-parallel row operations for
free, so meet/join/subset are whole-row operations and the reflexive
transitive closure is a bit-parallel Warshall sweep.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass


class CarrierError(ValueError):
    """Raised for a non-positive carrier size."""


class SizeMismatchError(ValueError):
    """Raised when operands live on carriers of different sizes."""


def _check_carrier(n: int) -> None:
    if n < 1:
        raise CarrierError(f"carrier size must be >= 1, got {n}")


def _check_same_size(r: "Relation", s: "Relation") -> None:
    if r.size != s.size:
        raise SizeMismatchError(f"carrier sizes differ: {r.size} vs {s.size}")


@dataclass(frozen=True)
class Relation:
    """Immutable n x n boolean matrix.

    Invariant: exactly `size` rows, and no row has bits at or above
    column `size` (so whole-row comparisons are valid).
    """

    size: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_carrier(self.size)
        if len(self.rows) != self.size:
            raise ValueError(
                f"expected {self.size} rows, got {len(self.rows)}"
            )
        mask = (1 << self.size) - 1
        for i, row in enumerate(self.rows):
            if row & ~mask:
                raise ValueError(f"row {i} has bits beyond column {self.size - 1}")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Relation":
        _check_carrier(n)
        rows = [0] * n
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"pair ({i}, {j}) outside carrier of size {n}")
            rows[i] |= 1 << j
        return cls(n, tuple(rows))

    def pairs(self) -> Iterator[tuple[int, int]]:
        """Yield the pairs in row-major order."""
        for i, row in enumerate(self.rows):
            while row:
                low = row & -row
                yield (i, low.bit_length() - 1)
                row ^= low

    def __contains__(self, pair: tuple[int, int]) -> bool:
        i, j = pair
        return 0 <= i < self.size and 0 <= j < self.size and bool(self.rows[i] >> j & 1)

    def count(self) -> int:
        """Number of pairs."""
        return sum(row.bit_count() for row in self.rows)

    def __repr__(self) -> str:
        return f"Relation({self.size}, {sorted(self.pairs())!r})"


def identity(n: int) -> Relation:
    _check_carrier(n)
    return Relation(n, tuple(1 << i for i in range(n)))


def bottom(n: int) -> Relation:
    _check_carrier(n)
    return Relation(n, (0,) * n)


def top(n: int) -> Relation:
    _check_carrier(n)
    full = (1 << n) - 1
    return Relation(n, (full,) * n)


def meet(r: Relation, s: Relation) -> Relation:
    _check_same_size(r, s)
    return Relation(r.size, tuple(a & b for a, b in zip(r.rows, s.rows)))


def join(r: Relation, s: Relation) -> Relation:
    _check_same_size(r, s)
    return Relation(r.size, tuple(a | b for a, b in zip(r.rows, s.rows)))


def complement(r: Relation) -> Relation:
    mask = (1 << r.size) - 1
    return Relation(r.size, tuple(~row & mask for row in r.rows))


def heyting(s: Relation, t: Relation) -> Relation:
    """Residual of meet: the largest X with meet(X, s) below t.

    In the Boolean lattice of relations this is complement(s) | t,
    computed pointwise.  The adjunction itself is a tested property.
    """
    _check_same_size(s, t)
    mask = (1 << s.size) - 1
    return Relation(s.size, tuple((~a & mask) | b for a, b in zip(s.rows, t.rows)))


def compose(r: Relation, s: Relation) -> Relation:
    """Relational product: (i, k) holds iff some j links i to j and j to k.

    Row i of the result is the OR of the rows of s selected by the bits
    of row i of r.
    """
    _check_same_size(r, s)
    srows = s.rows
    out = []
    for row in r.rows:
        acc = 0
        while row:
            low = row & -row
            acc |= srows[low.bit_length() - 1]
            row ^= low
        out.append(acc)
    return Relation(r.size, tuple(out))


def converse(r: Relation) -> Relation:
    """All pairs reversed: the transpose of the bit matrix."""
    n = r.size
    cols = [0] * n
    for i, row in enumerate(r.rows):
        bit = 1 << i
        while row:
            low = row & -row
            cols[low.bit_length() - 1] |= bit
            row ^= low
    return Relation(n, tuple(cols))


def star(r: Relation) -> Relation:
    """Reflexive-transitive closure by bit-parallel Warshall.

    Seed the diagonal, then for each pivot k OR row k into every row
    that can reach k.  An independent power-iteration implementation
    lives in the oracle module for cross-checking.
    """
    n = r.size
    rows = [row | (1 << i) for i, row in enumerate(r.rows)]
    for k in range(n):
        rk = rows[k]
        bit = 1 << k
        for i in range(n):
            ri = rows[i]
            if ri & bit and rk & ~ri:
                rows[i] = ri | rk
    return Relation(n, tuple(rows))


def is_subset(r: Relation, s: Relation) -> bool:
    _check_same_size(r, s)
    return all(a & ~b == 0 for a, b in zip(r.rows, s.rows))


def equals(r: Relation, s: Relation) -> bool:
    _check_same_size(r, s)
    return r.rows == s.rows
