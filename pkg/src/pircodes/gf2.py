"""Packed GF(2) vectors and generator matrices with exhaustive minimum distance.

Coordinates and symbol indices are 1-based throughout the public API, matching
the external file formats; bit j-1 of a packed integer holds coordinate j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionTooLarge, NotFullRank

MIN_DISTANCE_CAP = 28


@dataclass(frozen=True)
class BitVector:
    """A binary vector of fixed length, packed into an arbitrary-precision int."""

    length: int
    bits: int

    def __post_init__(self):
        if self.length <= 0:
            raise ValueError(f"length must be positive, got {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits outside range for length {self.length}")

    @classmethod
    def from_bits(cls, values: Iterable[int]) -> "BitVector":
        """Build from an iterable of 0/1 values in coordinate order."""
        packed = 0
        length = 0
        for v in values:
            if v not in (0, 1):
                raise ValueError(f"bit values must be 0 or 1, got {v!r}")
            packed |= v << length
            length += 1
        return cls(length, packed)

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitVector":
        """Build from 1-based coordinate indices carrying a one."""
        packed = 0
        for j in support:
            if not 1 <= j <= length:
                raise ValueError(f"support index {j} outside 1..{length}")
            packed |= 1 << (j - 1)
        return cls(length, packed)

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(length, 0)

    @classmethod
    def ones(cls, length: int) -> "BitVector":
        return cls(length, (1 << length) - 1)

    @classmethod
    def unit(cls, length: int, i: int) -> "BitVector":
        """The i-th unit vector, 1-based."""
        if not 1 <= i <= length:
            raise ValueError(f"unit index {i} outside 1..{length}")
        return cls(length, 1 << (i - 1))

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def get(self, j: int) -> int:
        """Bit at 1-based coordinate j."""
        if not 1 <= j <= self.length:
            raise ValueError(f"coordinate {j} outside 1..{self.length}")
        return (self.bits >> (j - 1)) & 1

    def support(self) -> tuple[int, ...]:
        """1-based coordinates carrying a one, increasing."""
        return tuple(j for j in range(1, self.length + 1) if (self.bits >> (j - 1)) & 1)

    def to_bits(self) -> tuple[int, ...]:
        return tuple((self.bits >> j) & 1 for j in range(self.length))

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise ValueError("length mismatch")
        return BitVector(self.length, self.bits ^ other.bits)


@dataclass(frozen=True)
class GenMatrix:
    """A k-by-n binary generator matrix; row i is packed in rows[i-1].

    Full rank is not enforced at construction; operations that require an
    actual [n, k] code check it explicitly.
    """

    k: int
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.k <= 0 or self.n <= 0:
            raise ValueError(f"degenerate shape {self.k}x{self.n}")
        if len(self.rows) != self.k:
            raise ValueError(f"expected {self.k} rows, got {len(self.rows)}")
        for r in self.rows:
            if r < 0 or r >> self.n:
                raise ValueError(f"row bits outside range for n={self.n}")

    @classmethod
    def from_bits(cls, rows: Sequence[Sequence[int]]) -> "GenMatrix":
        """Build from a sequence of 0/1 row sequences."""
        if not rows:
            raise ValueError("matrix needs at least one row")
        n = len(rows[0])
        packed = []
        for row in rows:
            if len(row) != n:
                raise ValueError("ragged rows")
            bv = BitVector.from_bits(row)
            packed.append(bv.bits)
        return cls(len(rows), n, tuple(packed))

    @classmethod
    def identity(cls, k: int) -> "GenMatrix":
        return cls(k, k, tuple(1 << i for i in range(k)))

    def row(self, i: int) -> BitVector:
        """Row i as a BitVector, 1-based."""
        if not 1 <= i <= self.k:
            raise ValueError(f"row {i} outside 1..{self.k}")
        return BitVector(self.n, self.rows[i - 1])

    def column(self, j: int) -> BitVector:
        """Column j as a length-k BitVector, 1-based."""
        return BitVector(self.k, self.column_bits(j))

    def column_bits(self, j: int) -> int:
        """Column j packed into an int (bit i-1 = entry in row i), 1-based."""
        if not 1 <= j <= self.n:
            raise ValueError(f"column {j} outside 1..{self.n}")
        shift = j - 1
        col = 0
        for i, r in enumerate(self.rows):
            col |= ((r >> shift) & 1) << i
        return col

    def columns(self) -> tuple[int, ...]:
        """All n columns as packed ints, in coordinate order."""
        out = []
        for j in range(self.n):
            col = 0
            for i, r in enumerate(self.rows):
                col |= ((r >> j) & 1) << i
            out.append(col)
        return tuple(out)

    def row_weights(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    def to_bits(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple((r >> j) & 1 for j in range(self.n)) for r in self.rows)


def rank(G: GenMatrix) -> int:
    """GF(2) row rank by Gaussian elimination on packed rows."""
    return _bitset_rank(list(G.rows))


def _bitset_rank(rows: list[int]) -> int:
    work = [r for r in rows if r]
    r = 0
    while work:
        pivot = min(work, key=lambda x: x & -x)
        low = pivot & -pivot
        work = [x ^ pivot if x & low else x for x in work]
        work = [x for x in work if x]
        r += 1
    return r


def in_span(vectors: Iterable[int], target: int) -> bool:
    """Whether target lies in the GF(2) span of the given packed vectors."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    residue = target
    for b in basis:
        residue = min(residue, residue ^ b)
    return residue == 0


def is_systematic(G: GenMatrix) -> bool:
    """True iff the first k columns form the identity block exactly."""
    if G.n < G.k:
        return False
    mask = (1 << G.k) - 1
    return all((r & mask) == (1 << i) for i, r in enumerate(G.rows))


def min_distance(G: GenMatrix, cap: int = MIN_DISTANCE_CAP) -> int:
    """Minimum weight over all 2^k - 1 nonzero codewords, by Gray-code sweep.

    Requires full row rank and k <= cap; raises DimensionTooLarge beyond the
    cap so callers can skip the gate or raise the cap explicitly.
    """
    if G.k > cap:
        raise DimensionTooLarge(f"k={G.k} exceeds exhaustive enumeration cap {cap}")
    if rank(G) < G.k:
        raise NotFullRank(f"rank below k={G.k}; not a generator matrix of a [n,{G.k}] code")
    rows = G.rows
    best = G.n
    word = 0
    for m in range(1, 1 << G.k):
        word ^= rows[(m & -m).bit_length() - 1]
        w = word.bit_count()
        if w < best:
            best = w
            if best == 1:
                break
    return best


__all__ = [
    "MIN_DISTANCE_CAP",
    "BitVector",
    "GenMatrix",
    "rank",
    "in_span",
    "is_systematic",
    "min_distance",
]
