"""F2 linear algebra on bit-packed rows: rank, solve, nullspace.

Rows are Python ints used as bitsets (bit j = column j), so row XOR runs
word-parallel regardless of width. This module is the oracle behind every
dimension and membership claim elsewhere in the package.
"""

from __future__ import annotations

from typing import List, NamedTuple, Optional


class BitVector(NamedTuple):
    width: int
    bits: int

    def weight(self) -> int:
        return self.bits.bit_count()

    def __str__(self) -> str:
        return format(self.bits, f"0{self.width}b")[::-1] if self.width else ""


def vector(width: int, bits: int) -> BitVector:
    if bits >> width:
        raise ValueError(f"bits 0x{bits:x} exceed width {width}")
    return BitVector(width, bits)


def vector_from_string(s: str) -> BitVector:
    """Parse a bit string, leftmost character = column 0."""
    bits = 0
    for j, ch in enumerate(s):
        if ch == "1":
            bits |= 1 << j
        elif ch != "0":
            raise ValueError(f"invalid bit character {ch!r}")
    return BitVector(len(s), bits)


class BitMatrix:
    """Dense F2 matrix; one int per row, bit j of a row = column j."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows: List[int], ncols: int):
        for r in rows:
            if r >> ncols:
                raise ValueError("row has bits beyond ncols")
        self.rows = list(rows)
        self.ncols = ncols

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def from_strings(cls, lines: List[str]) -> "BitMatrix":
        ncols = len(lines[0]) if lines else 0
        return cls([vector_from_string(s).bits for s in lines], ncols)

    def transpose(self) -> "BitMatrix":
        out = [0] * self.ncols
        for i, row in enumerate(self.rows):
            while row:
                j = (row & -row).bit_length() - 1
                out[j] |= 1 << i
                row &= row - 1
        return BitMatrix(out, self.nrows)

    def mul_vec(self, x: int) -> int:
        """Matrix-vector product over F2; x is a column bitset of width ncols."""
        y = 0
        for i, row in enumerate(self.rows):
            y |= ((row & x).bit_count() & 1) << i
        return y

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        return f"BitMatrix({self.nrows}x{self.ncols})"


class RowEchelon:
    """Row-echelon form of a row space, reusable for membership and rank."""

    __slots__ = ("pivots", "rows", "ncols")

    def __init__(self, m: BitMatrix):
        self.ncols = m.ncols
        self.pivots: List[int] = []  # pivot column per reduced row
        self.rows: List[int] = []
        for row in m.rows:
            self.add(row)

    def reduce(self, v: int) -> int:
        for piv, row in zip(self.pivots, self.rows):
            if (v >> piv) & 1:
                v ^= row
        return v

    def add(self, v: int) -> bool:
        """Insert v into the basis; returns True if it enlarged the space."""
        v = self.reduce(v)
        if v == 0:
            return False
        piv = (v & -v).bit_length() - 1
        # keep rows reduced against each other so `reduce` stays a single pass
        for i, row in enumerate(self.rows):
            if (row >> piv) & 1:
                self.rows[i] ^= v
        self.pivots.append(piv)
        self.rows.append(v)
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    @property
    def rank(self) -> int:
        return len(self.rows)


def rank(m: BitMatrix) -> int:
    """F2 row rank; the input is not modified."""
    return RowEchelon(m).rank


def solve(m: BitMatrix, b: BitVector) -> Optional[BitVector]:
    """Return some x with m @ x = b over F2, or None if inconsistent."""
    if b.width != m.nrows:
        raise ValueError(f"rhs width {b.width} != nrows {m.nrows}")
    # eliminate on columns of m; carry the combination of b alongside
    ech = RowEchelon(BitMatrix([], m.ncols + m.nrows))
    for i, row in enumerate(m.rows):
        ech.add(row | (1 << (m.ncols + i)))
    x = 0
    for piv, row in zip(ech.pivots, ech.rows):
        combo = row >> m.ncols
        if piv >= m.ncols:
            # zero combination of rows: b must satisfy the same relation
            if (combo & b.bits).bit_count() & 1:
                return None
        elif (combo & b.bits).bit_count() & 1:
            x |= 1 << piv
    if m.mul_vec(x) != b.bits:
        return None
    return BitVector(m.ncols, x)


def nullspace_basis(m: BitMatrix) -> List[BitVector]:
    """Independent kernel vectors; len = ncols - rank(m)."""
    ech = RowEchelon(m)
    pivot_set = set(ech.pivots)
    basis = []
    for j in range(m.ncols):
        if j in pivot_set:
            continue
        v = 1 << j
        for piv, row in zip(ech.pivots, ech.rows):
            if (row >> j) & 1:
                v |= 1 << piv
        basis.append(BitVector(m.ncols, v))
    return basis
