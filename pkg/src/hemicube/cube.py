"""Faces and chains of the Hamming cube with the four elementary operators.

A p-face of the n-cube is a word over {0,1,*} with exactly p stars. Internally
a face stores two n-bit masks: `stars` marks the star positions and `bits`
holds the 0/1 values elsewhere. String position j (leftmost = 0) maps to bit
n-1-j, so comparing (stars, bits) as integers orders faces the way their
literals read. Chains are F2 formal sums, i.e. sets of faces of one dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, NamedTuple

from .errors import InvalidDimension


class Face(NamedTuple):
    n: int
    stars: int
    bits: int

    @property
    def dimension(self) -> int:
        return self.stars.bit_count()

    def __str__(self) -> str:
        return face_literal(self)


def make_face(n: int, stars: int, bits: int) -> Face:
    mask = (1 << n) - 1
    if stars & ~mask or bits & ~mask:
        raise ValueError("mask bits beyond width")
    if stars & bits:
        raise ValueError("bits set on star positions")
    return Face(n, stars, bits)


def parse_face(s: str) -> Face:
    n = len(s)
    stars = bits = 0
    for j, ch in enumerate(s):
        b = 1 << (n - 1 - j)
        if ch == "*":
            stars |= b
        elif ch == "1":
            bits |= b
        elif ch != "0":
            raise ValueError(f"invalid face character {ch!r} in {s!r}")
    return Face(n, stars, bits)


def face_literal(f: Face) -> str:
    out = []
    for j in range(f.n):
        b = 1 << (f.n - 1 - j)
        out.append("*" if f.stars & b else "1" if f.bits & b else "0")
    return "".join(out)


def parse_word(s: str) -> int:
    """Bit string -> translation mask, in the face coordinate convention."""
    n = len(s)
    bits = 0
    for j, ch in enumerate(s):
        if ch == "1":
            bits |= 1 << (n - 1 - j)
        elif ch != "0":
            raise ValueError(f"invalid bit character {ch!r} in {s!r}")
    return bits


def word_literal(n: int, w: int) -> str:
    return format(w, f"0{n}b")


@dataclass(frozen=True)
class Chain:
    """F2-sparse set of p-faces of the n-cube (also serves as a cochain)."""

    n: int
    p: int
    faces: FrozenSet[Face]

    def __post_init__(self) -> None:
        for f in self.faces:
            if f.n != self.n or f.dimension != self.p:
                raise ValueError(f"face {f} does not live in C_{self.p}(Q^{self.n})")

    @property
    def weight(self) -> int:
        return len(self.faces)

    def is_empty(self) -> bool:
        return not self.faces

    def sorted_faces(self) -> List[Face]:
        return sorted(self.faces)

    def __xor__(self, other: "Chain") -> "Chain":
        if (self.n, self.p) != (other.n, other.p):
            raise ValueError("cannot add chains of different type")
        return Chain(self.n, self.p, self.faces ^ other.faces)

    def __str__(self) -> str:
        return "{" + ",".join(face_literal(f) for f in self.sorted_faces()) + "}"


def chain(n: int, p: int, faces: Iterable[Face] = ()) -> Chain:
    return Chain(n, p, frozenset(faces))


def chain_from_literals(literals: Iterable[str], n: int, p: int) -> Chain:
    return chain(n, p, (parse_face(s) for s in literals))


def empty_chain(n: int, p: int) -> Chain:
    return Chain(n, p, frozenset())


def boundary(c: Chain) -> Chain:
    """Replace each star by 0 and by 1; faces appearing twice cancel."""
    if c.p < 1:
        raise InvalidDimension("boundary of a 0-chain is not defined")
    out: set = set()
    for f in c.faces:
        stars = f.stars
        while stars:
            b = stars & -stars
            stars ^= b
            out ^= {Face(f.n, f.stars ^ b, f.bits), Face(f.n, f.stars ^ b, f.bits | b)}
    return Chain(c.n, c.p - 1, frozenset(out))


def coboundary(c: Chain) -> Chain:
    """Replace each non-star symbol by a star; mod-2 cancellation applies."""
    if c.p > c.n - 1:
        raise InvalidDimension("coboundary of a top-dimensional chain is not defined")
    mask = (1 << c.n) - 1
    out: set = set()
    for f in c.faces:
        free = mask & ~f.stars
        while free:
            b = free & -free
            free ^= b
            out ^= {Face(f.n, f.stars | b, f.bits & ~b)}
    return Chain(c.n, c.p + 1, frozenset(out))


def translate_face(f: Face, y: int) -> Face:
    return Face(f.n, f.stars, f.bits ^ (y & ~f.stars))


def translate(c: Chain, y: int) -> Chain:
    """Shift every face by the vector y; stars absorb the addition."""
    if y >> c.n:
        raise ValueError("translation vector wider than the chain")
    return Chain(c.n, c.p, frozenset(translate_face(f, y) for f in c.faces))


def complement(c: Chain) -> Chain:
    """Exchange 0 and 1 in every face: translation by the all-ones vector."""
    return translate(c, (1 << c.n) - 1)


def intersection_parity(a: Chain, b: Chain) -> int:
    """Mod-2 size of the common support; the bilinear pairing of chains."""
    return len(a.faces & b.faces) & 1
