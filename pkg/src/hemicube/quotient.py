"""Quotients of the cube complex by a classical linear code.

Faces are identified when they differ by a codeword; each coset is represented
by its ordering-minimal element under the (stars, bits) integer order. All
quotient chains are required to consist of such canonical representatives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Tuple

from . import cube
from .cube import Chain, Face
from .errors import NonCanonical, NotSymmetric
from .f2la import BitMatrix, rank


@dataclass(frozen=True)
class ClassicalCode:
    """An [n, k, d] binary linear code given by k independent generators."""

    n: int
    generators: Tuple[int, ...]
    codewords: Tuple[int, ...]
    d: int

    @property
    def k(self) -> int:
        return len(self.generators)

    @classmethod
    def from_generators(cls, n: int, generators: Iterable[int]) -> "ClassicalCode":
        gens = tuple(generators)
        for g in gens:
            if g >> n:
                raise ValueError("generator wider than code length")
        if rank(BitMatrix(list(gens), n)) != len(gens):
            raise ValueError("generators are not independent")
        words = [0]
        for g in gens:
            words += [w ^ g for w in words]
        d = min((w.bit_count() for w in words if w), default=0)
        return cls(n, gens, tuple(words), d)

    @classmethod
    def repetition(cls, n: int) -> "ClassicalCode":
        return cls.from_generators(n, [(1 << n) - 1])

    def __str__(self) -> str:
        return f"[{self.n},{self.k},{self.d}]"


@dataclass(frozen=True)
class QuotientComplex:
    """The chain complex of Q^n / C with qubits on p-faces."""

    code: ClassicalCode
    p: int

    def __post_init__(self) -> None:
        n, p, d = self.code.n, self.p, self.code.d
        if not 1 <= p <= n - 2:
            raise ValueError(f"p={p} outside [1, {n - 2}]")
        if d < p + 2:
            raise ValueError(f"quotient needs code distance >= p+2 = {p + 2}, got {d}")

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def k(self) -> int:
        return self.code.k

    def __str__(self) -> str:
        return f"Q^{self.n}/{self.code} p={self.p}"


def canonical_rep(f: Face, code: ClassicalCode) -> Face:
    """Ordering-minimal face in the coset {f + c : c in code}; idempotent."""
    if f.n != code.n:
        raise ValueError(f"face width {f.n} != code length {code.n}")
    best = f.bits
    off = ~f.stars
    for c in code.codewords:
        t = f.bits ^ (c & off)
        if t < best:
            best = t
    return Face(f.n, f.stars, best)


def is_canonical(f: Face, code: ClassicalCode) -> bool:
    return canonical_rep(f, code) == f


def canonicalize(c: Chain, code: ClassicalCode) -> Chain:
    """Project a cube chain to canonical faces with mod-2 cancellation."""
    out: set = set()
    for f in c.faces:
        out ^= {canonical_rep(f, code)}
    return Chain(c.n, c.p, frozenset(out))


def face_count(qc: QuotientComplex, dim: int) -> int:
    n, k = qc.n, qc.k
    return (1 << (n - dim - k)) * math.comb(n, dim)


def enumerate_dim(qc: QuotientComplex, dim: int) -> Tuple[Face, ...]:
    """All canonical dim-faces in sorted order; the index of a face is fixed."""
    n, code = qc.n, qc.code
    found = set()
    for stars in _star_masks(n, dim):
        off_positions = [b for b in range(n) if not (stars >> b) & 1]
        for pattern in range(1 << (n - dim)):
            bits = 0
            for i, b in enumerate(off_positions):
                if (pattern >> i) & 1:
                    bits |= 1 << b
            found.add(canonical_rep(Face(n, stars, bits), code))
    faces = tuple(sorted(found))
    assert len(faces) == face_count(qc, dim)
    return faces


def enumerate_faces(qc: QuotientComplex) -> Tuple[Face, ...]:
    """Canonical p-faces in index order: this is the qubit numbering."""
    return enumerate_dim(qc, qc.p)


@lru_cache(maxsize=None)
def _star_masks(n: int, dim: int) -> Tuple[int, ...]:
    if dim == 0:
        return (0,)
    masks = []
    for m in range(1 << n):
        if m.bit_count() == dim:
            masks.append(m)
    return tuple(masks)


def _check_canonical(c: Chain, code: ClassicalCode) -> None:
    for f in c.faces:
        if not is_canonical(f, code):
            raise NonCanonical(f"face {f} is not a coset representative")


def q_boundary(qc: QuotientComplex, c: Chain) -> Chain:
    """Boundary in the quotient: facewise cube boundary, then canonicalize."""
    _check_canonical(c, qc.code)
    return canonicalize(cube.boundary(c), qc.code)


def q_coboundary(qc: QuotientComplex, c: Chain) -> Chain:
    """Coboundary in the quotient, with cross-coset cancellation."""
    _check_canonical(c, qc.code)
    return canonicalize(cube.coboundary(c), qc.code)


def lift(qc: QuotientComplex, c: Chain) -> Chain:
    """Symmetric cube chain of a quotient chain: every coset in full."""
    _check_canonical(c, qc.code)
    out = set()
    for f in c.faces:
        off = ~f.stars
        for w in qc.code.codewords:
            out.add(Face(f.n, f.stars, f.bits ^ (w & off)))
    return Chain(c.n, c.p, frozenset(out))


def project(qc: QuotientComplex, c: Chain) -> Chain:
    """Inverse of lift; rejects chains that are not unions of full cosets."""
    orbit = 1 << qc.k
    reps = set()
    for f in c.faces:
        reps.add(canonical_rep(f, qc.code))
    if len(reps) * orbit != len(c.faces):
        raise NotSymmetric("chain is not invariant under the quotienting code")
    return Chain(c.n, c.p, frozenset(reps))


def is_symmetric(c: Chain, code: ClassicalCode) -> bool:
    for w in code.generators:
        if frozenset(cube.translate_face(f, w) for f in c.faces) != c.faces:
            return False
    return True


def parse_descriptor(text: str) -> QuotientComplex:
    """Read the `n k p` + generator-rows text format (or `rep:n p`)."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty code descriptor")
    head = lines[0].split()
    if head[0].startswith("rep:"):
        n = int(head[0].split(":", 1)[1])
        p = int(head[1])
        return QuotientComplex(ClassicalCode.repetition(n), p)
    n, k, p = (int(t) for t in head)
    if len(lines) != 1 + k:
        raise ValueError(f"expected {k} generator lines, got {len(lines) - 1}")
    gens = []
    for ln in lines[1:]:
        if len(ln) != n:
            raise ValueError(f"generator {ln!r} is not {n} bits")
        gens.append(cube.parse_word(ln))
    return QuotientComplex(ClassicalCode.from_generators(n, gens), p)


def format_descriptor(qc: QuotientComplex) -> str:
    lines = [f"{qc.n} {qc.k} {qc.p}"]
    lines += [cube.word_literal(qc.n, g) for g in qc.code.generators]
    return "\n".join(lines) + "\n"
