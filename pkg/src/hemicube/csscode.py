"""CSS codes from quotient complexes: checks, parameters, logical operators.

Qubits sit on canonical p-faces; X-type checks on (p-1)-faces and Z-type
checks on (p+1)-faces, with H_X the boundary map and H_Z the coboundary map
written over the qubit index ordering fixed by `quotient.enumerate_dim`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from . import cube, f2la, quotient
from .cube import Chain, Face
from .errors import InternalInconsistency
from .f2la import BitMatrix, RowEchelon
from .quotient import QuotientComplex


class CodeInstance:
    """Immutable bundle of a quotient complex and its parity-check data."""

    def __init__(self, qc: QuotientComplex):
        self.qc = qc
        self.qubits: Tuple[Face, ...] = quotient.enumerate_faces(qc)
        self.qubit_index: Dict[Face, int] = {f: i for i, f in enumerate(self.qubits)}
        self.xchecks: Tuple[Face, ...] = quotient.enumerate_dim(qc, qc.p - 1)
        self.zchecks: Tuple[Face, ...] = quotient.enumerate_dim(qc, qc.p + 1)
        xck = {f: i for i, f in enumerate(self.xchecks)}
        zck = {f: i for i, f in enumerate(self.zchecks)}

        hx: List[List[int]] = [[] for _ in self.xchecks]
        hz: List[List[int]] = [[] for _ in self.zchecks]
        qubit_xrows: List[Tuple[int, ...]] = []
        for q, face in enumerate(self.qubits):
            one = Chain(qc.n, qc.p, frozenset((face,)))
            xs = tuple(sorted(xck[g] for g in quotient.q_boundary(qc, one).faces))
            qubit_xrows.append(xs)
            for r in xs:
                hx[r].append(q)
            for g in quotient.q_coboundary(qc, one).faces:
                hz[zck[g]].append(q)
        self.hx_rows: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(r)) for r in hx)
        self.hz_rows: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(r)) for r in hz)

        # H_X . H_Z^T = 0 is exactly d(d(z)) = 0 for every Z check face
        for row in self.hz_rows:
            acc: set = set()
            for q in row:
                acc ^= set(qubit_xrows[q])
            if acc:
                raise InternalInconsistency("H_X . H_Z^T != 0")

        self._hx_matrix: BitMatrix | None = None
        self._hz_matrix: BitMatrix | None = None
        self._x_stab: RowEchelon | None = None
        self._z_stab: RowEchelon | None = None
        self._x_kernel: RowEchelon | None = None
        self._z_kernel: RowEchelon | None = None

    @property
    def N(self) -> int:
        return len(self.qubits)

    @property
    def hx_matrix(self) -> BitMatrix:
        if self._hx_matrix is None:
            self._hx_matrix = _rows_to_matrix(self.hx_rows, self.N)
        return self._hx_matrix

    @property
    def hz_matrix(self) -> BitMatrix:
        if self._hz_matrix is None:
            self._hz_matrix = _rows_to_matrix(self.hz_rows, self.N)
        return self._hz_matrix

    def x_stabilizer_space(self) -> RowEchelon:
        """Row space of H_Z on qubits: supports of X-type stabilizers."""
        if self._x_stab is None:
            self._x_stab = RowEchelon(self.hz_matrix)
        return self._x_stab

    def z_stabilizer_space(self) -> RowEchelon:
        """Row space of H_X on qubits: supports of Z-type stabilizers."""
        if self._z_stab is None:
            self._z_stab = RowEchelon(self.hx_matrix)
        return self._z_stab

    def x_kernel_space(self) -> RowEchelon:
        """ker H_X on qubits (all cycles): the classical code tested by the
        X-side checks."""
        if self._x_kernel is None:
            basis = [v.bits for v in f2la.nullspace_basis(self.hx_matrix)]
            self._x_kernel = RowEchelon(BitMatrix(basis, self.N))
        return self._x_kernel

    def z_kernel_space(self) -> RowEchelon:
        """ker H_Z on qubits (all cocycles)."""
        if self._z_kernel is None:
            basis = [v.bits for v in f2la.nullspace_basis(self.hz_matrix)]
            self._z_kernel = RowEchelon(BitMatrix(basis, self.N))
        return self._z_kernel

    def __str__(self) -> str:
        return f"CodeInstance({self.qc}, N={self.N})"


def _rows_to_matrix(rows: Sequence[Tuple[int, ...]], ncols: int) -> BitMatrix:
    packed = []
    for row in rows:
        v = 0
        for j in row:
            v |= 1 << j
        packed.append(v)
    return BitMatrix(packed, ncols)


def build(qc: QuotientComplex) -> CodeInstance:
    return CodeInstance(qc)


def dimension(ci: CodeInstance) -> int:
    """Logical qubit count from ranks: (N - rk H_X) + (N - rk H_Z) - N."""
    n_minus_rx = ci.N - f2la.rank(ci.hx_matrix)
    n_minus_rz = ci.N - f2la.rank(ci.hz_matrix)
    return n_minus_rx + n_minus_rz - ci.N


def distance_formula(ci: CodeInstance) -> Tuple[int, int, int]:
    """(cycle bound C(d,p), cocycle bound 2^(n-p-k), their min)."""
    qc = ci.qc
    d_x = math.comb(qc.code.d, qc.p)
    d_z = 1 << (qc.n - qc.p - qc.k)
    return d_x, d_z, min(d_x, d_z)


def chain_to_mask(ci: CodeInstance, c: Chain) -> int:
    mask = 0
    for f in c.faces:
        mask |= 1 << ci.qubit_index[f]
    return mask


def mask_to_chain(ci: CodeInstance, mask: int) -> Chain:
    faces = []
    while mask:
        b = mask & -mask
        faces.append(ci.qubits[b.bit_length() - 1])
        mask ^= b
    return Chain(ci.qc.n, ci.qc.p, frozenset(faces))


def is_stabilizer_x(ci: CodeInstance, c: Chain) -> bool:
    """Whether c is a sum of Z-check boundaries (acts trivially on the code)."""
    return ci.x_stabilizer_space().contains(chain_to_mask(ci, c))


def is_stabilizer_z(ci: CodeInstance, c: Chain) -> bool:
    """Whether c is a sum of X-check coboundaries."""
    return ci.z_stabilizer_space().contains(chain_to_mask(ci, c))


def standard_face(n: int, positions: Iterable[int]) -> Face:
    """Cube face with stars at `positions` (0-based, leftmost = 0) and the
    alternating 0/1 fill: coordinate j carries the parity of stars before it."""
    pos = sorted(set(positions))
    if pos and not 0 <= pos[0] <= pos[-1] < n:
        raise ValueError("positions outside the word")
    stars = bits = 0
    parity = 0
    it = iter(pos + [n])
    nxt = next(it)
    for j in range(n):
        if j == nxt:
            stars |= 1 << (n - 1 - j)
            parity ^= 1
            nxt = next(it)
        elif parity:
            bits |= 1 << (n - 1 - j)
    return Face(n, stars, bits)


def logical_cycle_np(n: int, p: int) -> Chain:
    """Weight-C(n,p) nontrivial cycle of the antipodal quotient, one face per
    star-position set, written on canonical representatives."""
    if not 1 <= p <= n - 1:
        raise ValueError("need 1 <= p <= n-1")
    rep = quotient.ClassicalCode.repetition(n)
    faces = set()
    for pos in combinations(range(n), p):
        faces.add(quotient.canonical_rep(standard_face(n, pos), rep))
    return Chain(n, p, frozenset(faces))


def logical_cycle_recursive(n: int, p: int) -> Chain:
    """Same cycle built by the prefix recursion; used to cross-check the
    direct construction."""
    if not 1 <= p <= n - 1:
        raise ValueError("need 1 <= p <= n-1")
    rep = quotient.ClassicalCode.repetition(n)
    faces = frozenset(
        quotient.canonical_rep(Face(n, s, b), rep) for s, b in _np_cube(n, p)
    )
    return Chain(n, p, faces)


def _np_cube(n: int, p: int) -> FrozenSet[Tuple[int, int]]:
    if p == n:
        return frozenset({((1 << n) - 1, 0)})
    if p == 1:
        faces = set()
        for pos in range(n):
            star = 1 << (n - 1 - pos)
            ones = (1 << (n - 1 - pos)) - 1  # every coordinate right of the star
            faces.add((star, ones))
        return frozenset(faces)
    top = 1 << (n - 1)
    letter = top if p % 2 == 0 else 0
    out = {(s, b | letter) for s, b in _np_cube(n - 1, p)}
    out |= {(s | top, b) for s, b in _np_cube(n - 1, p - 1)}
    return frozenset(out)


def cocycle_S(n: int, p: int) -> Chain:
    """Weight-2^(n-p-1) nontrivial cocycle: all faces parallel to *..*0..0
    with a 0 right after the stars. Already canonical for the antipodal
    quotient."""
    if not 1 <= p <= n - 1:
        raise ValueError("need 1 <= p <= n-1")
    stars = ((1 << p) - 1) << (n - p)
    faces = set()
    for tail in range(1 << (n - p - 1)):
        faces.add(Face(n, stars, tail))
    return Chain(n, p, frozenset(faces))


def canonical_cocycle(qc: QuotientComplex, positions: Iterable[int]) -> Chain:
    """Sum of all canonical faces whose star set is exactly `positions`."""
    pos = sorted(set(positions))
    if len(pos) != qc.p:
        raise ValueError(f"expected {qc.p} star positions, got {len(pos)}")
    n = qc.n
    stars = 0
    for j in pos:
        stars |= 1 << (n - 1 - j)
    off_bits = [b for b in range(n) if not (stars >> b) & 1]
    faces = set()
    for pattern in range(1 << (n - qc.p)):
        bits = 0
        for i, b in enumerate(off_bits):
            if (pattern >> i) & 1:
                bits |= 1 << b
        faces.add(quotient.canonical_rep(Face(n, stars, bits), qc.code))
    return Chain(n, qc.p, frozenset(faces))


def product_chain(
    n: int, words: Sequence[int], parts: Sequence[int]
) -> Chain:
    """Cube-level product chain: sum of standard faces over all tuples of
    disjoint star sets, the i-th drawn inside the support of words[i] with
    parts[i] elements. Tuples are counted with multiplicity, so a direction
    reached an even number of times cancels."""
    if len(words) != len(parts):
        raise ValueError("one part size per word")
    p = sum(parts)
    faces: set = set()
    supports = [[n - 1 - b for b in range(n) if (w >> b) & 1] for w in words]

    def rec(i: int, used: frozenset, acc: List[int]) -> None:
        if i == len(words):
            faces.symmetric_difference_update(
                {standard_face(n, acc)}
            )
            return
        if parts[i] < 0:
            return
        for pick in combinations([j for j in supports[i] if j not in used], parts[i]):
            rec(i + 1, used | frozenset(pick), acc + list(pick))

    if all(q >= 0 for q in parts):
        rec(0, frozenset(), [])
    return Chain(n, p, frozenset(faces))


def product_cycle(
    qc: QuotientComplex, words: Sequence[int], parts: Sequence[int]
) -> Chain:
    """Projection of a product chain built on a basis of the quotienting
    code; the result is a cycle of the quotient."""
    words = list(words)
    code = qc.code
    if len(words) != code.k or any(w not in code.codewords for w in words):
        raise ValueError("words must be codewords of the quotienting code")
    if f2la.rank(BitMatrix(words, qc.n)) != code.k:
        raise ValueError("words do not form a basis of the quotienting code")
    if sum(parts) != qc.p:
        raise ValueError(f"part sizes must sum to p={qc.p}")
    return quotient.canonicalize(product_chain(qc.n, words, parts), code)


@dataclass(frozen=True)
class LogicalSet:
    x_logicals: Tuple[Chain, ...]
    z_logicals: Tuple[Chain, ...]


def compositions(total: int, parts: int) -> List[Tuple[int, ...]]:
    """Nonnegative integer tuples of length `parts` summing to `total`,
    in lexicographic order."""
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total + 1):
        out += [(first,) + rest for rest in compositions(total - first, parts - 1)]
    return out


def logical_basis(ci: CodeInstance) -> LogicalSet:
    """Product cycles for every composition of p (X side) and a rank-filtered
    family of canonical cocycles (Z side); both sides have size dimension(ci)
    and pair invertibly."""
    qc = ci.qc
    dim = dimension(ci)
    gens = list(qc.code.generators)
    xs = [product_cycle(qc, gens, parts) for parts in compositions(qc.p, qc.k)]
    if len(xs) != dim:
        raise InternalInconsistency(
            f"{len(xs)} product cycles but rank dimension {dim}"
        )

    span = RowEchelon(ci.hx_matrix)  # Z-stabilizer supports
    zs: List[Chain] = []
    for pos in combinations(range(qc.n), qc.p):
        if len(zs) == dim:
            break
        cand = canonical_cocycle(qc, pos)
        if span.add(chain_to_mask(ci, cand)):
            zs.append(cand)
    if len(zs) != dim:
        raise InternalInconsistency("rank filtering found too few cocycle classes")

    pairing = pairing_matrix(xs, zs)
    if f2la.rank(pairing) != dim:
        raise InternalInconsistency("logical pairing matrix is singular")
    return LogicalSet(tuple(xs), tuple(zs))


def pairing_matrix(xs: Sequence[Chain], zs: Sequence[Chain]) -> BitMatrix:
    """Mod-2 intersection counts, rows = x logicals, columns = z logicals."""
    rows = []
    for x in xs:
        v = 0
        for j, z in enumerate(zs):
            v |= cube.intersection_parity(x, z) << j
        rows.append(v)
    return BitMatrix(rows, len(zs))


def export_check_matrix(rows: Sequence[Tuple[int, ...]], ncols: int) -> str:
    """Sparse text format: `rows cols` header, then ascending column indices."""
    lines = [f"{len(rows)} {ncols}"]
    lines += [" ".join(str(j) for j in row) for row in rows]
    return "\n".join(lines) + "\n"


def parse_check_matrix(text: str) -> Tuple[Tuple[Tuple[int, ...], ...], int]:
    lines = text.splitlines()
    nrows, ncols = (int(t) for t in lines[0].split())
    if len(lines) < nrows + 1:
        raise ValueError("truncated check matrix file")
    rows = []
    for ln in lines[1 : nrows + 1]:
        row = tuple(int(t) for t in ln.split())
        if any(not 0 <= j < ncols for j in row) or list(row) != sorted(set(row)):
            raise ValueError("row entries must be ascending column indices")
        rows.append(row)
    return tuple(rows), ncols


def export_qubit_map(ci: CodeInstance) -> str:
    return "".join(f"{i} {cube.face_literal(f)}\n" for i, f in enumerate(ci.qubits))


def export_chains(chains: Iterable[Chain]) -> str:
    """One chain per line, comma-separated face literals."""
    return "".join(
        ",".join(cube.face_literal(f) for f in c.sorted_faces()) + "\n" for c in chains
    )
