"""Recursive filling and cofilling of syndromes on the cube and its quotients.

A filling of a boundary z is a chain F with dF = z; a cofilling of a
coboundary z is a cochain F with delta(F) = z. All algorithms here cut one
coordinate, recurse on the three resulting slices, and reassemble, choosing
the cut that minimizes a per-mode size estimate. Quotient inputs are handled
in their symmetric lifted form: a chain over the plain cube that is invariant
under translation by every codeword, with projection left to the caller.

Internally chains are sets of (stars, bits) pairs plus an explicit width n;
public entry points take and return `cube.Chain` values and validate their
preconditions. Size guarantees, per fill dimension p on width n:

  cube fill      |F| <= (n-p+1)/(2p) |z|     (cut and side both optimized)
  cube cofill    |F| <= |z|
  symmetric fill |F| <= fill_constant(n,p) |z| <= (n-p)/2 |z|
  symmetric cofill |F| <= cofill_constant(n,p) |z| <= (p+1) |z|

The k=2 quotient routines satisfy the same exactness contract; their sizes
are only tracked against `k2_envelope`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .cube import Chain, Face, boundary, coboundary
from .errors import (
    NotABoundary,
    NotACoboundary,
    NotACocycle,
    NotACycle,
    NotSymmetric,
    Unsupported,
)
from .f2la import BitMatrix, nullspace_basis, solve, vector
from .quotient import QuotientComplex

_FaceSet = Set[Tuple[int, int]]

BASE_WIDTH = 3  # below this, fall back to exact linear solves
_MIN_SOLVE_LIMIT = 18  # nullity cap for exact weight minimization at the base

STAR = 2  # slice labels: 0, 1, STAR


# ---------------------------------------------------------------------------
# size constants


@dataclass(frozen=True)
class CutChoice:
    """A cut coordinate with the size bound its one-step estimate predicts.
    `flip` records whether the 0/1 sides should swap roles."""

    coordinate: int
    bound: Fraction
    flip: bool = False


@dataclass(frozen=True)
class BoundConstants:
    """Filling-size constants for the antipodal quotient at (n, p)."""

    n: int
    p: int
    c: Fraction  # stated closed form for fills
    c_prime: Fraction  # stated closed form for cofills
    loose_fill: Fraction  # (n-p)/2
    loose_cofill: Fraction  # p+1


def bound_constants(n: int, p: int) -> BoundConstants:
    c = Fraction((n - p + 1) * (n - p), 2 * p) * sum(
        (Fraction(1, m) for m in range(n - p + 1, n + 1)), Fraction(0)
    )
    c_prime = (n - p - 1) * sum(
        (Fraction(1, m) for m in range(n - p, n + 1)), Fraction(0)
    )
    return BoundConstants(n, p, c, c_prime, Fraction(n - p, 2), Fraction(p + 1))


@lru_cache(maxsize=None)
def fill_constant(n: int, p: int) -> Fraction:
    """Guaranteed |F|/|z| for the symmetric fill; solves the cut-averaging
    recurrence, base (n-1)/2 at p=1. Always <= (n-p)/2."""
    if not 1 <= p <= n - 1:
        raise ValueError(f"no fill constant for n={n}, p={p}")
    if p == 1:
        return Fraction(n - 1, 2)
    return Fraction((n - p) * (n - p + 1), 2 * n * p) + Fraction(p - 1, p) * fill_constant(
        n - 1, p - 1
    )


@lru_cache(maxsize=None)
def cofill_constant(n: int, p: int) -> Fraction:
    """Guaranteed |F|/|z| for the symmetric cofill; base 1 at p=0 (vertex
    cofills pick the lighter side of a 2-coloring). Always <= p+1."""
    if not 0 <= p <= n - 1:
        raise ValueError(f"no cofill constant for n={n}, p={p}")
    if p == 0:
        return Fraction(1)
    return Fraction(n - p - 1, n) + cofill_constant(n - 1, p - 1)


def k2_envelope(n: int, p: int) -> Fraction:
    """Closed-form size envelope for fills in a k=2 quotient; O(p!)."""
    total = Fraction(0)
    for ell in range(p + 1):
        total += (
            Fraction((n - p + 2) ** ell)
            * Fraction(factorial(n - ell + 1) * factorial(p))
            / Fraction(factorial(n) * factorial(p - ell))
        )
    return Fraction((n - p + 1) ** 2, 2) * total


# ---------------------------------------------------------------------------
# raw-set plumbing


def _chain_to_set(c: Chain) -> _FaceSet:
    return {(f.stars, f.bits) for f in c.faces}


def _set_to_chain(n: int, p: int, faces: _FaceSet) -> Chain:
    return Chain(n, p, frozenset(Face(n, s, b) for s, b in faces))


def _strip_bit(x: int, b: int) -> int:
    return ((x >> (b + 1)) << b) | (x & ((1 << b) - 1))


def _insert_bit(x: int, b: int) -> int:
    return ((x >> b) << (b + 1)) | (x & ((1 << b) - 1))


def _split(n: int, faces: _FaceSet, coord: int) -> Tuple[_FaceSet, _FaceSet, _FaceSet]:
    """Slice by the symbol at `coord` (string position); width drops by one."""
    b = n - 1 - coord
    z0: _FaceSet = set()
    z1: _FaceSet = set()
    zs: _FaceSet = set()
    for s, v in faces:
        t = (_strip_bit(s, b), _strip_bit(v, b))
        if (s >> b) & 1:
            zs.add(t)
        elif (v >> b) & 1:
            z1.add(t)
        else:
            z0.add(t)
    return z0, z1, zs


def _embed(faces: Iterable[Tuple[int, int]], n_sub: int, coord: int, kind: int) -> _FaceSet:
    """Re-insert the cut coordinate with the given symbol (0, 1 or STAR)."""
    b = n_sub - coord
    out: _FaceSet = set()
    for s, v in faces:
        ss, vv = _insert_bit(s, b), _insert_bit(v, b)
        if kind == STAR:
            ss |= 1 << b
        elif kind == 1:
            vv |= 1 << b
        out.add((ss, vv))
    return out


def _translate_set(faces: _FaceSet, y: int) -> _FaceSet:
    return {(s, v ^ (y & ~s)) for s, v in faces}


def _tally(n: int, faces: _FaceSet) -> Tuple[List[int], List[int], List[int]]:
    """Per-coordinate counts (w0, w1, ws) of the three slice sizes."""
    ws = [0] * n
    w1 = [0] * n
    for s, v in faces:
        x = s
        while x:
            bit = (x & -x).bit_length() - 1
            ws[n - 1 - bit] += 1
            x &= x - 1
        x = v
        while x:
            bit = (x & -x).bit_length() - 1
            w1[n - 1 - bit] += 1
            x &= x - 1
    total = len(faces)
    w0 = [total - ws[j] - w1[j] for j in range(n)]
    return w0, w1, ws


def _word_support(n: int, w: int) -> List[int]:
    return [j for j in range(n) if (w >> (n - 1 - j)) & 1]


def _reduce_words(words: Sequence[int]) -> Tuple[int, ...]:
    """Independent nonzero span generators, by leading-bit elimination."""
    pivots: Dict[int, int] = {}
    for w in words:
        while w:
            lead = w.bit_length() - 1
            if lead in pivots:
                w ^= pivots[lead]
            else:
                pivots[lead] = w
                break
    return tuple(sorted(pivots.values()))


def _span(words: Sequence[int]) -> List[int]:
    out = [0]
    for g in words:
        out += [w ^ g for w in out]
    return out


# ---------------------------------------------------------------------------
# cut selection


def _best_cut(
    n: int,
    faces: _FaceSet,
    allowed: Iterable[int],
    score,
) -> CutChoice:
    """Deterministic argmin of `score(w0, w1, ws) -> (est, flip)` over cuts."""
    w0, w1, ws = _tally(n, faces)
    best: Optional[CutChoice] = None
    for j in sorted(allowed):
        est, flip = score(w0[j], w1[j], ws[j])
        if best is None or est < best.bound:
            best = CutChoice(j, est, flip)
    if best is None:
        raise ValueError("no admissible cut coordinate")
    return best


def _score_fill(n: int, p: int):
    a, b = Fraction(n - p, 2 * p), Fraction(n + p, 2 * p)

    def score(w0: int, w1: int, ws: int) -> Tuple[Fraction, bool]:
        plain = a * w0 + b * w1
        swapped = a * w1 + b * w0
        return (plain, False) if plain <= swapped else (swapped, True)

    return score


def _score_cofill(w0: int, w1: int, ws: int) -> Tuple[Fraction, bool]:
    return Fraction(2 * min(w0, w1) + ws), w1 < w0


def _score_sym_fill(n: int, p: int):
    if p == 1:
        lead, star = Fraction(n - 1), Fraction(0)
    else:
        lead, star = Fraction(n - p, p), Fraction(n, p) * fill_constant(n - 1, p - 1)

    def score(w0: int, w1: int, ws: int) -> Tuple[Fraction, bool]:
        return lead * w0 + star * ws, False

    return score


def _score_sym_cofill(n: int, p: int):
    cc = cofill_constant(n - 1, p - 1)

    def score(w0: int, w1: int, ws: int) -> Tuple[Fraction, bool]:
        return 2 * (1 + cc) * w0 + cc * ws, False

    return score


def _score_gen_fill(n: int, p: int):
    inner = k2_envelope(n - 1, p - 1) if p >= 2 else Fraction(0)
    lead = Fraction(n - p + 1)  # ~ 2 * symmetric fill constant

    def score(w0: int, w1: int, ws: int) -> Tuple[Fraction, bool]:
        return lead * (w0 + inner * ws) + inner * ws, False

    return score


def choose_cut(n: int, p: int, z: Chain, mode: str) -> CutChoice:
    """Best cut for one recursion step. `p` is the output dimension for the
    fill modes; ties break to the lowest coordinate."""
    if mode not in ("fill", "cofill", "symmetric-fill", "symmetric-cofill"):
        raise ValueError(f"unknown cut mode {mode!r}")
    faces = _chain_to_set(z)
    if not faces:
        return CutChoice(0, Fraction(0), False)
    if mode == "fill":
        return _best_cut(n, faces, range(n), _score_fill(n, p))
    if mode == "cofill":
        return _best_cut(n, faces, range(n), _score_cofill)
    if mode == "symmetric-fill":
        return _best_cut(n, faces, range(n), _score_sym_fill(n, p))
    return _best_cut(n, faces, range(n), _score_sym_cofill(n, p))


# ---------------------------------------------------------------------------
# exact base solves


def _cube_boundary_set(n: int, faces: Iterable[Tuple[int, int]]) -> _FaceSet:
    out: _FaceSet = set()
    for s, v in faces:
        x = s
        while x:
            b = x & -x
            x ^= b
            out ^= {(s ^ b, v), (s ^ b, v | b)}
    return out


def _cube_coboundary_set(n: int, faces: Iterable[Tuple[int, int]]) -> _FaceSet:
    mask = (1 << n) - 1
    out: _FaceSet = set()
    for s, v in faces:
        free = mask & ~s
        while free:
            b = free & -free
            free ^= b
            out ^= {(s | b, v & ~b)}
    return out


def _canon(face: Tuple[int, int], span: Sequence[int]) -> Tuple[int, int]:
    s, v = face
    off = ~s
    return s, min(v ^ (w & off) for w in span)


def _project_orbits(faces: _FaceSet, span: Sequence[int]) -> _FaceSet:
    reps = {_canon(f, span) for f in faces}
    if len(reps) * len(span) != len(faces):
        raise NotSymmetric("chain is not a union of full translation orbits")
    return reps


def _lift_orbits(reps: Iterable[Tuple[int, int]], span: Sequence[int]) -> _FaceSet:
    out: _FaceSet = set()
    for s, v in reps:
        off = ~s
        for w in span:
            out.add((s, v ^ (w & off)))
    return out


def _enum_canon(n: int, dim: int, span: Sequence[int]) -> List[Tuple[int, int]]:
    found = set()
    for stars in range(1 << n):
        if stars.bit_count() != dim:
            continue
        off = [b for b in range(n) if not (stars >> b) & 1]
        for pattern in range(1 << (n - dim)):
            bits = 0
            for i, b in enumerate(off):
                if (pattern >> i) & 1:
                    bits |= 1 << b
            found.add(_canon((stars, bits), span))
    return sorted(found)


def _base_solve(
    n: int, p_out: int, z: _FaceSet, words: Sequence[int], cofill: bool
) -> _FaceSet:
    """Exact minimal solve of d(X) = z (or delta(X) = z) on a small quotient;
    returns the symmetric lift of X."""
    span = _span(words)
    rhs_dim = p_out - 1 if not cofill else p_out + 1
    cols = _enum_canon(n, p_out, span)
    rows = _enum_canon(n, rhs_dim, span)
    row_index = {f: i for i, f in enumerate(rows)}
    op = _cube_coboundary_set if cofill else _cube_boundary_set

    mat_rows = [0] * len(rows)
    for j, f in enumerate(cols):
        image: _FaceSet = set()
        for g in op(n, [f]):
            image ^= {_canon(g, span)}
        for g in image:
            mat_rows[row_index[g]] |= 1 << j

    rhs = 0
    for g in _project_orbits(z, span):
        rhs |= 1 << row_index[g]

    m = BitMatrix(mat_rows, len(cols))
    x = solve(m, vector(len(rows), rhs))
    if x is None:
        raise (NotACoboundary if cofill else NotABoundary)(
            "input is not in the image of the requested operator"
        )
    best = x.bits
    kernel = [k.bits for k in nullspace_basis(m)]
    if len(kernel) <= _MIN_SOLVE_LIMIT:
        best_w = best.bit_count()
        cur = x.bits
        gray = 0
        for step in range(1, 1 << len(kernel)):
            g = step ^ (step >> 1)
            changed = g ^ gray
            gray = g
            cur ^= kernel[(changed & -changed).bit_length() - 1]
            w = cur.bit_count()
            if w < best_w or (w == best_w and cur < best):
                best, best_w = cur, w
    picked = [cols[j] for j in range(len(cols)) if (best >> j) & 1]
    return _lift_orbits(picked, span)


def _cofill_vertices(n: int, z: _FaceSet, words: Sequence[int]) -> _FaceSet:
    """Vertex-set cofill of a symmetric 1-coboundary: 2-color the quotient
    graph along edges of z, keep the lighter color class."""
    span = _span(words)
    zq = _project_orbits(z, span)
    root = _canon((0, 0), span)
    color: Dict[Tuple[int, int], int] = {root: 0}
    stack = [root]
    while stack:
        vert = stack.pop()
        _, v = vert
        for b in range(n):
            edge = _canon((1 << b, v & ~(1 << b)), span)
            nxt = _canon((0, v ^ (1 << b)), span)
            want = color[vert] ^ (1 if edge in zq else 0)
            if nxt in color:
                if color[nxt] != want:
                    raise NotACoboundary("inconsistent vertex 2-coloring")
            else:
                color[nxt] = want
                stack.append(nxt)
    ones = {vert for vert, c in color.items() if c == 1}
    zeros = {vert for vert, c in color.items() if c == 0}
    picked = ones if len(ones) <= len(zeros) else zeros
    return _lift_orbits(picked, span)


# ---------------------------------------------------------------------------
# plain-cube recursions


def _fill(n: int, p: int, z: _FaceSet) -> _FaceSet:
    """Fill a (p-1)-cycle of the cube: keep one side under a star, recurse on
    the XOR of the two sides."""
    if not z:
        return set()
    if n == p:
        only = ((1 << n) - 1, 0)
        if z != _cube_boundary_set(n, [only]):
            raise NotABoundary("top-dimensional fill is overdetermined")
        return {only}
    if n <= BASE_WIDTH:
        return _base_solve(n, p, z, (), cofill=False)
    cut = _best_cut(n, z, range(n), _score_fill(n, p))
    z0, z1, zs = _split(n, z, cut.coordinate)
    if cut.flip:
        z0, z1 = z1, z0
    sub = _fill(n - 1, p, z0 ^ z1)
    out = _embed(z1, n - 1, cut.coordinate, STAR)
    out |= _embed(sub, n - 1, cut.coordinate, 1 if cut.flip else 0)
    return out


def _cofill(n: int, p: int, z: _FaceSet) -> _FaceSet:
    """Cofill a (p+1)-cocycle of the cube: cofill the lighter side, correct
    the other side by the star slice."""
    if not z:
        return set()
    if n == p + 1:
        only = ((1 << n) - 1, 0)
        if z != {only}:
            raise NotACoboundary("unexpected top-dimensional cocycle")
        return {(only[0] ^ 1, 0)}
    if n <= BASE_WIDTH:
        return _base_solve(n, p, z, (), cofill=True)
    cut = _best_cut(n, z, range(n), _score_cofill)
    z0, z1, zs = _split(n, z, cut.coordinate)
    if cut.flip:
        z0, z1 = z1, z0
    y0 = _cofill(n - 1, p, z0)
    y1 = y0 ^ zs
    first, second = (0, 1) if not cut.flip else (1, 0)
    return _embed(y0, n - 1, cut.coordinate, first) | _embed(
        y1, n - 1, cut.coordinate, second
    )


# ---------------------------------------------------------------------------
# symmetric (k=1) and k=2 quotient recursions


def _fill_quotient(n: int, p: int, z: _FaceSet, words: Tuple[int, ...]) -> _FaceSet:
    words = _reduce_words(words)
    if len(words) == 0:
        return _fill(n, p, z)
    if len(words) == 1:
        return _sym_fill(n, p, z, words[0])
    if len(words) == 2:
        return _gen_fill2(n, p, z, words)
    raise Unsupported("fillings are only implemented for k <= 2 quotients")


def _cofill_quotient(n: int, p: int, z: _FaceSet, words: Tuple[int, ...]) -> _FaceSet:
    words = _reduce_words(words)
    if p == 0 and words:
        return _cofill_vertices(n, z, words)
    if len(words) == 0:
        return _cofill(n, p, z)
    if len(words) == 1:
        return _sym_cofill(n, p, z, words[0])
    if len(words) == 2:
        return _gen_cofill2(n, p, z, words)
    raise Unsupported("cofillings are only implemented for k <= 2 quotients")


def _sym_fill(n: int, p: int, z: _FaceSet, word: int) -> _FaceSet:
    """Fill a boundary symmetric under `word`: fill the star slice in the
    smaller quotient, fill one side in the plain cube, translate it across."""
    if not z:
        return set()
    if n <= BASE_WIDTH:
        return _base_solve(n, p, z, (word,), cofill=False)
    support = _word_support(n, word)
    cut = _best_cut(n, z, support, _score_sym_fill(n, p))
    b = n - 1 - cut.coordinate
    word_sub = _strip_bit(word, b)
    z0, z1, zs = _split(n, z, cut.coordinate)
    f_star = _fill_quotient(n - 1, p - 1, zs, (word_sub,)) if p >= 2 else set()
    f0 = _fill(n - 1, p, z0 ^ f_star)
    f1 = _translate_set(f0, word_sub)
    out = _embed(f0, n - 1, cut.coordinate, 0)
    out |= _embed(f1, n - 1, cut.coordinate, 1)
    out |= _embed(f_star, n - 1, cut.coordinate, STAR)
    return out


def _sym_cofill(n: int, p: int, z: _FaceSet, word: int) -> _FaceSet:
    """Cofill a coboundary symmetric under `word`: cofill one side in the
    cube, translate it across, absorb the mismatch into the star slice."""
    if not z:
        return set()
    if p == 0:
        return _cofill_vertices(n, z, (word,))
    if n <= BASE_WIDTH:
        return _base_solve(n, p, z, (word,), cofill=True)
    support = _word_support(n, word)
    cut = _best_cut(n, z, support, _score_sym_cofill(n, p))
    b = n - 1 - cut.coordinate
    word_sub = _strip_bit(word, b)
    z0, z1, zs = _split(n, z, cut.coordinate)
    f0 = _cofill(n - 1, p, z0)
    f1 = _translate_set(f0, word_sub)
    f_star = _cofill_quotient(n - 1, p - 1, zs ^ f0 ^ f1, (word_sub,))
    out = _embed(f0, n - 1, cut.coordinate, 0)
    out |= _embed(f1, n - 1, cut.coordinate, 1)
    out |= _embed(f_star, n - 1, cut.coordinate, STAR)
    return out


def _k2_cut_words(
    n: int, words: Tuple[int, int], coord: int
) -> Tuple[int, int]:
    """Split the k=2 span at a cut: (stays, crosses) with `stays` fixing the
    cut coordinate to 0 and `crosses` flipping it."""
    b = n - 1 - coord
    nonzero = [words[0], words[1], words[0] ^ words[1]]
    stays = [w for w in nonzero if not (w >> b) & 1]
    crosses = [w for w in nonzero if (w >> b) & 1]
    return stays[0], min(crosses)


def _gen_fill2(n: int, p: int, z: _FaceSet, words: Tuple[int, int]) -> _FaceSet:
    if not z:
        return set()
    if n <= BASE_WIDTH:
        return _base_solve(n, p, z, words, cofill=False)
    support = sorted(
        set(_word_support(n, words[0])) | set(_word_support(n, words[1]))
    )
    cut = _best_cut(n, z, support, _score_gen_fill(n, p))
    b = n - 1 - cut.coordinate
    stays, crosses = _k2_cut_words(n, words, cut.coordinate)
    stays_sub = _strip_bit(stays, b)
    crosses_sub = _strip_bit(crosses, b)
    z0, z1, zs = _split(n, z, cut.coordinate)
    f_star = (
        _fill_quotient(n - 1, p - 1, zs, (stays_sub, crosses_sub)) if p >= 2 else set()
    )
    f0 = _fill_quotient(n - 1, p, z0 ^ f_star, (stays_sub,))
    f1 = _translate_set(f0, crosses_sub)
    out = _embed(f0, n - 1, cut.coordinate, 0)
    out |= _embed(f1, n - 1, cut.coordinate, 1)
    out |= _embed(f_star, n - 1, cut.coordinate, STAR)
    return out


def _gen_cofill2(n: int, p: int, z: _FaceSet, words: Tuple[int, int]) -> _FaceSet:
    if not z:
        return set()
    if p == 0:
        return _cofill_vertices(n, z, words)
    if n <= BASE_WIDTH:
        return _base_solve(n, p, z, words, cofill=True)
    support = sorted(
        set(_word_support(n, words[0])) | set(_word_support(n, words[1]))
    )
    cut = _best_cut(n, z, support, _score_sym_cofill(n, p))
    b = n - 1 - cut.coordinate
    stays, crosses = _k2_cut_words(n, words, cut.coordinate)
    stays_sub = _strip_bit(stays, b)
    crosses_sub = _strip_bit(crosses, b)
    z0, z1, zs = _split(n, z, cut.coordinate)
    f0 = _cofill_quotient(n - 1, p, z0, (stays_sub,))
    f1 = _translate_set(f0, crosses_sub)
    f_star = _cofill_quotient(
        n - 1, p - 1, zs ^ f0 ^ f1, (stays_sub, crosses_sub)
    )
    out = _embed(f0, n - 1, cut.coordinate, 0)
    out |= _embed(f1, n - 1, cut.coordinate, 1)
    out |= _embed(f_star, n - 1, cut.coordinate, STAR)
    return out


# ---------------------------------------------------------------------------
# public entry points


def _require(cond: bool, exc: type, msg: str) -> None:
    if not cond:
        raise exc(msg)


def _check_symmetric(z: Chain, words: Sequence[int]) -> None:
    faces = _chain_to_set(z)
    for w in words:
        if _translate_set(faces, w) != faces:
            raise NotSymmetric(f"chain is not invariant under word {w:#x}")


def cube_fill(n: int, p: int, z: Chain) -> Chain:
    """p-chain F of Q^n with dF = z, for a (p-1)-cycle z;
    |F| <= (n-p+1)/(2p) |z|."""
    _require(1 <= p <= n, ValueError, f"fill dimension p={p} outside [1, {n}]")
    _require(z.n == n and z.p == p - 1, ValueError, "z must be a (p-1)-chain of Q^n")
    if p >= 2 and not boundary(z).is_empty():
        raise NotACycle("fill input has nonzero boundary")
    out = _set_to_chain(n, p, _fill(n, p, _chain_to_set(z)))
    assert boundary(out) == z
    return out


def cube_cofill(n: int, p: int, z: Chain) -> Chain:
    """p-cochain F of Q^n with delta(F) = z, for a (p+1)-cocycle z;
    |F| <= |z|."""
    _require(0 <= p <= n - 1, ValueError, f"cofill dimension p={p} outside [0, {n - 1}]")
    _require(z.n == n and z.p == p + 1, ValueError, "z must be a (p+1)-chain of Q^n")
    if p + 1 <= n - 1 and not coboundary(z).is_empty():
        raise NotACocycle("cofill input has nonzero coboundary")
    out = _set_to_chain(n, p, _cofill(n, p, _chain_to_set(z)))
    assert coboundary(out) == z
    return out


def sym_fill(n: int, p: int, z: Chain, word: int) -> Chain:
    """Fill for the quotient by the one-dimensional code {0, word}, on lifted
    chains. For the all-ones word this is the antipodal quotient and the
    output obeys |F| <= (n-p)/2 |z|."""
    _require(1 <= p <= n - 1, ValueError, f"fill dimension p={p} outside [1, {n - 1}]")
    _require(z.n == n and z.p == p - 1, ValueError, "z must be a (p-1)-chain of Q^n")
    _require(0 < word < (1 << n), ValueError, "word must be a nonzero n-bit vector")
    _check_symmetric(z, (word,))
    if p >= 2 and not boundary(z).is_empty():
        raise NotACycle("fill input has nonzero boundary")
    out = _set_to_chain(n, p, _sym_fill(n, p, _chain_to_set(z), word))
    assert boundary(out) == z
    return out


def sym_cofill(n: int, p: int, z: Chain, word: int) -> Chain:
    """Cofill for the quotient by {0, word}, on lifted chains. For the
    all-ones word the output obeys |F| <= (p+1) |z|."""
    _require(0 <= p <= n - 2, ValueError, f"cofill dimension p={p} outside [0, {n - 2}]")
    _require(z.n == n and z.p == p + 1, ValueError, "z must be a (p+1)-chain of Q^n")
    _require(0 < word < (1 << n), ValueError, "word must be a nonzero n-bit vector")
    _check_symmetric(z, (word,))
    if z.p <= n - 1 and not coboundary(z).is_empty():
        raise NotACocycle("cofill input has nonzero coboundary")
    out = _set_to_chain(n, p, _sym_cofill(n, p, _chain_to_set(z), word))
    assert coboundary(out) == z
    return out


def hemi_fill(n: int, p: int, z: Chain) -> Chain:
    """Symmetric fill for the antipodal quotient; |F| <= (n-p)/2 |z|."""
    return sym_fill(n, p, z, (1 << n) - 1)


def hemi_cofill(n: int, p: int, z: Chain) -> Chain:
    """Symmetric cofill for the antipodal quotient; |F| <= (p+1) |z|."""
    return sym_cofill(n, p, z, (1 << n) - 1)


def gen_fill_k2(qc: QuotientComplex, z: Chain) -> Chain:
    """Symmetric fill for a k=2 quotient, on lifted chains; exact by
    construction, size tracked against k2_envelope only."""
    if qc.k != 2:
        raise Unsupported(f"gen_fill_k2 needs a k=2 quotient, got k={qc.k}")
    n, p = qc.n, qc.p
    _require(z.n == n and z.p == p - 1, ValueError, "z must be a (p-1)-chain of Q^n")
    _check_symmetric(z, qc.code.generators)
    if p >= 2 and not boundary(z).is_empty():
        raise NotACycle("fill input has nonzero boundary")
    out = _set_to_chain(n, p, _gen_fill2(n, p, _chain_to_set(z), qc.code.generators))
    assert boundary(out) == z
    return out


def gen_cofill_k2(qc: QuotientComplex, z: Chain) -> Chain:
    """Symmetric cofill for a k=2 quotient, on lifted chains."""
    if qc.k != 2:
        raise Unsupported(f"gen_cofill_k2 needs a k=2 quotient, got k={qc.k}")
    n, p = qc.n, qc.p
    _require(z.n == n and z.p == p + 1, ValueError, "z must be a (p+1)-chain of Q^n")
    _check_symmetric(z, qc.code.generators)
    if z.p <= n - 1 and not coboundary(z).is_empty():
        raise NotACocycle("cofill input has nonzero coboundary")
    out = _set_to_chain(n, p, _gen_cofill2(n, p, _chain_to_set(z), qc.code.generators))
    assert coboundary(out) == z
    return out
