"""Experiment harness: decode trials, brute-force distance and soundness
oracles, and measured filling-constant statistics.

Randomness is deterministic and thread-count independent: trial t of a run
with seed s draws from a splitmix64 stream seeded with
`splitmix64(splitmix64(s) + t)`, so reports depend only on (instance, seed,
trials).
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import csscode, decoder, filler, quotient
from .csscode import CodeInstance
from .cube import Chain, face_literal
from .decoder import Correction
from .errors import InvalidSyndrome, TooLarge, Unsupported
from .f2la import RowEchelon

_M64 = (1 << 64) - 1

LADDER_GUARD = 10**8
EXHAUSTIVE_GUARD = 10**7


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _M64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _M64
    return x ^ (x >> 31)


class SplitMix:
    """splitmix64 stream; `below` is unbiased via rejection."""

    __slots__ = ("state",)

    def __init__(self, state: int):
        self.state = state & _M64

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _M64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            v = self.next64()
            if v < limit:
                return v % bound


def trial_rng(seed: int, index: int) -> SplitMix:
    return SplitMix(splitmix64((splitmix64(seed) + index) & _M64))


def sample_support(rng: SplitMix, n: int, weight: int) -> Tuple[int, ...]:
    """Uniform weight-`weight` subset of range(n) (Floyd's algorithm)."""
    if weight > n:
        raise ValueError("weight exceeds the number of qubits")
    chosen: set = set()
    for j in range(n - weight, n):
        t = rng.below(j + 1)
        chosen.add(t if t not in chosen else j)
    return tuple(sorted(chosen))


def instance_label(ci: CodeInstance) -> str:
    qc = ci.qc
    return f"n{qc.n}p{qc.p}c{qc.n}.{qc.k}.{qc.code.d}"


# ---------------------------------------------------------------------------
# decoding trials


@dataclass(frozen=True)
class TrialReport:
    instance: str
    weight: int
    trials: int
    mode: str  # random | exhaustive
    seed: int
    successes: int
    failures: int  # trials with any logical failure
    logical_x_failures: int
    logical_z_failures: int
    invalid_syndromes: int
    wall_time: float  # seconds; not part of the CSV row

    def csv_row(self) -> str:
        return (
            f"{self.instance},{self.weight},{self.trials},{self.mode},{self.seed},"
            f"{self.successes},{self.failures},{self.logical_x_failures},"
            f"{self.logical_z_failures},{self.invalid_syndromes}"
        )


TRIAL_CSV_HEADER = (
    "instance,weight,trials,mode,seed,successes,failures,"
    "logical_x_failures,logical_z_failures,invalid_syndromes"
)


def _support_chain(ci: CodeInstance, support: Sequence[int]) -> Chain:
    return Chain(
        ci.qc.n, ci.qc.p, frozenset(ci.qubits[q] for q in support)
    )


def _run_one(ci: CodeInstance, e_x: Chain, e_z: Chain) -> Tuple[int, int, int]:
    """(x_fail, z_fail, invalid) flags for one decode of the given error."""
    truth = Correction(e_x, e_z)
    try:
        out = decoder.decode(ci, decoder.syndrome_of(ci, truth))
    except InvalidSyndrome:
        return 0, 0, 1
    res = decoder.verify(ci, truth, out)
    return int(res.logical_x_failure), int(res.logical_z_failure), 0


def run_trials(
    ci: CodeInstance, weight: int, trials: int, seed: int, threads: int = 1
) -> TrialReport:
    """Decode `trials` uniform weight-`weight` errors (independent X and Z
    supports per trial); deterministic given (instance, seed, trials)."""
    if weight > ci.N:
        raise ValueError("weight exceeds the number of qubits")

    def one(t: int) -> Tuple[int, int, int]:
        rng = trial_rng(seed, t)
        e_x = _support_chain(ci, sample_support(rng, ci.N, weight))
        e_z = _support_chain(ci, sample_support(rng, ci.N, weight))
        return _run_one(ci, e_x, e_z)

    start = time.perf_counter()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(one, range(trials)))
    else:
        results = [one(t) for t in range(trials)]
    elapsed = time.perf_counter() - start
    return _tally_trials(ci, weight, "random", seed, results, elapsed)


def run_exhaustive(ci: CodeInstance, weight: int, threads: int = 1) -> TrialReport:
    """Decode every weight-`weight` X error and every weight-`weight` Z error
    (one side at a time); the deterministic counterpart of run_trials."""
    count = math.comb(ci.N, weight)
    if 2 * count > EXHAUSTIVE_GUARD:
        raise TooLarge(f"{2 * count} single-side errors exceed the guard")
    empty = Chain(ci.qc.n, ci.qc.p, frozenset())
    jobs: List[Tuple[Chain, Chain]] = []
    for support in combinations(range(ci.N), weight):
        jobs.append((_support_chain(ci, support), empty))
    for support in combinations(range(ci.N), weight):
        jobs.append((empty, _support_chain(ci, support)))

    start = time.perf_counter()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda j: _run_one(ci, *j), jobs))
    else:
        results = [_run_one(ci, e_x, e_z) for e_x, e_z in jobs]
    elapsed = time.perf_counter() - start
    return _tally_trials(ci, weight, "exhaustive", 0, results, elapsed)


def _tally_trials(
    ci: CodeInstance,
    weight: int,
    mode: str,
    seed: int,
    results: Sequence[Tuple[int, int, int]],
    elapsed: float,
) -> TrialReport:
    xf = sum(r[0] for r in results)
    zf = sum(r[1] for r in results)
    invalid = sum(r[2] for r in results)
    failed = sum(1 for r in results if r[0] or r[1])
    trials = len(results)
    return TrialReport(
        instance=instance_label(ci),
        weight=weight,
        trials=trials,
        mode=mode,
        seed=seed,
        successes=trials - failed - invalid,
        failures=failed,
        logical_x_failures=xf,
        logical_z_failures=zf,
        invalid_syndromes=invalid,
        wall_time=elapsed,
    )


# ---------------------------------------------------------------------------
# distance ladder


@dataclass(frozen=True)
class LadderResult:
    cap: int
    d_x: Optional[int]
    d_z: Optional[int]


def distance_ladder(ci: CodeInstance, cap: int) -> LadderResult:
    """Scan chains by increasing weight for the least non-stabilizer cycle
    (X side) and non-stabilizer cocycle (Z side)."""
    total = sum(math.comb(ci.N, w) for w in range(1, cap + 1))
    if total > LADDER_GUARD:
        raise TooLarge(f"{total} candidates exceed the ladder guard")
    d_x = _ladder_side(
        ci.N, _column_masks(ci.hx_rows, ci.N), ci.x_stabilizer_space(), cap
    )
    d_z = _ladder_side(
        ci.N, _column_masks(ci.hz_rows, ci.N), ci.z_stabilizer_space(), cap
    )
    return LadderResult(cap, d_x, d_z)


def _column_masks(rows: Sequence[Tuple[int, ...]], ncols: int) -> List[int]:
    cols = [0] * ncols
    for i, row in enumerate(rows):
        for j in row:
            cols[j] |= 1 << i
    return cols


def _ladder_side(
    n_qubits: int, columns: List[int], stabilizers: RowEchelon, cap: int
) -> Optional[int]:
    for w in range(1, cap + 1):
        for support in combinations(range(n_qubits), w):
            sigma = 0
            mask = 0
            for q in support:
                sigma ^= columns[q]
                mask |= 1 << q
            if sigma == 0 and not stabilizers.contains(mask):
                return w
    return None


# ---------------------------------------------------------------------------
# soundness scans


@dataclass(frozen=True)
class SoundnessReport:
    instance: str
    side: str  # X | Z
    mode: str  # exhaustive | sampled
    scanned: int
    dropped: int
    worst_ratio: Fraction
    witness: Chain

    def csv_row(self) -> str:
        w = ";".join(face_literal(f) for f in self.witness.sorted_faces())
        return (
            f"{self.instance},{self.side},{self.mode},{self.scanned},"
            f"{self.dropped},{self.worst_ratio},{w}"
        )


SOUNDNESS_CSV_HEADER = "instance,side,mode,scanned,dropped,worst_ratio,witness"


def soundness_scan(
    ci: CodeInstance,
    side: str,
    budget: int,
    exhaustive: Optional[bool] = None,
    seed: int = 0,
    samples: int = 200,
    max_weight: int = 4,
    coset_cap: int = 200_000,
) -> SoundnessReport:
    """Worst (syndrome weight)/(distance of the error to the classical code
    checked on that side) over errors with nonzero syndrome. The denominator
    minimizes over the full syndrome coset (error + kernel of the check map),
    so a filling of the syndrome witnesses it. Exhaustive when 2^N fits the
    budget, else sampled."""
    if side not in ("X", "Z"):
        raise ValueError("side must be 'X' or 'Z'")
    can_exhaust = (1 << ci.N) <= budget
    if exhaustive is None:
        exhaustive = can_exhaust
    if exhaustive and not can_exhaust:
        raise TooLarge(f"2^{ci.N} error patterns exceed the budget {budget}")
    check_rows = ci.hx_rows if side == "X" else ci.hz_rows
    stab = ci.x_kernel_space() if side == "X" else ci.z_kernel_space()
    if exhaustive:
        scanned, worst, witness_mask = _soundness_exhaustive(ci.N, check_rows, stab)
        dropped = 0
        mode = "exhaustive"
    else:
        scanned, dropped, worst, witness_mask = _soundness_sampled(
            ci.N, check_rows, stab, seed, samples, max_weight, coset_cap
        )
        mode = "sampled"
    return SoundnessReport(
        instance=instance_label(ci),
        side=side,
        mode=mode,
        scanned=scanned,
        dropped=dropped,
        worst_ratio=worst,
        witness=csscode.mask_to_chain(ci, witness_mask),
    )


def _soundness_exhaustive(
    n_qubits: int, check_rows: Sequence[Tuple[int, ...]], kernel: RowEchelon
) -> Tuple[int, Fraction, int]:
    if n_qubits > 26:
        raise TooLarge("exhaustive scan beyond 2^26 patterns")
    errors = np.arange(1 << n_qubits, dtype=np.int64)
    syndrome_w = np.zeros(errors.shape, dtype=np.int32)
    for row in check_rows:
        mask = 0
        for j in row:
            mask |= 1 << j
        syndrome_w += (np.bitwise_count(errors & mask) & 1).astype(np.int32)
    # canonical representative modulo the kernel of the check map
    canon = errors.copy()
    for piv, row in zip(kernel.pivots, kernel.rows):
        hit = ((canon >> piv) & 1).astype(bool)
        canon[hit] ^= row
    coset_ids, inverse = np.unique(canon, return_inverse=True)
    minw = np.full(coset_ids.shape, n_qubits + 1, dtype=np.int32)
    np.minimum.at(minw, inverse, np.bitwise_count(errors).astype(np.int32))
    coset_min = minw[inverse]
    active = syndrome_w > 0
    if not active.any():
        raise ValueError("no error has a nonzero syndrome")
    ratios = np.where(
        active, syndrome_w / np.maximum(coset_min, 1), np.inf
    )
    idx = int(np.argmin(ratios))
    worst = Fraction(int(syndrome_w[idx]), int(coset_min[idx]))
    return int(active.sum()), worst, int(errors[idx])


def _soundness_sampled(
    n_qubits: int,
    check_rows: Sequence[Tuple[int, ...]],
    kernel: RowEchelon,
    seed: int,
    samples: int,
    max_weight: int,
    coset_cap: int,
) -> Tuple[int, int, Fraction, int]:
    columns = [0] * n_qubits
    for i, row in enumerate(check_rows):
        for j in row:
            columns[j] |= 1 << i
    worst: Optional[Fraction] = None
    witness = 0
    scanned = dropped = 0
    for t in range(samples):
        rng = trial_rng(seed, t)
        weight = 1 + rng.below(max_weight)
        support = sample_support(rng, n_qubits, weight)
        sigma = 0
        mask = 0
        for q in support:
            sigma ^= columns[q]
            mask |= 1 << q
        if sigma == 0:
            continue
        min_w = _coset_min_weight(n_qubits, mask, kernel, coset_cap)
        if min_w is None:
            dropped += 1
            continue
        scanned += 1
        ratio = Fraction(sigma.bit_count(), min_w)
        if worst is None or ratio < worst:
            worst, witness = ratio, mask
    if worst is None:
        raise ValueError("no sampled error had a nonzero syndrome")
    return scanned, dropped, worst, witness


def _coset_min_weight(
    n_qubits: int, mask: int, kernel: RowEchelon, coset_cap: int
) -> Optional[int]:
    """Least weight in mask + kernel space, by a candidate ladder capped at
    coset_cap enumerated vectors; None when the cap is hit first."""
    upper = mask.bit_count()
    tried = 0
    for w in range(0, upper):
        tried += math.comb(n_qubits, w)
        if tried > coset_cap:
            return None
        for support in combinations(range(n_qubits), w):
            v = 0
            for q in support:
                v |= 1 << q
            if kernel.contains(v ^ mask):
                return w
    return upper


# ---------------------------------------------------------------------------
# filling-constant measurement


@dataclass(frozen=True)
class ConstantsReport:
    instance: str
    side: str  # fill | cofill
    samples: int
    skipped_empty: int
    max_ratio: Fraction
    bound: Fraction
    violations: int
    histogram: Tuple[Tuple[float, int], ...]  # (bin lower edge, count), 0.25 wide

    def csv_row(self) -> str:
        hist = "|".join(f"{lo:.2f}:{c}" for lo, c in self.histogram)
        return (
            f"{self.instance},{self.side},{self.samples},{self.skipped_empty},"
            f"{self.max_ratio},{self.bound},{self.violations},{hist}"
        )


CONSTANTS_CSV_HEADER = (
    "instance,side,samples,skipped_empty,max_ratio,bound,violations,histogram"
)


def measure_constants(
    ci: CodeInstance,
    samples: int,
    seed: int,
    max_weight: int = 4,
) -> Tuple[ConstantsReport, ConstantsReport]:
    """Fill and cofill size ratios over random boundaries/coboundaries of
    random errors. For k=1 the loose bounds (n-p)/2 and p+1 are hard limits
    and violations are counted; for k=2 the k2 envelope is recorded only."""
    qc = ci.qc
    if qc.k not in (1, 2):
        raise Unsupported("constants are only measured for k in {1, 2}")
    n, p = qc.n, qc.p
    if qc.k == 1:
        word = qc.code.generators[0]
        fill = lambda z: filler.sym_fill(n, p, z, word)
        cofill = lambda z: filler.sym_cofill(n, p, z, word)
        fill_bound: Fraction = Fraction(n - p, 2)
        cofill_bound: Fraction = Fraction(p + 1)
    else:
        fill = lambda z: filler.gen_fill_k2(qc, z)
        cofill = lambda z: filler.gen_cofill_k2(qc, z)
        fill_bound = filler.k2_envelope(n, p)
        cofill_bound = filler.k2_envelope(n, p)

    ratios: Dict[str, List[Fraction]] = {"fill": [], "cofill": []}
    skipped = {"fill": 0, "cofill": 0}
    for t in range(samples):
        rng = trial_rng(seed, t)
        weight = 1 + rng.below(max_weight)
        chain = _support_chain(ci, sample_support(rng, ci.N, weight))
        z_fill = quotient.lift(qc, quotient.q_boundary(qc, chain))
        if z_fill.is_empty():
            skipped["fill"] += 1
        else:
            ratios["fill"].append(Fraction(fill(z_fill).weight, z_fill.weight))
        z_cofill = quotient.lift(qc, quotient.q_coboundary(qc, chain))
        if z_cofill.is_empty():
            skipped["cofill"] += 1
        else:
            ratios["cofill"].append(Fraction(cofill(z_cofill).weight, z_cofill.weight))

    def report(side: str, bound: Fraction) -> ConstantsReport:
        rs = ratios[side]
        return ConstantsReport(
            instance=instance_label(ci),
            side=side,
            samples=len(rs),
            skipped_empty=skipped[side],
            max_ratio=max(rs) if rs else Fraction(0),
            bound=bound,
            violations=sum(1 for r in rs if r > bound),
            histogram=_histogram(rs),
        )

    return report("fill", fill_bound), report("cofill", cofill_bound)


def _histogram(ratios: Sequence[Fraction]) -> Tuple[Tuple[float, int], ...]:
    counts: Dict[float, int] = {}
    for r in ratios:
        lo = math.floor(r * 4) / 4
        counts[lo] = counts.get(lo, 0) + 1
    return tuple(sorted(counts.items()))


def write_csv(path: str, header: str, rows: Sequence[str]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(row + "\n")
