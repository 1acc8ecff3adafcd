"""Acceptance suite: one test per criterion, each printing a PASS line with
its measured runtime (a failure surfaces as a normal pytest failure)."""

import math
import time
from fractions import Fraction

import numpy as np
import pytest

from hemicube import cli
from hemicube.csscode import (
    build,
    cocycle_S,
    dimension,
    distance_formula,
    is_stabilizer_x,
    is_stabilizer_z,
    logical_cycle_np,
    logical_cycle_recursive,
    product_cycle,
)
from hemicube.cube import Chain, boundary, coboundary, empty_chain
from hemicube.decoder import Correction, guaranteed_radius
from hemicube.filler import gen_cofill_k2, gen_fill_k2, hemi_cofill, hemi_fill
from hemicube.harness import (
    distance_ladder,
    run_exhaustive,
    sample_support,
    soundness_scan,
    trial_rng,
)
from hemicube.quotient import (
    ClassicalCode,
    QuotientComplex,
    enumerate_faces,
    lift,
    q_boundary,
    q_coboundary,
)

CODE_624 = [0b111100, 0b001111]
CODE_724 = [0b1111000, 0b0011110]
CODE_734 = [0b0001111, 0b0110011, 0b1010101]  # all nonzero weights are 4


class Stopwatch:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        return False


def report(criterion, detail, watch, limit):
    print(f"ACCEPTANCE {criterion}: PASS ({watch.elapsed:.1f}s) {detail}")
    assert watch.elapsed < limit, f"{criterion} exceeded its {limit}s budget"


def test_c01_dimension_repetition(rep_instances):
    with Stopwatch() as watch:
        for (n, p), ci in sorted(rep_instances.items()):
            assert dimension(ci) == 1, f"k_Q != 1 at rep n={n} p={p}"
    report("C1", "k_Q = 1 for all rep instances 3<=n<=8, 1<=p<=n-2", watch, 60)


def test_c02_dimension_general_quotients():
    cases = [
        (6, CODE_624, 1),
        (6, CODE_624, 2),
        (7, CODE_724, 1),
        (7, CODE_724, 2),
        (7, CODE_734, 1),
    ]
    with Stopwatch() as watch:
        for n, gens, p in cases:
            code = ClassicalCode.from_generators(n, gens)
            assert code.d >= p + 2
            ci = build(QuotientComplex(code, p))
            expected = math.comb(p + code.k - 1, p)
            assert dimension(ci) == expected, f"[{n},{code.k},{code.d}] p={p}"
    report("C2", "k_Q = C(p+k-1,p) on [6,2,4], [7,2,4] (p=1,2) and [7,3,4] p=1", watch, 120)


def test_c03_distance_ladder(rep_instances):
    with Stopwatch() as watch:
        expectations = {  # (n, p) -> (cap, d_x_found, d_z_found)
            (3, 1): (3, 3, 2),
            (4, 1): (4, 4, 4),
            (4, 2): (6, 6, 2),
            (5, 1): (5, 5, None),
        }
        for (n, p), (cap, want_x, want_z) in expectations.items():
            ci = rep_instances[(n, p)]
            res = distance_ladder(ci, cap)
            assert (res.d_x, res.d_z) == (want_x, want_z), f"rep n={n} p={p}"
            d_x_f, d_z_f, d_min = distance_formula(ci)
            found = [d for d in (res.d_x, res.d_z) if d is not None]
            assert min(found) == d_min
        ci = build(QuotientComplex(ClassicalCode.from_generators(6, CODE_624), 1))
        res = distance_ladder(ci, cap=4)
        assert res.d_x == 4 and res.d_z is None  # nothing below C(d,p) = 4
    report("C3", "ladder confirms d_min on rep (3,1),(4,1),(4,2),(5,1) and [6,2,4] p=1", watch, 600)


def test_c04_explicit_logicals(rep_instances):
    with Stopwatch() as watch:
        for (n, p), ci in sorted(rep_instances.items()):
            cyc = logical_cycle_np(n, p)
            assert cyc.weight == math.comb(n, p)
            assert q_boundary(ci.qc, cyc).is_empty()
            assert not is_stabilizer_x(ci, cyc)
            coc = cocycle_S(n, p)
            assert coc.weight == 1 << (n - p - 1)
            assert q_coboundary(ci.qc, coc).is_empty()
            assert not is_stabilizer_z(ci, coc)
            assert len(cyc.faces & coc.faces) == 1  # odd intersection
    report("C4", "cycle/cocycle weights, closure, nontriviality, odd pairing (n<=8)", watch, 120)


def test_c05_filling_bounds(rep_instances):
    samples_per_side = 10_000
    with Stopwatch() as watch:
        checked = 0
        for (n, p), ci in sorted(rep_instances.items()):
            if n > 7:
                continue
            qc = ci.qc
            for t in range(samples_per_side):
                rng = trial_rng(1000 * n + p, t)
                w = 1 + rng.below(3)
                err = Chain(
                    n, p, frozenset(ci.qubits[q] for q in sample_support(rng, ci.N, w))
                )
                z = lift(qc, q_boundary(qc, err))
                if not z.is_empty():
                    out = hemi_fill(n, p, z)
                    assert boundary(out) == z, "fill does not reproduce its syndrome"
                    assert 2 * out.weight <= (n - p) * z.weight, "fill bound violated"
                    checked += 1
                zc = lift(qc, q_coboundary(qc, err))
                if not zc.is_empty():
                    outc = hemi_cofill(n, p, zc)
                    assert coboundary(outc) == zc, "cofill does not reproduce its syndrome"
                    assert outc.weight <= (p + 1) * zc.weight, "cofill bound violated"
                    checked += 1
    report("C5", f"zero violations over {checked} fills/cofills (3<=n<=7, all p)", watch, 600)


def test_c06_soundness_exhaustive(rep_instances):
    with Stopwatch() as watch:
        worsts = []
        for n, p in ((3, 1), (4, 1), (4, 2), (5, 3)):
            ci = rep_instances[(n, p)]
            assert ci.N <= 20
            x = soundness_scan(ci, "X", budget=1 << 22, exhaustive=True)
            z = soundness_scan(ci, "Z", budget=1 << 22, exhaustive=True)
            assert x.worst_ratio >= Fraction(2, n - p), f"X ratio at rep n={n} p={p}"
            assert z.worst_ratio >= Fraction(1, p + 1), f"Z ratio at rep n={n} p={p}"
            worsts.append(f"({n},{p}): X={x.worst_ratio} Z={z.worst_ratio}")
    report("C6", "; ".join(worsts), watch, 600)


def test_c07_decoder_radius(rep_instances):
    with Stopwatch() as watch:
        ci = rep_instances[(8, 2)]
        assert guaranteed_radius(ci) == 1
        rep = run_exhaustive(ci, 1)
        assert rep.trials == 2 * 896
        assert rep.successes == rep.trials, (
            f"{rep.failures} failures, {rep.invalid_syndromes} invalid"
        )
    report("C7", "all 1792 single-qubit errors on rep n=8 p=2 decode successfully", watch, 300)


def test_c08_decoder_scaling():
    with Stopwatch() as watch:
        ci = build(QuotientComplex(ClassicalCode.repetition(12), 3))
        assert guaranteed_radius(ci) == 4  # d_min = 220, denominator 54
        qc = ci.qc
        buckets = []  # (mean syndrome weight, median decode seconds)
        for idx, err_w in enumerate((1, 3, 5, 11)):
            sw, times = [], []
            for t in range(12):
                rng = trial_rng(idx, t)
                err = Chain(
                    12,
                    3,
                    frozenset(ci.qubits[q] for q in sample_support(rng, ci.N, err_w)),
                )
                sigma = q_boundary(qc, err)
                z = lift(qc, sigma)
                start = time.perf_counter()
                out = hemi_fill(12, 3, z)
                times.append(time.perf_counter() - start)
                assert boundary(out) == z
                sw.append(sigma.weight)
            buckets.append((float(np.mean(sw)), float(np.median(times))))
        weights = [b[0] for b in buckets]
        medians = [b[1] for b in buckets]
        assert all(a < b for a, b in zip(weights, weights[1:]))
        assert all(a <= b for a, b in zip(medians, medians[1:])), medians
        slope = float(np.polyfit(np.log(weights), np.log(medians), 1)[0])
        assert slope <= 1.3, f"log-log slope {slope:.2f} exceeds 1.3"
    detail = ", ".join(f"|s|~{w:.0f}: {t * 1e3:.2f}ms" for w, t in buckets)
    report("C8", f"slope <= 1.3 across syndrome weights ({detail})", watch, 900)


def test_c09_cross_construction(rep_instances):
    with Stopwatch() as watch:
        for n in range(3, 7):
            for p in range(1, n - 1):
                qc = rep_instances[(n, p)].qc
                assert product_cycle(qc, [(1 << n) - 1], [p]) == logical_cycle_np(n, p)
        for n in range(2, 9):
            for p in range(1, n):
                assert logical_cycle_recursive(n, p) == logical_cycle_np(n, p)
    report("C9", "product cycles (n<=6) and the prefix recursion (n<=8) match", watch, 120)


def test_c10_determinism(tmp_path, capsys):
    with Stopwatch() as watch:
        blobs = []
        for threads, sub in (("1", "a"), ("4", "b"), ("1", "c")):
            out = tmp_path / sub
            assert (
                cli.main(
                    [
                        "simulate", "--n", "6", "--p", "2", "--code", "rep",
                        "--weight", "2", "--trials", "60", "--seed", "11",
                        "--threads", threads, "--out", str(out),
                    ]
                )
                == 0
            )
            blobs.append((out / "trial_reports.csv").read_bytes())
        capsys.readouterr()
        assert blobs[0] == blobs[1] == blobs[2]
    report("C10", "simulate CSVs are byte-identical across --threads 1/4", watch, 120)
