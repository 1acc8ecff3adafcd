import random

import pytest

from hemicube.csscode import build, is_stabilizer_x, logical_cycle_np
from hemicube.cube import Chain, chain_from_literals, empty_chain
from hemicube.decoder import (
    Correction,
    Syndrome,
    decode,
    empty_correction,
    guaranteed_radius,
    syndrome_of,
    verify,
)
from hemicube.errors import InvalidSyndrome, Unsupported
from hemicube.quotient import ClassicalCode, QuotientComplex, q_boundary


def support_chain(ci, qubits):
    return Chain(ci.qc.n, ci.qc.p, frozenset(ci.qubits[q] for q in qubits))


class TestDecode:
    def test_zero_syndrome(self, rep_instances):
        ci = rep_instances[(4, 1)]
        out = decode(ci, syndrome_of(ci, empty_correction(ci)))
        assert out == empty_correction(ci)

    def test_single_qubit_x(self, rep_instances):
        ci = rep_instances[(8, 2)]
        rng = random.Random(0)
        for _ in range(5):
            truth = Correction(
                support_chain(ci, [rng.randrange(ci.N)]), empty_chain(8, 2)
            )
            out = decode(ci, syndrome_of(ci, truth))
            assert verify(ci, truth, out).success

    def test_single_qubit_z(self, rep_instances):
        ci = rep_instances[(8, 2)]
        rng = random.Random(1)
        for _ in range(5):
            truth = Correction(
                empty_chain(8, 2), support_chain(ci, [rng.randrange(ci.N)])
            )
            out = decode(ci, syndrome_of(ci, truth))
            assert verify(ci, truth, out).success

    def test_syndrome_reproduction(self, rep_instances):
        rng = random.Random(2)
        ci = rep_instances[(6, 2)]
        for _ in range(10):
            truth = Correction(
                support_chain(ci, rng.sample(range(ci.N), 4)),
                support_chain(ci, rng.sample(range(ci.N), 4)),
            )
            s = syndrome_of(ci, truth)
            out = decode(ci, s)
            assert syndrome_of(ci, out) == s

    def test_weight_bounds(self, rep_instances):
        rng = random.Random(3)
        for key in ((5, 1), (6, 2), (7, 3)):
            ci = rep_instances[key]
            n, p = key
            truth = Correction(
                support_chain(ci, rng.sample(range(ci.N), 3)),
                support_chain(ci, rng.sample(range(ci.N), 3)),
            )
            s = syndrome_of(ci, truth)
            out = decode(ci, s)
            assert 2 * out.e_x.weight <= (n - p) * s.sigma_x.weight
            assert out.e_z.weight <= (p + 1) * s.sigma_z.weight

    def test_sides_independent(self, rep_instances):
        rng = random.Random(4)
        ci = rep_instances[(6, 2)]
        truth = Correction(
            support_chain(ci, rng.sample(range(ci.N), 3)),
            support_chain(ci, rng.sample(range(ci.N), 3)),
        )
        s = syndrome_of(ci, truth)
        joint = decode(ci, s)
        only_x = decode(ci, Syndrome(s.sigma_x, empty_chain(6, 3)))
        only_z = decode(ci, Syndrome(empty_chain(6, 1), s.sigma_z))
        assert only_x.e_z.is_empty() and only_z.e_x.is_empty()
        assert joint == Correction(only_x.e_x, only_z.e_z)

    def test_invalid_syndrome(self, rep_instances):
        ci = rep_instances[(5, 1)]
        truth = Correction(support_chain(ci, [0]), empty_chain(5, 1))
        s = syndrome_of(ci, truth)
        # flip one syndrome bit: the result is no longer a boundary
        extra = ci.xchecks[-1]
        corrupted = Syndrome(
            s.sigma_x ^ Chain(5, 0, frozenset((extra,))), s.sigma_z
        )
        with pytest.raises(InvalidSyndrome):
            decode(ci, corrupted)

    def test_k2_exactness(self, inst_624_p1):
        ci = inst_624_p1
        rng = random.Random(5)
        for _ in range(5):
            truth = Correction(
                support_chain(ci, rng.sample(range(ci.N), 2)),
                support_chain(ci, rng.sample(range(ci.N), 2)),
            )
            s = syndrome_of(ci, truth)
            assert syndrome_of(ci, decode(ci, s)) == s

    def test_k3_unsupported(self):
        simplex = ClassicalCode.from_generators(7, [0b0001111, 0b0110011, 0b1010101])
        ci = build(QuotientComplex(simplex, 1))
        with pytest.raises(Unsupported):
            decode(ci, syndrome_of(ci, empty_correction(ci)))


class TestVerify:
    def test_exact_match(self, rep_instances):
        ci = rep_instances[(4, 1)]
        truth = Correction(support_chain(ci, [1]), support_chain(ci, [2]))
        res = verify(ci, truth, truth)
        assert res.success and not res.logical_x_failure and not res.logical_z_failure

    def test_stabilizer_offset_is_success(self, rep_instances):
        ci = rep_instances[(4, 1)]
        truth = Correction(support_chain(ci, [1]), empty_chain(4, 1))
        stab = q_boundary(ci.qc, Chain(4, 2, frozenset((ci.zchecks[0],))))
        other = Correction(truth.e_x ^ stab, truth.e_z)
        assert verify(ci, truth, other).success

    def test_logical_offset_fails(self, rep_instances):
        ci = rep_instances[(4, 1)]
        truth = Correction(support_chain(ci, [1]), empty_chain(4, 1))
        other = Correction(truth.e_x ^ logical_cycle_np(4, 1), truth.e_z)
        res = verify(ci, truth, other)
        assert not res.success and res.logical_x_failure and not res.logical_z_failure

    def test_syndrome_mismatch_rejected(self, rep_instances):
        ci = rep_instances[(4, 1)]
        a = Correction(support_chain(ci, [1]), empty_chain(4, 1))
        b = Correction(support_chain(ci, [3]), empty_chain(4, 1))
        with pytest.raises(ValueError):
            verify(ci, a, b)


class TestGuaranteedRadius:
    def test_examples(self, rep_instances):
        assert guaranteed_radius(rep_instances[(8, 2)]) == 1
        assert guaranteed_radius(rep_instances[(4, 1)]) == 0

    def test_k2_unsupported(self, inst_624_p1):
        with pytest.raises(Unsupported):
            guaranteed_radius(inst_624_p1)
