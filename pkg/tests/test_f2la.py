import random

import pytest

from bruteforce import brute_kernel, brute_rank, brute_solutions
from hemicube.f2la import (
    BitMatrix,
    BitVector,
    RowEchelon,
    nullspace_basis,
    rank,
    solve,
    vector,
    vector_from_string,
)


def mat(*lines):
    return BitMatrix.from_strings(list(lines))


class TestRank:
    def test_zero(self):
        assert rank(BitMatrix([0, 0, 0], 3)) == 0

    def test_identity(self):
        assert rank(BitMatrix([1, 2, 4, 8], 4)) == 4

    def test_dependent_rows(self):
        # 101 = 110 xor 011, so only two independent rows
        m = mat("110", "011", "101")
        assert rank(m) == 2
        assert brute_rank(m.rows, 3) == 2

    def test_against_bruteforce(self):
        rng = random.Random(7)
        for _ in range(40):
            rows = rng.randrange(1, 9)
            cols = rng.randrange(1, 9)
            m = BitMatrix([rng.randrange(1 << cols) for _ in range(rows)], cols)
            assert rank(m) == brute_rank(m.rows, cols)


class TestSolve:
    def test_identity(self):
        m = BitMatrix([1, 2, 4], 3)
        b = vector_from_string("101")
        assert solve(m, b) == b

    def test_underdetermined(self):
        x = solve(BitMatrix([0b11], 2), vector(1, 1))
        assert x.bits in (0b01, 0b10)

    def test_two_rows(self):
        m = mat("110", "011")
        b = vector(2, 0b11)
        x = solve(m, b)
        assert x is not None and m.mul_vec(x.bits) == b.bits
        assert x.bits in brute_solutions(m.rows, 3, 0b11)

    def test_inconsistent(self):
        m = BitMatrix([0b1, 0b1], 1)  # x = 0 and x = 1
        assert solve(m, vector(2, 0b01)) is None

    def test_width_mismatch(self):
        with pytest.raises(ValueError):
            solve(BitMatrix([1], 2), vector(2, 0))

    def test_randomized_exactness(self):
        rng = random.Random(11)
        for _ in range(80):
            rows = rng.randrange(1, 10)
            cols = rng.randrange(1, 10)
            m = BitMatrix([rng.randrange(1 << cols) for _ in range(rows)], cols)
            b = rng.randrange(1 << rows)
            x = solve(m, vector(rows, b))
            sols = brute_solutions(m.rows, cols, b)
            if x is None:
                assert not sols
            else:
                assert m.mul_vec(x.bits) == b
                assert x.bits in sols


class TestNullspace:
    def test_identity(self):
        assert nullspace_basis(BitMatrix([1, 2, 4], 3)) == []

    def test_zero(self):
        basis = nullspace_basis(BitMatrix([0, 0], 3))
        assert len(basis) == 3
        assert brute_rank([v.bits for v in basis], 3) == 3

    def test_single_vector(self):
        m = mat("110", "011")
        assert [v.bits for v in nullspace_basis(m)] == [0b111]
        assert sorted(brute_kernel(m.rows, 3)) == [0, 0b111]

    def test_rank_nullity(self):
        rng = random.Random(3)
        for _ in range(30):
            rows = rng.randrange(1, 40)
            cols = rng.randrange(1, 64)
            m = BitMatrix([rng.randrange(1 << cols) for _ in range(rows)], cols)
            basis = nullspace_basis(m)
            assert rank(m) + len(basis) == cols
            for v in basis:
                assert m.mul_vec(v.bits) == 0
            # independence; the span oracle only fits small bases
            if len(basis) <= 14:
                assert brute_rank([v.bits for v in basis], cols) == len(basis)
            else:
                assert rank(BitMatrix([v.bits for v in basis], cols)) == len(basis)


def test_rank_invariant_under_row_ops():
    rng = random.Random(5)
    for _ in range(20):
        cols = rng.randrange(2, 30)
        rows = [rng.randrange(1 << cols) for _ in range(rng.randrange(2, 12))]
        r0 = rank(BitMatrix(rows, cols))
        for _ in range(30):
            i, j = rng.randrange(len(rows)), rng.randrange(len(rows))
            if rng.random() < 0.5:
                rows[i], rows[j] = rows[j], rows[i]
            elif i != j:
                rows[i] ^= rows[j]
        assert rank(BitMatrix(rows, cols)) == r0


def test_row_echelon_membership():
    m = mat("1100", "0110")
    ech = RowEchelon(m)
    assert ech.contains(0b0101 ^ 0b0)  # 1010 in string order = rows xor
    assert ech.contains(0)
    assert not ech.contains(0b1)
    assert ech.rank == 2


def test_bitvector_string_roundtrip():
    v = vector_from_string("0110")
    assert v == BitVector(4, 0b0110)
    assert str(v) == "0110"
    with pytest.raises(ValueError):
        vector(2, 0b100)
