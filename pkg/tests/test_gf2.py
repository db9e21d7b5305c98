import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rmconv.gf2 import BitMatrix, BitVector, mat_mul_t, nullspace, rank, solve, vstack
from rmconv.codes import generator_matrix, h_tilde

from oracles import np_rank_gf2, np_matmul_t_gf2, to_array

G13 = BitMatrix.from_strings(["1010101", "0110011", "0001111"])


def bitmatrices(max_rows=8, max_cols=10):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.integers(0, (1 << c) - 1), min_size=r, max_size=r
            ).map(lambda rows: BitMatrix(r, c, rows))
        )
    )


class TestBitVector:
    def test_from_string_roundtrip(self):
        v = BitVector.from_string("1010101")
        assert v.to01() == "1010101"
        assert v.support() == [0, 2, 4, 6]
        assert v.weight() == 4

    def test_xor_self_is_zero(self):
        v = BitVector.from_string("0110011")
        assert (v ^ v).is_zero()

    def test_out_of_range_bits_rejected(self):
        with pytest.raises(ValueError):
            BitVector(3, 0b1000)


class TestRank:
    def test_base_generator_matrix(self):
        assert rank(G13) == 3

    def test_zero_matrix(self):
        assert rank(BitMatrix.zeros(4, 4)) == 0

    def test_stacked_parity_check(self):
        stacked = vstack(generator_matrix(4), h_tilde(4))
        expected = np_rank_gf2(to_array(stacked.data, stacked.cols))
        assert expected == 10
        assert rank(stacked) == 10

    @given(bitmatrices())
    def test_matches_oracle(self, M):
        assert rank(M) == np_rank_gf2(to_array(M.data, M.cols))


class TestMatMulT:
    def test_h_times_g_transpose_vanishes(self):
        prod = mat_mul_t(h_tilde(4), generator_matrix(4))
        assert prod.data == [0] * 6
        assert (prod.rows, prod.cols) == (6, 4)

    def test_identity(self):
        eye = BitMatrix.identity(5)
        assert mat_mul_t(eye, eye) == eye

    def test_m5_orthogonality_via_oracle(self):
        g = generator_matrix(5)
        h = h_tilde(5)
        oracle = np_matmul_t_gf2(to_array(h.data, h.cols), to_array(g.data, g.cols))
        assert not oracle.any()
        assert mat_mul_t(h, g).data == [0] * h.rows

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            mat_mul_t(BitMatrix.identity(3), BitMatrix.identity(4))


class TestSolve:
    def test_exact_row_combination(self):
        b = G13.row(0) ^ G13.row(1)
        assert solve(G13, b) == BitVector.from_string("110")

    def test_all_ones_has_no_solution(self):
        # Oracle: exhaust all 8 row combinations.
        ones = (1 << 7) - 1
        combos = {0}
        for r in G13.data:
            combos |= {c ^ r for c in combos}
        assert ones not in combos
        assert solve(G13, BitVector(7, ones)) is None

    def test_identity(self):
        eye = BitMatrix.identity(3)
        assert solve(eye, BitVector.from_string("010")) == BitVector.from_string("010")

    def test_length_mismatch_means_no_solution(self):
        assert solve(G13, BitVector(6, 0b101)) is None

    @given(bitmatrices(), st.integers(0, 255))
    def test_roundtrip(self, M, xbits):
        x = BitVector(M.rows, xbits & ((1 << M.rows) - 1))
        b = 0
        for i in x.support():
            b ^= M.data[i]
        got = solve(M, BitVector(M.cols, b))
        assert got is not None
        back = 0
        for i in got.support():
            back ^= M.data[i]
        assert back == b

    @given(bitmatrices(), st.integers(0, (1 << 10) - 1))
    def test_no_solution_iff_rank_grows(self, M, bbits):
        b = BitVector(M.cols, bbits & ((1 << M.cols) - 1))
        augmented = BitMatrix(M.rows + 1, M.cols, M.data + [b.bits])
        grows = rank(augmented) > rank(M)
        assert (solve(M, b) is None) == grows


class TestNullspace:
    def test_self_dual_containment_base(self):
        ns = nullspace(G13)
        assert ns.rows == 4
        for r in G13.row_vectors():
            assert solve(ns, r) is not None

    def test_identity_has_trivial_nullspace(self):
        assert nullspace(BitMatrix.identity(6)).rows == 0

    def test_dual_containment_m4(self):
        g = generator_matrix(4)
        ns = nullspace(g)
        assert ns.rows == 11
        for r in g.row_vectors():
            assert solve(ns, r) is not None

    @given(bitmatrices())
    def test_rows_annihilate_and_dimension(self, M):
        ns = nullspace(M)
        for v in ns.row_vectors():
            for r in M.row_vectors():
                assert r.dot(v) == 0
        assert rank(ns) == M.cols - rank(M)


@pytest.mark.parametrize("m", range(3, 10))
def test_orthogonality_all_m(m):
    g = generator_matrix(m + 1)
    h = h_tilde(m + 1)
    assert mat_mul_t(h, g).data == [0] * h.rows
