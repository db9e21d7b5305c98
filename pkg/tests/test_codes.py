import pytest

from rmconv.codes import (
    extended_code,
    generator_matrix,
    h_tilde,
    rm_code,
    subsystem_spec,
)
from rmconv.gf2 import BitMatrix, BitVector, rank, solve, vstack
from rmconv.pauli import PauliOperator

from oracles import np_rank_gf2, to_array

H14_STRINGS = [
    "101000001010000",
    "011000000110000",
    "001000100010001",
    "101010100000000",
    "011001100000000",
    "000111100000000",
]


class TestGeneratorMatrix:
    def test_base_case(self):
        assert generator_matrix(3).to_strings() == ["1010101", "0110011", "0001111"]

    def test_m4_last_row_is_second_block(self):
        row = generator_matrix(4).row(3)
        assert [q + 1 for q in row.support()] == list(range(8, 16))

    def test_m5_row_weights(self):
        g = generator_matrix(5)
        assert (g.rows, g.cols) == (5, 31)
        assert all(v.weight() == 16 for v in g.row_vectors())

    def test_row_support_is_binary_digit_pattern(self):
        # Qubit j lies in row i exactly when binary digit i-1 of j is set.
        for m in (3, 4, 5):
            g = generator_matrix(m)
            for i, v in enumerate(g.row_vectors()):
                assert v.support() == [
                    q for q in range((1 << m) - 1) if ((q + 1) >> i) & 1
                ]

    def test_m_below_3_rejected(self):
        with pytest.raises(ValueError):
            generator_matrix(2)


class TestHTilde:
    def test_m4_explicit(self):
        assert h_tilde(4).to_strings() == H14_STRINGS

    def test_row_counts(self):
        assert h_tilde(4).rows == 6
        assert h_tilde(5).rows == 20
        for m in range(4, 9):
            assert h_tilde(m).rows == (1 << m) - 2 * m - 2

    def test_rank_of_stacked_parity_check(self):
        for m in (4, 5, 6):
            stacked = vstack(generator_matrix(m), h_tilde(m))
            assert rank(stacked) == (1 << m) - m - 2
        oracle = np_rank_gf2(to_array(vstack(generator_matrix(5), h_tilde(5)).data, 31))
        assert oracle == 25

    def test_m3_rejected(self):
        with pytest.raises(ValueError):
            h_tilde(3)


class TestRmCode:
    def test_steane_counts(self):
        code = rm_code(3)
        assert (len(code.x_stabs), len(code.z_stabs)) == (3, 3)
        assert code.n == 7

    def test_m4_counts(self):
        code = rm_code(4)
        assert (len(code.x_stabs), len(code.z_stabs)) == (4, 10)

    def test_logicals(self):
        code = rm_code(3)
        assert code.logical_x.anticommutes(code.logical_z)
        for s in code.stabilizers:
            assert code.logical_x.commutes(s)
            assert code.logical_z.commutes(s)

    def test_weight_census_m4(self):
        code = rm_code(4)
        assert all(s.weight == 8 for s in code.x_stabs)  # triply-even X checks
        h_rows = code.z_stabs[4:]
        assert all(s.weight == 4 for s in h_rows)

    @pytest.mark.parametrize("m", range(3, 9))
    def test_validates(self, m):
        rm_code(m).validate()


class TestExtendedCode:
    def test_m3_counts(self):
        code = extended_code(3)
        assert code.n == 15
        assert len(code.stabilizers) == 14

    def test_m4_generator_independence(self):
        code = extended_code(4)
        assert code.n == 31
        assert len(code.stabilizers) == 30
        sym = BitMatrix.from_rows(
            62, [s.x.bits | (s.z.bits << 31) for s in code.stabilizers]
        )
        assert rank(sym) == 30
        assert np_rank_gf2(to_array(sym.data, 62)) == 30

    def test_all_generators_commute(self):
        code = extended_code(3)
        gens = code.stabilizers
        for i, a in enumerate(gens):
            for b in gens[i + 1 :]:
                assert a.commutes(b)

    @pytest.mark.parametrize("m", range(3, 9))
    def test_validates(self, m):
        extended_code(m).validate()


class TestSubsystemSpec:
    def test_m3_gauge_generators(self):
        spec = subsystem_spec(3)
        x_gauge = [g for g in spec.gauge_generators if g.z.bits == 0]
        z_gauge = [g for g in spec.gauge_generators if g.x.bits == 0]
        assert len(x_gauge) == 3 and len(z_gauge) == 3
        assert str(z_gauge[0]) == "Z1 Z3 Z9 Z11"

    @pytest.mark.parametrize("m", (3, 4))
    def test_gauge_commutes_with_stabilizers(self, m):
        subsystem_spec(m).validate()

    @pytest.mark.parametrize("m", (3, 4))
    def test_z_gauge_rows_anticommute_with_some_x_gauge(self, m):
        # This is why the gauge measurement outcomes are random.
        spec = subsystem_spec(m)
        x_gauge = [g for g in spec.gauge_generators if g.z.bits == 0]
        z_gauge = [g for g in spec.gauge_generators if g.x.bits == 0]
        for zg in z_gauge:
            assert any(zg.anticommutes(xg) for xg in x_gauge)

    @pytest.mark.parametrize("m", (3, 4))
    def test_both_codes_contained_in_span(self, m):
        spec = subsystem_spec(m)
        n = (1 << (m + 1)) - 1
        span = BitMatrix.from_rows(
            2 * n,
            [
                s.x.bits | (s.z.bits << n)
                for s in spec.stabilizers + spec.gauge_generators
            ],
        )
        for code in (rm_code(m + 1), extended_code(m)):
            for gen in code.stabilizers:
                v = BitVector(2 * n, gen.x.bits | (gen.z.bits << n))
                assert solve(span, v) is not None
