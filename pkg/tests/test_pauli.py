import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rmconv.gf2 import BitVector
from rmconv.pauli import PauliOperator

from oracles import op_matrix


def paulis(n):
    return st.builds(
        lambda x, z, p: PauliOperator(n, BitVector(n, x), BitVector(n, z), p),
        st.integers(0, (1 << n) - 1),
        st.integers(0, (1 << n) - 1),
        st.integers(0, 3),
    )


class TestCommutes:
    def test_fixing_op_flags_split_row(self):
        a = PauliOperator.from_text(15, "X12 X13 X14 X15")
        b = PauliOperator.from_text(15, "Z3 Z7 Z11 Z15")
        assert a.anticommutes(b)  # overlap {15} is odd

    def test_identity_commutes_with_anything(self):
        eye = PauliOperator.identity(15)
        assert eye.commutes(PauliOperator.from_text(15, "Y7 X2 Z9"))

    def test_even_overlap_commutes(self):
        a = PauliOperator.from_text(15, "X10 X11 X14 X15")
        b = PauliOperator.from_text(15, "Z2 Z3 Z10 Z11")
        assert a.commutes(b)  # overlap {10, 11} is even

    @given(paulis(4), paulis(4))
    def test_matches_dense_oracle(self, p, q):
        pm, qm = op_matrix(p), op_matrix(q)
        commute = np.allclose(pm @ qm, qm @ pm)
        assert p.commutes(q) == commute

    @given(paulis(5), paulis(5), paulis(5))
    def test_symplectic_form_is_bilinear(self, p, q, r):
        assert p.commutes(q * r) == (p.commutes(q) == p.commutes(r))


class TestMultiply:
    def test_merging_weight4_z_strings(self):
        a = PauliOperator.from_text(15, "Z8 Z9 Z10 Z11")
        b = PauliOperator.from_text(15, "Z12 Z13 Z14 Z15")
        prod = a * b
        assert str(prod) == "Z8 Z9 Z10 Z11 Z12 Z13 Z14 Z15"
        assert prod.phase == 0

    def test_self_inverse(self):
        p = PauliOperator.from_text(6, "Y2 X3 Z5")
        prod = p * p
        assert prod.is_identity() and prod.phase == 0

    def test_xz_vs_zx_differ_by_sign(self):
        x = PauliOperator.from_qubits(1, xs=(0,))
        z = PauliOperator.from_qubits(1, zs=(0,))
        xz, zx = x * z, z * x
        assert (xz.phase - zx.phase) % 4 == 2
        assert np.allclose(op_matrix(xz), op_matrix(x) @ op_matrix(z))
        assert np.allclose(op_matrix(zx), op_matrix(z) @ op_matrix(x))

    @given(paulis(3), paulis(3))
    def test_product_matches_dense_oracle(self, p, q):
        assert np.allclose(op_matrix(p * q), op_matrix(p) @ op_matrix(q))

    @given(paulis(3), paulis(3), paulis(3))
    def test_associative_including_phase(self, p, q, r):
        assert (p * q) * r == p * (q * r)


class TestFromRow:
    def test_x_type_lift(self):
        op = PauliOperator.from_row(BitVector.from_string("1010101"), "X")
        assert str(op) == "X1 X3 X5 X7"

    def test_zero_row_is_identity(self):
        op = PauliOperator.from_row(BitVector.zeros(7), "Z")
        assert op.is_identity()

    def test_z_type_lift(self):
        row = BitVector.from_support(15, [2, 6, 10, 14])  # qubits 3, 7, 11, 15
        op = PauliOperator.from_row(row, "Z")
        assert str(op) == "Z3 Z7 Z11 Z15"

    def test_bad_kind(self):
        with pytest.raises(ValueError):
            PauliOperator.from_row(BitVector.zeros(3), "Y")


class TestHermitianAndSign:
    def test_y_is_hermitian_with_phase_one(self):
        y = PauliOperator.from_qubits(3, xs=(1,), zs=(1,))
        assert y.phase == 1 and y.is_hermitian() and y.sign() == 1

    def test_negative_operator(self):
        p = PauliOperator(2, BitVector(2, 0b01), BitVector(2, 0b00), 2)
        assert p.sign() == -1 and str(p) == "-X1"

    def test_non_hermitian_rejected(self):
        p = PauliOperator(1, BitVector(1, 1), BitVector(1, 0), 1)  # i X
        assert not p.is_hermitian()
        with pytest.raises(ValueError):
            p.sign()

    @given(paulis(4))
    def test_base_is_positive_with_same_support(self, p):
        b = p.base()
        assert b.sign() == 1 and b.x == p.x and b.z == p.z


@given(st.lists(st.integers(0, (1 << 8) - 1), min_size=2, max_size=5))
def test_same_type_operators_commute(rows):
    ops = [PauliOperator.from_row(BitVector(8, r), "Z") for r in rows]
    for a in ops:
        for b in ops:
            assert a.commutes(b)


class TestText:
    def test_render_one_based(self):
        assert str(PauliOperator.from_qubits(15, zs=(0, 2, 8, 10))) == "Z1 Z3 Z9 Z11"

    def test_parse_render_roundtrip(self):
        text = "X2 Y7 Z11"
        assert str(PauliOperator.from_text(15, text)) == text

    def test_identity_renders_as_i(self):
        assert str(PauliOperator.identity(4)) == "I"

    def test_parse_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            PauliOperator.from_text(7, "X9")
