import random

import pytest

from rmconv.codes import extended_code, generator_matrix, h_tilde, rm_code
from rmconv.engine import (
    EngineError,
    StabilizerFrame,
    branch_enumerate,
    prepare_extended,
)
from rmconv.gf2 import BitVector
from rmconv.pauli import PauliOperator


def h14_z(i):
    return PauliOperator.from_row(h_tilde(4).row(i), "Z")


def g14_op(i, kind):
    return PauliOperator.from_row(generator_matrix(4).row(i), kind)


class TestPrepareExtended:
    def test_fresh_frame_matches_code(self):
        frame = prepare_extended(3)
        code = extended_code(3)
        assert len(frame.gens) == 14
        for (op, sign), want in zip(frame.gens, code.stabilizers):
            assert sign == 1 and op == want

    def test_logical_signs_positive(self):
        frame = prepare_extended(3)
        _, sx = frame.logical_x
        _, sz = frame.logical_z
        assert sx == 1 and sz == 1

    def test_validates(self):
        prepare_extended(3).validate()
        prepare_extended(4).validate()


class TestApplyPauli:
    def test_z5_flips_odd_overlap_generators(self):
        frame = prepare_extended(3)
        z5 = PauliOperator.from_qubits(15, zs=(4,))
        flipped = frame.apply_pauli(z5)
        # X generators containing qubit 5 flip: the full rows 1 and 3
        # (binary pattern of 5 = 101, at indices 3 and 5) and the
        # first-block rows 1 and 3 (indices 0 and 2).
        expected = [-1 if i in (0, 2, 3, 5) else 1 for i in range(14)]
        code = extended_code(3)
        want_flip = {
            i for i, s in enumerate(code.stabilizers) if s.anticommutes(z5)
        }
        assert want_flip == {0, 2, 3, 5}
        assert flipped.signs() == expected

    def test_identity_is_noop(self):
        frame = prepare_extended(3)
        after = frame.apply_pauli(PauliOperator.identity(15))
        assert after.signs() == frame.signs()

    def test_y_equals_x_then_z(self):
        frame = prepare_extended(3)
        y3 = PauliOperator.from_qubits(15, xs=(2,), zs=(2,))
        via_y = frame.apply_pauli(y3)
        via_parts = frame.apply_pauli(
            PauliOperator.from_qubits(15, xs=(2,))
        ).apply_pauli(PauliOperator.from_qubits(15, zs=(2,)))
        assert via_y.signs() == via_parts.signs()

    def test_size_mismatch(self):
        with pytest.raises(EngineError):
            prepare_extended(3).apply_pauli(PauliOperator.identity(7))


class TestMeasure:
    def test_gauge_row_is_random(self):
        frame = prepare_extended(3)
        assert not frame.is_deterministic(h14_z(0))
        with pytest.raises(EngineError):
            frame.measure(h14_z(0))  # no branch bit, no rng

    def test_existing_generator_is_deterministic_zero(self):
        frame = prepare_extended(3)
        f2, res = frame.measure(g14_op(0, "X"))
        assert res.deterministic and res.outcome == 0
        assert f2.signs() == frame.signs()

    def test_remainder_deterministic_after_gauge_rows(self):
        frame = prepare_extended(3)
        for i in range(3):
            frame, _ = frame.measure(h14_z(i), branch=0)
        rem = PauliOperator.from_text(15, "Z1 Z5 Z9 Z13")
        assert frame.is_deterministic(rem)
        _, res = frame.measure(rem)
        assert res.outcome == 0

    def test_projective_idempotence(self):
        frame = prepare_extended(3)
        f1, r1 = frame.measure(h14_z(0), branch=1)
        f2, r2 = f1.measure(h14_z(0))
        assert r2.deterministic and r2.outcome == r1.outcome
        assert f2.signs() == f1.signs()

    def test_seeded_random_branch(self):
        frame = prepare_extended(3)
        rng = random.Random(11)
        _, res = frame.measure(h14_z(0), rng=rng)
        assert res.outcome in (0, 1) and not res.deterministic

    def test_logical_measurement_rejected(self):
        frame = StabilizerFrame.from_code(rm_code(3))
        with pytest.raises(EngineError):
            frame.measure(PauliOperator.from_text(7, "X1 X2 X3 X4 X5 X6 X7"), branch=0)

    def test_invariants_preserved_by_random_walk(self):
        rng = random.Random(5)
        frame = prepare_extended(3)
        gauge = [h14_z(i) for i in range(3)]
        paulis = [
            PauliOperator.from_qubits(15, xs=(rng.randrange(15),)) for _ in range(4)
        ] + [PauliOperator.from_qubits(15, zs=(rng.randrange(15),)) for _ in range(4)]
        for step in range(20):
            if rng.random() < 0.5:
                frame = frame.apply_pauli(rng.choice(paulis))
            else:
                frame, _ = frame.measure(rng.choice(gauge), rng=rng)
        frame.validate()

    def test_coset_sign_of_flipped_generator(self):
        frame = prepare_extended(3)
        z5 = PauliOperator.from_qubits(15, zs=(4,))
        flipped = frame.apply_pauli(z5)
        assert flipped.coset_sign(g14_op(0, "X")) == -1
        assert flipped.coset_sign(g14_op(1, "X")) == 1
        assert frame.coset_sign(PauliOperator.from_text(15, "X5")) is None


class TestBranchEnumerate:
    def test_fresh_frame_gives_all_eight_branches(self):
        frame = prepare_extended(3)
        branches = branch_enumerate(frame, [h14_z(i) for i in range(3)])
        assert len(branches) == 8
        assert sorted(bits for bits, _ in branches) == sorted(
            (a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)
        )

    def test_existing_generators_give_single_branch(self):
        frame = prepare_extended(3)
        ops = [g14_op(i, "X") for i in range(4)]
        branches = branch_enumerate(frame, ops)
        assert len(branches) == 1
        assert branches[0][0] == (0, 0, 0, 0)

    def test_x5_error_leaves_gauge_branch_set_unchanged(self):
        # Qubit 5 is outside all three gauge-row supports, so the flip
        # pattern is 000 and the outcome vectors coincide.
        gauge = [h14_z(i) for i in range(3)]
        for row in gauge:
            assert 4 not in row.support()
        frame = prepare_extended(3).apply_pauli(
            PauliOperator.from_qubits(15, xs=(4,))
        )
        branches = branch_enumerate(frame, gauge)
        assert sorted(bits for bits, _ in branches) == sorted(
            (a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)
        )

    def test_noncommuting_ops_rejected(self):
        frame = prepare_extended(3)
        with pytest.raises(EngineError):
            branch_enumerate(
                frame,
                [
                    PauliOperator.from_qubits(15, xs=(0,)),
                    PauliOperator.from_qubits(15, zs=(0,)),
                ],
            )


class TestLogicalTracking:
    def test_fresh_frame_matches_own_logicals(self):
        frame = prepare_extended(3)
        code = extended_code(3)
        assert frame.logical_matches(code.logical_x, code.logical_z)

    def test_error_breaks_logical_sign(self):
        frame = prepare_extended(3)
        code = extended_code(3)
        # Z1 anticommutes with the tracked logical X.
        corrupted = frame.apply_pauli(PauliOperator.from_qubits(15, zs=(0,)))
        assert not corrupted.logical_matches(code.logical_x, code.logical_z)
        # Re-applying the same error restores it.
        restored = corrupted.apply_pauli(PauliOperator.from_qubits(15, zs=(0,)))
        assert restored.logical_matches(code.logical_x, code.logical_z)

    def test_equivalence_modulo_stabilizers(self):
        # The all-qubit logical X of the 15-qubit code equals the tracked
        # first-block logical times the last-row X stabilizer.
        frame = StabilizerFrame.from_code(rm_code(4))
        lx = PauliOperator.from_row(BitVector(15, (1 << 7) - 1), "X")
        lz = PauliOperator.from_row(BitVector(15, (1 << 7) - 1), "Z")
        for i in range(3):
            frame, _ = frame.measure(
                PauliOperator.from_row(
                    BitVector(15, generator_matrix(3).data[i]), "X"
                ),
                branch=0,
            )
        assert frame.logical_matches(lx, lz)
