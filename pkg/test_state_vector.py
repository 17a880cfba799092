import math
import numpy as np
import pytest
from numpy.testing import assert_allclose
from pyqip.errors import CapacityError, InputValidationError
from pyqip.sim import CircuitProgram, GateOp, StateVector, apply, execute, sample, zero_state

def _random_state(num_qubits: int, seed: int) -> StateVector:
    rng = np.random.default_rng(seed)
    amplitudes = rng.normal(size=1 << num_qubits) + 1j * rng.normal(size=1 << num_qubits)
    return StateVector(amplitudes / np.linalg.norm(amplitudes))

def test_zero_state_has_unit_amplitude_on_basis_zero():
    state = zero_state(3)
    assert state.num_qubits == 3
    assert state.amplitude(0) == 1
    assert_allclose(state.probabilities().sum(), 1.0)

def test_qubit_zero_is_least_significant():
    state = execute(CircuitProgram.of(3, [GateOp.x(1)]))
    assert_allclose(abs(state.amplitude(2)), 1.0)

def test_controlled_x_flips_only_when_control_is_set():
    untouched = execute(CircuitProgram.of(2, [GateOp.x(1, controls=(0,))]))
    assert_allclose(abs(untouched.amplitude(0)), 1.0)

    flipped = execute(CircuitProgram.of(2, [GateOp.x(0), GateOp.x(1, controls=(0,))]))
    assert_allclose(abs(flipped.amplitude(3)), 1.0)

def test_hadamard_and_phase():
    state = execute(CircuitProgram.of(1, [GateOp.h(0), GateOp.p(math.pi / 3, 0)]))
    assert_allclose(state.amplitude(0), 1 / math.sqrt(2))
    assert_allclose(state.amplitude(1), np.exp(1j * math.pi / 3) / math.sqrt(2))

def test_ry_rotates_real_amplitudes():
    theta = 0.7
    state = execute(CircuitProgram.of(1, [GateOp.ry(theta, 0)]))
    assert_allclose(state.amplitudes, [math.cos(theta / 2), math.sin(theta / 2)], atol=1e-15)

    flipped = execute(CircuitProgram.of(1, [GateOp.ry(math.pi, 0)]))
    assert_allclose(abs(flipped.amplitude(1)), 1.0)

def test_controlled_phase_needs_every_control():
    program = CircuitProgram.of(3, [GateOp.h(2), GateOp.x(0), GateOp.p(math.pi, 2, controls=(0, 1))])
    state = execute(program)
    assert_allclose(state.amplitude(0b101), 1 / math.sqrt(2))

    program = CircuitProgram.of(3, [GateOp.h(2), GateOp.x(0), GateOp.x(1), GateOp.p(math.pi, 2, controls=(0, 1))])
    state = execute(program)
    assert_allclose(state.amplitude(0b111), -1 / math.sqrt(2))

def test_qft_of_basis_state_matches_the_fourier_phases():
    size = 8
    state = StateVector.basis(3, 5).apply_qft(range(3))
    expected = np.exp(2j * np.pi * 5 * np.arange(size) / size) / math.sqrt(size)
    assert_allclose(state.amplitudes, expected, atol=1e-12)

def test_qft_on_sub_register_leaves_other_qubits_alone():
    # qubit 0 set, sub-register (1, 2) holds x = 3
    state = StateVector.basis(3, 1 + 2 * 3).apply_qft((1, 2))
    for y in range(4):
        assert_allclose(state.amplitude(1 + 2 * y), np.exp(2j * np.pi * 3 * y / 4) / 2, atol=1e-12)
    for even in range(0, 8, 2):
        assert_allclose(state.amplitude(even), 0, atol=1e-12)

def test_qft_respects_register_order():
    # reversed register order: qubit 2 carries weight 1, so x = 1 reads as basis 4
    state = StateVector.basis(3, 4).apply_qft((2, 1, 0))
    reference = StateVector.basis(3, 1).apply_qft((0, 1, 2))
    permuted = [reference.amplitude(int(f"{k:03b}"[::-1], 2)) for k in range(8)]
    assert_allclose(state.amplitudes, permuted, atol=1e-12)

def test_inverse_qft_undoes_qft():
    state = _random_state(5, seed=11)
    roundtrip = state.copy().apply_qft((1, 3, 4)).apply_qft((1, 3, 4), inverse=True)
    assert_allclose(roundtrip.amplitudes, state.amplitudes, atol=1e-12)

def test_program_inverse_returns_to_zero():
    program = CircuitProgram.of(3, [
        GateOp.h(0),
        GateOp.ry(0.4, 1, controls=(0,)),
        GateOp.p(1.1, 2, controls=(0, 1)),
        GateOp.qft((0, 1, 2)),
        GateOp.x(2),
    ])
    state = program.then(program.inverse()).run()
    assert_allclose(abs(state.amplitude(0)), 1.0, atol=1e-12)

def test_functional_apply_leaves_input_untouched():
    state = zero_state(2)
    result = apply(state, GateOp.x(0))
    assert state.amplitude(0) == 1
    assert_allclose(abs(result.amplitude(1)), 1.0)

def test_embedded_program_shifts_qubits():
    program = CircuitProgram.of(1, [GateOp.x(0)]).embedded(2, 3)
    assert program.ops[0].target == 2
    assert_allclose(abs(program.run().amplitude(4)), 1.0)

def test_sampling_is_reproducible_for_a_seed():
    state = execute(CircuitProgram.of(2, [GateOp.h(0), GateOp.h(1)]))
    first = sample(state, 1000, seed=7)
    assert first == sample(state, 1000, seed=7)
    assert sum(first.values()) == 1000
    assert set(first) <= {0, 1, 2, 3}

def test_program_text_keeps_gates_and_angles():
    program = CircuitProgram.of(3, [GateOp.h(0), GateOp.p(0.1234567890123, 2, (0, 1)), GateOp.iqft((1, 2))])
    text = program.to_text()
    assert text.splitlines()[0] == "qubits 3"
    assert "P 2 ctrl=0,1 theta=0.1234567890123" in text
    assert CircuitProgram.from_text("# comment\n" + text) == program

def test_rows_list_every_basis_state():
    rows = execute(CircuitProgram.of(2, [GateOp.h(0)])).to_rows()
    assert [row["basis"] for row in rows] == [0, 1, 2, 3]
    assert_allclose([row["prob"] for row in rows], [0.5, 0.5, 0, 0], atol=1e-15)

def test_capacity_is_checked():
    with pytest.raises(CapacityError):
        zero_state(25)
    with pytest.raises(CapacityError):
        zero_state(0)

@pytest.mark.parametrize("make_op", [
    lambda: GateOp.x(0, controls=(0,)),
    lambda: GateOp(kind="H", qubits=(0, 1)),
    lambda: GateOp.qft((0, 0)),
    lambda: GateOp.h(-1),
])
def test_invalid_gates_are_rejected(make_op):
    with pytest.raises(InputValidationError):
        make_op()

def test_out_of_range_qubit_is_rejected():
    with pytest.raises(InputValidationError):
        CircuitProgram.of(2, [GateOp.h(2)])

def test_unnormalized_amplitudes_are_rejected():
    with pytest.raises(InputValidationError):
        StateVector(np.array([1.0, 1.0]))

@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_qft_closed_form_for_every_basis_state(n):
    size = 1 << n
    keys = np.arange(size)
    for j in range(size):
        expected = np.exp(2j * np.pi * j * keys / size) / math.sqrt(size)
        assert_allclose(StateVector.basis(n, j).apply_qft(range(n)).amplitudes, expected, atol=1e-12)
        assert_allclose(StateVector.basis(n, j).apply_qft(range(n), inverse=True).amplitudes, expected.conj(), atol=1e-12)

def _random_program(num_qubits: int, num_gates: int, seed: int) -> CircuitProgram:
    rng = np.random.default_rng(seed)
    ops = []
    for _ in range(num_gates):
        kind = rng.integers(0, 5)
        if kind == 4:
            width = int(rng.integers(1, 5))
            ops.append(GateOp.qft(rng.choice(num_qubits, size=width, replace=False).tolist()))
            continue
        qubits = rng.choice(num_qubits, size=int(rng.integers(1, 4)), replace=False).tolist()
        target, controls = qubits[0], qubits[1:]
        angle = float(rng.uniform(-np.pi, np.pi))
        if kind == 0:
            ops.append(GateOp.h(target, controls))
        elif kind == 1:
            ops.append(GateOp.x(target, controls))
        elif kind == 2:
            ops.append(GateOp.p(angle, target, controls))
        else:
            ops.append(GateOp.ry(angle, target, controls))
    return CircuitProgram.of(num_qubits, ops)

def test_long_random_programs_keep_the_norm_and_invert():
    program = _random_program(12, 10_000, seed=2024)
    state = program.run()
    assert_allclose(state.norm(), 1.0, atol=1e-9)
    restored = program.inverse().run(state)
    assert_allclose(abs(restored.amplitude(0)), 1.0, atol=1e-8)

def test_hadamard_counts_at_default_shots():
    histogram = execute(CircuitProgram.of(1, [GateOp.h(0)])).sample(8192, seed=5)
    assert sum(histogram.values()) == 8192
    assert 3900 <= histogram[0] <= 4300
    assert 3900 <= histogram[1] <= 4300
