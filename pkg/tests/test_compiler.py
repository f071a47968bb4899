"""Gate decomposition, resource counting and the method/mapping orderings."""

import numpy as np
import pytest

from trijunction.compiler import (
    Circuit,
    Gate,
    circuit_unitary,
    compile_adiabatic,
    compile_braiding,
    compile_rotation,
    count_resources,
    sweep,
)
from trijunction.hamiltonians import TrijunctionParams, trijunction_h
from trijunction.mappings import coupler_layout, layout_for, map_hamiltonian
from trijunction.pauli import PauliString, to_matrix
from trijunction.simulator import braid_unitary


def expm_oracle(H, t):
    evals, evecs = np.linalg.eigh(H)
    return (evecs * np.exp(-1j * evals * t)) @ evecs.conj().T


def fragment_unitary(string, angle):
    gates, phase = compile_rotation(string, angle)
    return circuit_unitary(Circuit(string.num_qubits, list(gates), phase))


def two_qubit_gates(gates):
    return [gate for gate in gates if gate.name == "cx"]


def test_weight_one_needs_no_entangler():
    gates, _ = compile_rotation(PauliString.from_label("IZI"), 0.3)
    assert not two_qubit_gates(gates)


def test_weight_two_needs_two_entanglers():
    gates, _ = compile_rotation(PauliString.from_label("XX"), 0.3)
    assert len(two_qubit_gates(gates)) == 2


def test_entangler_count_matches_weight_rule():
    rng = np.random.default_rng(41)
    for _ in range(20):
        num_qubits = int(rng.integers(1, 5))
        x = int(rng.integers(0, 1 << num_qubits))
        z = int(rng.integers(0, 1 << num_qubits))
        string = PauliString(num_qubits, x, z, 0)
        if string.weight == 0:
            continue
        gates, _ = compile_rotation(string, 0.7)
        assert len(two_qubit_gates(gates)) == 2 * (string.weight - 1)


def test_weight_zero_is_a_recorded_phase():
    gates, phase = compile_rotation(PauliString.identity(3), 0.4)
    assert gates == []
    assert phase == pytest.approx(-0.4)


def test_fragments_match_exact_exponentials():
    rng = np.random.default_rng(42)
    for _ in range(25):
        num_qubits = int(rng.integers(1, 5))
        x = int(rng.integers(0, 1 << num_qubits))
        z = int(rng.integers(0, 1 << num_qubits))
        string = PauliString(num_qubits, x, z, 0)
        angle = float(rng.uniform(-2, 2))
        got = fragment_unitary(string, angle)
        want = expm_oracle(to_matrix(string), angle)
        overlap = np.trace(want.conj().T @ got)
        got *= np.conj(overlap / abs(overlap))
        assert np.linalg.norm(got - want, 2) < 1e-9


def test_rejects_phased_rotation_axis():
    with pytest.raises(ValueError):
        compile_rotation(PauliString.from_label("X", phase_exp=1), 0.1)


def test_count_resources_empty_circuit():
    report = count_resources(Circuit(3))
    assert report.two_qubit_count == 0 and report.depth == 0


def test_count_resources_disjoint_entanglers_run_in_parallel():
    c = Circuit(4, [Gate("cx", (0, 1)), Gate("cx", (2, 3))])
    report = count_resources(c)
    assert report.two_qubit_count == 2 and report.depth == 1


def test_count_resources_serializes_shared_qubits():
    c = Circuit(3, [Gate("cx", (0, 1)), Gate("cx", (1, 2)), Gate("h", (0,))])
    report = count_resources(c)
    assert report.depth == 2
    assert report.two_qubit_count == 2


def test_depth_is_invariant_under_qubit_relabeling():
    rng = np.random.default_rng(43)
    gates = []
    for _ in range(30):
        if rng.random() < 0.5:
            gates.append(Gate("h", (int(rng.integers(0, 5)),)))
        else:
            a, b = rng.choice(5, size=2, replace=False)
            gates.append(Gate("cx", (int(a), int(b))))
    perm = rng.permutation(5)
    relabeled = [
        Gate(g.name, tuple(int(perm[q]) for q in g.qubits), g.angle) for g in gates
    ]
    assert (
        count_resources(Circuit(5, gates)).depth
        == count_resources(Circuit(5, relabeled)).depth
    )


def test_braiding_single_site_coupler_counts():
    circuit = compile_braiding(coupler_layout(1), 6)
    report = count_resources(circuit)
    # 6 steps x 2 junction rotations, each weight 3 -> 4 entanglers
    assert report.two_qubit_count == 48
    assert report.per_step == (8,) * 6
    rotations = sum(1 for g in circuit.gates if g.name == "rz")
    assert rotations == 12  # 12n rotations over the full protocol


@pytest.mark.parametrize("kind", ["coupler", "continuous"])
def test_braiding_rotation_count_is_12n(kind):
    for n in (1, 2, 3):
        circuit = compile_braiding(layout_for(kind, n), 6)
        assert sum(1 for g in circuit.gates if g.name == "rz") == 12 * n


@pytest.mark.parametrize("kind", ["coupler", "continuous"])
def test_braiding_two_qubit_count_is_affine_in_n(kind):
    counts = [
        count_resources(compile_braiding(layout_for(kind, n), 6)).two_qubit_count
        for n in (1, 2, 3, 4)
    ]
    diffs = np.diff(counts)
    assert len(set(diffs.tolist())) == 1


def test_adiabatic_count_matches_closed_form():
    layout = coupler_layout(2)
    params = TrijunctionParams(n=2)
    substeps, reps = 3, 2
    circuit = compile_adiabatic(layout, params, 1.0, substeps, reps)
    report = count_resources(circuit)
    total = 0
    h_cache = {}
    from trijunction.hamiltonians import schedule

    for ci, cf in schedule(params, 1.0):
        for cfg in (ci, cf):
            if cfg not in h_cache:
                h_cache[cfg] = map_hamiltonian(trijunction_h(cfg, params), layout)
        for s in range(1, substeps + 1):
            lam = s / substeps
            h_s = (1 - lam) * h_cache[ci] + lam * h_cache[cf]
            total += reps * sum(2 * (t.weight - 1) for _, t in h_s.terms)
    assert report.two_qubit_count == total


@pytest.mark.parametrize("kind", ["coupler", "continuous"])
def test_braiding_circuit_matches_simulator_unitary(kind):
    layout = layout_for(kind, 1)
    got = circuit_unitary(compile_braiding(layout, 6))
    want = braid_unitary(layout, 6)
    overlap = np.trace(want.conj().T @ got)
    got *= np.conj(overlap / abs(overlap))
    assert np.linalg.norm(got - want, 2) < 1e-9


def test_adiabatic_circuit_matches_trotterized_state_path():
    from trijunction.simulator import basis_state, trotter_adiabatic

    layout = coupler_layout(1)
    params = TrijunctionParams(n=1)
    tau, substeps = 0.7, 2
    circuit = compile_adiabatic(layout, params, tau, substeps)
    U = circuit_unitary(circuit)
    psi = basis_state(4, 3)
    from trijunction.hamiltonians import schedule

    expected = psi
    for ci, cf in schedule(params, tau):
        expected = trotter_adiabatic(
            expected,
            map_hamiltonian(trijunction_h(ci, params), layout),
            map_hamiltonian(trijunction_h(cf, params), layout),
            tau,
            substeps,
        )
    got = U @ psi
    overlap = np.vdot(expected, got)
    got *= np.conj(overlap / abs(overlap))
    np.testing.assert_allclose(got, expected, atol=1e-9)


def test_sweep_shape_and_order():
    rows = sweep(range(1, 3))
    assert len(rows) == 8
    keys = [(r.n, r.method, r.mapping) for r in rows]
    assert keys == sorted(keys)


def test_sweep_orderings_hold_at_default_settings():
    rows = sweep(range(1, 5))
    braiding = {(r.n, r.mapping): r for r in rows if r.method == "braiding"}
    adiabatic = {(r.n, r.mapping): r for r in rows if r.method == "adiabatic"}
    for n in (2, 3, 4):
        for mapping in ("coupler", "continuous"):
            assert (
                braiding[(n, mapping)].two_qubit_count
                < adiabatic[(n, mapping)].two_qubit_count
            )
        assert braiding[(n, "coupler")].depth < braiding[(n, "continuous")].depth


def test_sweep_rejects_unknown_method():
    with pytest.raises(ValueError):
        sweep([1], methods=("annealing",))
