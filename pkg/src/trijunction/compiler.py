"""Gate compilation and circuit resource accounting for both protocols.

Gates are abstract: single-qubit basis changes (h, s, sdg), z rotations
(rz, angle convention exp(-i*angle/2*Z)) and one two-qubit entangler (cx).
Entangler count is the hardware-agnostic two-qubit metric; cx, cz and
echoed-cross-resonance differ only by single-qubit dressing so their counts
coincide.  Each Pauli rotation exp(-i*theta*P) of weight w compiles to a
basis change onto Z, a cx ladder down the support, one rz(2*theta), and the
mirror image: exactly 2*(w-1) entanglers.  No cross-fragment cancellation is
attempted; counts are structural.

Depth is ASAP-scheduled on all-to-all connectivity: a gate starts one tick
after the latest gate sharing any of its qubits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .hamiltonians import Configuration, TrijunctionParams, schedule, trijunction_h
from .majorana import build_sub_operators, protocol_steps
from .mappings import QubitLayout, exchange_rotation, layout_for, map_hamiltonian
from .pauli import PauliString, PauliSum

__all__ = [
    "Circuit",
    "Gate",
    "ResourceReport",
    "circuit_unitary",
    "compile_adiabatic",
    "compile_braiding",
    "compile_rotation",
    "count_resources",
    "sweep",
]


class Gate(NamedTuple):
    name: str
    qubits: tuple[int, ...]
    angle: float | None = None


@dataclass
class Circuit:
    num_qubits: int
    gates: list[Gate] = field(default_factory=list)
    global_phase: float = 0.0
    # gate-count boundaries after each protocol step / transition
    step_bounds: list[int] = field(default_factory=list)

    def append(self, gates: Iterable[Gate]):
        self.gates.extend(gates)

    def mark_step(self):
        self.step_bounds.append(len(self.gates))


@dataclass(frozen=True)
class ResourceReport:
    n: int
    method: str
    mapping: str
    two_qubit_count: int
    depth: int
    per_step: tuple[int, ...] = ()


def compile_rotation(
    string: PauliString, angle: float
) -> tuple[list[Gate], float]:
    """Gate fragment for exp(-i*angle*P) plus its global-phase contribution.

    Weight-0 strings produce no gates, only the phase exp(-i*angle).
    """
    if string.phase_exp != 0:
        raise ValueError("rotation axis must be a phase-free Hermitian string")
    support = string.support()
    if not support:
        return [], -angle
    gates: list[Gate] = []
    pre: list[Gate] = []
    post: list[Gate] = []
    for q in support:
        axis = string.axis(q)
        if axis == "X":
            pre.append(Gate("h", (q,)))
            post.append(Gate("h", (q,)))
        elif axis == "Y":
            pre.append(Gate("sdg", (q,)))
            pre.append(Gate("h", (q,)))
            post.append(Gate("h", (q,)))
            post.append(Gate("s", (q,)))
    gates.extend(pre)
    for i in range(len(support) - 1):
        gates.append(Gate("cx", (support[i], support[i + 1])))
    gates.append(Gate("rz", (support[-1],), 2.0 * angle))
    for i in range(len(support) - 2, -1, -1):
        gates.append(Gate("cx", (support[i], support[i + 1])))
    gates.extend(post)
    return gates, 0.0


def compile_braiding(layout: QubitLayout, steps: int = 6) -> Circuit:
    """Concatenated pi/4 rotations of every exchange in the first ``steps``."""
    circuit = Circuit(layout.total_qubits)
    for step in protocol_steps()[:steps]:
        for o in build_sub_operators(step, layout.n):
            string, theta = exchange_rotation(o, layout)
            gates, phase = compile_rotation(string, theta)
            circuit.append(gates)
            circuit.global_phase += phase
        circuit.mark_step()
    return circuit


def compile_adiabatic(
    layout: QubitLayout,
    params: TrijunctionParams,
    tau: float,
    substeps: int,
    reps: int = 1,
) -> Circuit:
    """Trotterised interpolation circuit over all six transitions.

    Term order inside each slice matches the simulator's fixed PauliSum order,
    with rotation angle coeff * (tau/S) / r repeated r times.
    """
    if substeps < 1:
        raise ValueError(f"substeps must be >= 1, got {substeps}")
    if reps < 1:
        raise ValueError(f"repetitions must be >= 1, got {reps}")
    circuit = Circuit(layout.total_qubits)
    mapped: dict[Configuration, PauliSum] = {}

    def h_of(config: Configuration) -> PauliSum:
        if config not in mapped:
            mapped[config] = map_hamiltonian(trijunction_h(config, params), layout)
        return mapped[config]

    for config_init, config_final in schedule(params, tau):
        h_i, h_f = h_of(config_init), h_of(config_final)
        for s in range(1, substeps + 1):
            lam = s / substeps
            h_s = (1.0 - lam) * h_i + lam * h_f
            for _ in range(reps):
                for coeff, string in h_s.terms:
                    gates, phase = compile_rotation(
                        string, coeff * tau / (substeps * reps)
                    )
                    circuit.append(gates)
                    circuit.global_phase += phase
        circuit.mark_step()
    return circuit


def count_resources(
    circuit: Circuit, n: int = 0, method: str = "", mapping: str = ""
) -> ResourceReport:
    """Entangler count and ASAP depth, with per-step entangler breakdown."""
    clocks = [0] * circuit.num_qubits
    depth = 0
    prefix = [0]  # cumulative entangler count before gate i
    for gate in circuit.gates:
        prefix.append(prefix[-1] + (1 if gate.name == "cx" else 0))
        tick = 1 + max((clocks[q] for q in gate.qubits), default=0)
        for q in gate.qubits:
            clocks[q] = tick
        depth = max(depth, tick)
    two_qubit = prefix[-1]
    per_step = []
    prev = 0
    for bound in circuit.step_bounds:
        per_step.append(prefix[bound] - prev)
        prev = prefix[bound]
    return ResourceReport(
        n=n,
        method=method,
        mapping=mapping,
        two_qubit_count=two_qubit,
        depth=depth,
        per_step=tuple(per_step),
    )


def sweep(
    n_values: Sequence[int],
    methods: Sequence[str] = ("adiabatic", "braiding"),
    mappings: Sequence[str] = ("continuous", "coupler"),
    substeps: int = 10,
    reps: int = 1,
    tau: float = 1.0,
) -> list[ResourceReport]:
    """One report per (n, method, mapping), ordered exactly that way."""
    reports = []
    for n in sorted(n_values):
        for method in sorted(methods):
            for mapping in sorted(mappings):
                layout = layout_for(mapping, n)
                if method == "braiding":
                    circuit = compile_braiding(layout, steps=6)
                elif method == "adiabatic":
                    params = TrijunctionParams(n=n)
                    circuit = compile_adiabatic(layout, params, tau, substeps, reps)
                else:
                    raise ValueError(f"unknown method {method!r}")
                reports.append(count_resources(circuit, n, method, mapping))
    return reports


_H = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2.0)
_S = np.diag([1.0, 1.0j]).astype(np.complex128)
_SDG = _S.conj()


def _gate_matrix(gate: Gate, num_qubits: int) -> np.ndarray:
    if gate.name == "cx":
        control, target = gate.qubits
        dim = 1 << num_qubits
        idx = np.arange(dim)
        flipped = np.where((idx >> control) & 1, idx ^ (1 << target), idx)
        M = np.zeros((dim, dim), dtype=np.complex128)
        M[flipped, idx] = 1.0
        return M
    if gate.name == "rz":
        m = np.diag(
            [np.exp(-0.5j * gate.angle), np.exp(0.5j * gate.angle)]
        ).astype(np.complex128)
    else:
        m = {"h": _H, "s": _S, "sdg": _SDG}[gate.name]
    (q,) = gate.qubits
    full = np.array([[1.0 + 0.0j]])
    for qq in range(num_qubits - 1, -1, -1):
        full = np.kron(full, m if qq == q else np.eye(2, dtype=np.complex128))
    return full


def circuit_unitary(circuit: Circuit, dense_limit: int = 10) -> np.ndarray:
    """Dense matrix of the circuit including its recorded global phase."""
    if circuit.num_qubits > dense_limit:
        raise ValueError(f"dense circuit evaluation limited to {dense_limit} qubits")
    U = np.eye(1 << circuit.num_qubits, dtype=np.complex128)
    for gate in circuit.gates:
        U = _gate_matrix(gate, circuit.num_qubits) @ U
    return np.exp(1j * circuit.global_phase) * U
