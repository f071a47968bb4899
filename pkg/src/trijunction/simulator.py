"""Exact state-vector dynamics and ground-space braid analysis.

States are plain complex128 arrays of length 2^Q treated as values: every
operation returns a fresh array and preserves the norm to better than 1e-12.
Exchange unitaries and Trotter factors are single Pauli rotations and go
through the kernels backend; dense propagators and ground spaces use full
eigendecompositions (desk-scale, up to ``DENSE_QUBIT_LIMIT`` qubits).

Ground-space convention
-----------------------
Within the degenerate lowest eigenspace the returned basis diagonalises the
mapped zero-mode pair operator ("parity"): column 0 has parity +1, column 1
parity -1, each with its first significant amplitude made real positive.  On
the coupler layout the lowest eigenspace is four-dimensional (the gauge
redundancy doubles it); there the slice with gauge eigenvalue equal to the
parity eigenvalue is selected, which is the slice containing the reference
single-site ground pair.  Reported braid phases are basis-independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .hamiltonians import (
    Configuration,
    TrijunctionParams,
    schedule,
    trijunction_h,
    zero_mode_pair,
)
from .majorana import ExchangeOperator, braid_exchanges
from .mappings import QubitLayout, exchange_rotation, gauge_operator, map_hamiltonian, map_monomial
from .pauli import DENSE_QUBIT_LIMIT, PauliString, PauliSum

__all__ = [
    "BraidReport",
    "GroundSpace",
    "apply_braid",
    "apply_exchange",
    "apply_rotation",
    "basis_state",
    "braid_unitary",
    "evolve_exact",
    "fidelity",
    "ground_space",
    "prepare_initial",
    "project_braid",
    "run_adiabatic",
    "run_braiding",
    "trijunction_ground_space",
    "trotter_adiabatic",
    "trotter_step",
]


def basis_state(num_qubits: int, index: int = 0) -> np.ndarray:
    psi = np.zeros(1 << num_qubits, dtype=np.complex128)
    psi[index] = 1.0
    return psi


def fidelity(a: np.ndarray, b: np.ndarray) -> float:
    """|<a|b>|^2."""
    if a.shape != b.shape:
        raise ValueError("state dimensions differ")
    return float(abs(np.vdot(a, b)) ** 2)


def apply_rotation(psi: np.ndarray, string: PauliString, theta: float) -> np.ndarray:
    """exp(-i*theta*P)|psi> for a phase-free Hermitian string P."""
    return kernels.apply_rotation(
        psi, string.num_qubits, string.x, string.z, string.phase_exp, theta
    )


def apply_exchange(
    psi: np.ndarray, o: ExchangeOperator, layout: QubitLayout
) -> np.ndarray:
    string, theta = exchange_rotation(o, layout)
    return apply_rotation(psi, string, theta)


def apply_braid(psi: np.ndarray, layout: QubitLayout, steps: int = 6) -> np.ndarray:
    """Apply the exchange sequence of the first ``steps`` protocol steps."""
    for o in braid_exchanges(layout.n, steps):
        psi = apply_exchange(psi, o, layout)
    return psi


def braid_unitary(
    layout: QubitLayout, steps: int = 3, dense_limit: int = DENSE_QUBIT_LIMIT
) -> np.ndarray:
    """Dense unitary of the first ``steps`` protocol steps (3 = one braid)."""
    if layout.total_qubits > dense_limit:
        raise ValueError(f"dense unitary limited to {dense_limit} qubits")
    U = np.eye(1 << layout.total_qubits, dtype=np.complex128)
    for o in braid_exchanges(layout.n, steps):
        string, theta = exchange_rotation(o, layout)
        U = kernels.rotate_matrix(
            U, string.num_qubits, string.x, string.z, string.phase_exp, theta
        )
    return U


run_braiding = braid_unitary


@dataclass(frozen=True)
class GroundSpace:
    """Isometry onto the two lowest eigenstates, columns ordered by parity."""

    basis: np.ndarray
    energies: np.ndarray


@dataclass(frozen=True)
class BraidReport:
    ugs: np.ndarray
    eigenphases: np.ndarray
    dphi: float
    unitarity_defect: float


def _fix_phase(v: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(np.abs(v) > 1e-8 * np.max(np.abs(v)))
    lead = v[nz[0]]
    return v * (lead.conjugate() / abs(lead))


def _eigenspace_slice(
    B: np.ndarray, op: tuple[float, PauliString], target: float, tol: float = 1e-6
) -> np.ndarray:
    """Columns of span(B) with eigenvalue ``target`` under the restricted op."""
    sign, string = op
    OB = sign * kernels.apply_string_to_matrix(
        B, string.num_qubits, string.x, string.z, string.phase_exp
    )
    R = B.conj().T @ OB
    w, V = np.linalg.eigh(R)
    keep = np.abs(w - target) < tol
    return B @ V[:, keep]


def ground_space(
    h: PauliSum,
    parity: tuple[float, PauliString] | None = None,
    gauge: PauliString | None = None,
    degeneracy_atol: float = 1e-8,
    dense_limit: int = DENSE_QUBIT_LIMIT,
) -> GroundSpace:
    """Two lowest eigenvectors of ``h`` under the documented basis convention.

    ``parity`` is a (sign, string) pair for the conserved zero-mode operator;
    ``gauge`` restricts to its redundancy slice on the coupler layout.  Without
    a parity operator the raw (already orthonormal) eigensolver pair is
    returned phase-fixed, which is only reproducible up to degenerate mixing.
    """
    if h.num_qubits > dense_limit:
        raise ValueError(f"dense ground space limited to {dense_limit} qubits")
    evals, evecs = np.linalg.eigh(h.to_matrix(dense_limit))
    cluster = evals <= evals[0] + degeneracy_atol
    B = evecs[:, cluster]
    if B.shape[1] < 2:
        raise ValueError("ground level is not degenerate")
    if parity is None:
        cols = [B[:, 0], B[:, 1]]
    else:
        cols = []
        for target in (1.0, -1.0):
            sub = _eigenspace_slice(B, parity, target)
            if gauge is not None:
                sub = _eigenspace_slice(sub, (1.0, gauge), target)
            if sub.shape[1] != 1:
                raise ValueError(
                    f"parity/gauge slice has dimension {sub.shape[1]}, expected 1"
                )
            cols.append(sub[:, 0])
    G = np.stack([_fix_phase(c) for c in cols], axis=1)
    return GroundSpace(G, evals[:2].copy())


def trijunction_ground_space(
    config: Configuration, params: TrijunctionParams, layout: QubitLayout
) -> GroundSpace:
    """Ground space of the mapped trijunction Hamiltonian, convention applied."""
    h = map_hamiltonian(trijunction_h(config, params), layout)
    sign_c, parity_string = map_monomial(zero_mode_pair(config, params.n), layout)
    parity = (float(sign_c.real), parity_string)
    gauge = gauge_operator(layout, config.c) if layout.kind == "coupler" else None
    return ground_space(h, parity=parity, gauge=gauge)


def prepare_initial(gs: GroundSpace, sign: int = +1) -> np.ndarray:
    """(g1 +- g2)/sqrt(2)."""
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    psi = (gs.basis[:, 0] + sign * gs.basis[:, 1]) / math.sqrt(2.0)
    return psi / np.linalg.norm(psi)


def project_braid(U: np.ndarray, gs: GroundSpace) -> BraidReport:
    """Project a full unitary onto the ground pair and extract the phases."""
    if U.ndim != 2 or U.shape[0] != U.shape[1]:
        raise ValueError("braid operator must be a square matrix")
    if U.shape[0] != gs.basis.shape[0]:
        raise ValueError("braid operator and ground space dimensions differ")
    W = gs.basis.conj().T @ U @ gs.basis
    lam = np.linalg.eigvals(W)
    dphi = float(abs(np.angle(lam[1] * np.conj(lam[0]))))
    defect = float(np.linalg.norm(W.conj().T @ W - np.eye(2), 2))
    return BraidReport(W, np.angle(lam), dphi, defect)


def evolve_exact(
    psi: np.ndarray, h: PauliSum, t: float, dense_limit: int = DENSE_QUBIT_LIMIT
) -> np.ndarray:
    """exp(-i*H*t)|psi> through a dense eigendecomposition."""
    evals, evecs = np.linalg.eigh(h.to_matrix(dense_limit))
    return evecs @ (np.exp(-1j * evals * t) * (evecs.conj().T @ psi))


def trotter_step(psi: np.ndarray, h: PauliSum, dt: float, reps: int = 1) -> np.ndarray:
    """First-order product formula for exp(-i*H*dt) in the fixed term order."""
    if reps < 1:
        raise ValueError(f"repetitions must be >= 1, got {reps}")
    for _ in range(reps):
        for coeff, string in h.terms:
            psi = apply_rotation(psi, string, coeff * dt / reps)
    return psi


def trotter_adiabatic(
    psi: np.ndarray,
    h_init: PauliSum,
    h_final: PauliSum,
    tau: float,
    substeps: int,
    reps: int = 1,
) -> np.ndarray:
    """One protocol transition: S piecewise-constant slices of the linear
    interpolation, each Trotterised for duration tau/S."""
    if substeps < 1:
        raise ValueError(f"substeps must be >= 1, got {substeps}")
    for s in range(1, substeps + 1):
        lam = s / substeps
        h_s = (1.0 - lam) * h_init + lam * h_final
        psi = trotter_step(psi, h_s, tau / substeps, reps)
    return psi


def run_adiabatic(
    layout: QubitLayout,
    params: TrijunctionParams,
    tau: float,
    substeps: int,
    reps: int = 1,
) -> tuple[np.ndarray, float]:
    """Drive |Psi(0)>_+ through all six transitions; return the final state
    and its overlap-squared with |Psi(0)>_-."""
    gs = trijunction_ground_space(Configuration(1, 2), params, layout)
    mapped: dict[Configuration, PauliSum] = {}

    def h_of(config: Configuration) -> PauliSum:
        if config not in mapped:
            mapped[config] = map_hamiltonian(trijunction_h(config, params), layout)
        return mapped[config]

    psi = prepare_initial(gs, +1)
    for config_init, config_final in schedule(params, tau):
        psi = trotter_adiabatic(
            psi, h_of(config_init), h_of(config_final), tau, substeps, reps
        )
    target = prepare_initial(gs, -1)
    return psi, fidelity(target, psi)
