"""Majorana-to-qubit translations for the two trijunction layouts.

coupler layout (3n + 1 qubits)
    Arm a, site j occupies qubit (a-1)*n + j and the shared coupler qubit sits
    at index 3n.  A mode maps to the coupler Pauli tagged to its arm (arm 1 ->
    X, arm 2 -> Y, arm 3 -> Z) times the site Pauli of its orientation times a
    Z chain over the lower sites of the same arm.

continuous layout (3n qubits)
    Arms are concatenated (arm a, site j -> global site (a-1)*n + j) and a
    mode maps to its site Pauli times a Z chain over all lower global sites.

Both translations send distinct modes to mutually anticommuting, Hermitian,
squares-to-identity strings.  The coupler register carries the algebra twice
over: the three ``gauge_operator`` strings commute with every mapped mode and
generate the redundancy, so each mapped spectrum is doubled relative to the
continuous one (restricting to a fixed gauge sector recovers it exactly).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .majorana import ExchangeOperator, MajoranaHamiltonian, MajoranaIndex, MajoranaMonomial
from .pauli import PauliString, PauliSum, multiply

__all__ = [
    "COUPLER_AXES",
    "QubitLayout",
    "continuous_layout",
    "coupler_layout",
    "exchange_rotation",
    "gauge_operator",
    "layout_for",
    "map_hamiltonian",
    "map_majorana",
    "map_monomial",
]

COUPLER_AXES = {1: "X", 2: "Y", 3: "Z"}


@dataclass(frozen=True)
class QubitLayout:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in ("coupler", "continuous"):
            raise ValueError(f"unknown layout kind {self.kind!r}")
        if self.n < 1:
            raise ValueError(f"sites per arm must be >= 1, got {self.n}")

    @property
    def total_qubits(self) -> int:
        return 3 * self.n + (1 if self.kind == "coupler" else 0)

    @property
    def coupler_qubit(self) -> int:
        if self.kind != "coupler":
            raise ValueError("continuous layout has no coupler qubit")
        return 3 * self.n

    def qubit(self, arm: int, site: int) -> int:
        if arm not in (1, 2, 3):
            raise ValueError(f"arm must be 1, 2 or 3, got {arm}")
        if not 0 <= site < self.n:
            raise ValueError(f"site {site} out of range for n={self.n}")
        return (arm - 1) * self.n + site


def coupler_layout(n: int) -> QubitLayout:
    return QubitLayout("coupler", n)


def continuous_layout(n: int) -> QubitLayout:
    return QubitLayout("continuous", n)


def layout_for(kind: str, n: int) -> QubitLayout:
    return QubitLayout(kind, n)


def map_majorana(m: MajoranaIndex, layout: QubitLayout) -> PauliString:
    """Pauli string of one mode; always phase +1."""
    axes = {}
    if layout.kind == "coupler":
        axes[layout.coupler_qubit] = COUPLER_AXES[m.arm]
        axes[layout.qubit(m.arm, m.site)] = m.orientation.upper()
        for i in range(m.site):
            axes[layout.qubit(m.arm, i)] = "Z"
    else:
        g = layout.qubit(m.arm, m.site)
        axes[g] = m.orientation.upper()
        for i in range(g):
            axes[i] = "Z"
    return PauliString.from_axes(layout.total_qubits, axes)


def map_monomial(
    m: MajoranaMonomial, layout: QubitLayout
) -> tuple[complex, PauliString]:
    """Product of mapped factors; the group phase folds into the coefficient."""
    string = PauliString.identity(layout.total_qubits)
    for f in m.factors:
        string = multiply(string, map_majorana(f, layout))
    return m.coefficient * string.phase, string.drop_phase()


def map_hamiltonian(h: MajoranaHamiltonian, layout: QubitLayout) -> PauliSum:
    return PauliSum(
        layout.total_qubits, (map_monomial(t, layout) for t in h.terms)
    )


def gauge_operator(layout: QubitLayout, arm: int) -> PauliString:
    """Coupler Pauli of ``arm`` times Z on every site of the other two arms.

    Commutes with every mapped mode; the three of them (one per arm) close the
    redundancy algebra of the coupler register.
    """
    axes = {layout.coupler_qubit: COUPLER_AXES[arm]}
    for other in (1, 2, 3):
        if other == arm:
            continue
        for site in range(layout.n):
            axes[layout.qubit(other, site)] = "Z"
    return PauliString.from_axes(layout.total_qubits, axes)


def exchange_rotation(
    o: ExchangeOperator, layout: QubitLayout
) -> tuple[PauliString, float]:
    """(P, theta) with the exchange unitary equal to exp(-i*theta*P).

    The mode pair product g_k g_l squares to -1, so it maps to +-i times a
    Hermitian string P and (1 + g_k g_l)/sqrt(2) = exp(-i*theta*P) with
    theta = -+ pi/4.
    """
    coeff, string = map_monomial(MajoranaMonomial(1.0, (o.k, o.l)), layout)
    if abs(coeff.real) > 1e-12 or abs(abs(coeff.imag) - 1.0) > 1e-12:
        raise ValueError(f"mode pair mapped to non-quadrature coefficient {coeff}")
    return string, -coeff.imag * (math.pi / 4.0)
