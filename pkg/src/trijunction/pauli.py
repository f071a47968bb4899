"""Phase-tracked multi-qubit Pauli strings and real-weighted Hermitian sums.

Encoding
--------
A string over Q qubits is stored as two bitmasks plus a phase exponent:

    operator = i**phase_exp * prod_q W_q,
    W(x=1, z=0) = X,  W(x=0, z=1) = Z,  W(x=1, z=1) = Y,  W(0, 0) = I,

where bit q of ``x``/``z`` selects the factor on qubit q.  With the per-qubit
convention W = i**(x*z) * X**x * Z**z every W is Hermitian, so a string is
Hermitian exactly when its phase is +-1 (``phase_exp`` even).

Qubit 0 is the rightmost factor in ket labels |q_{Q-1} ... q_1 q_0>, and bit b
of a basis index is qubit b.  Labels returned by :meth:`PauliString.label` are
written in the same ket order.

All values are immutable; every operation is pure.
"""

from __future__ import annotations

from typing import Iterable, Mapping

import numpy as np

from .kernels import pauli_action_phases

__all__ = [
    "DENSE_QUBIT_LIMIT",
    "PauliString",
    "PauliSum",
    "commutes",
    "multiply",
    "sum_to_matrix",
    "to_matrix",
]

DENSE_QUBIT_LIMIT = 14

_AXIS_OF_BITS = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
_BITS_OF_AXIS = {v: k for k, v in _AXIS_OF_BITS.items()}


class PauliString:
    """One tensor product of single-qubit Paulis with a tracked i**k phase."""

    __slots__ = ("num_qubits", "x", "z", "phase_exp")

    def __init__(self, num_qubits: int, x: int = 0, z: int = 0, phase_exp: int = 0):
        if num_qubits < 0:
            raise ValueError("qubit count must be non-negative")
        mask = (1 << num_qubits) - 1
        if x & ~mask or z & ~mask:
            raise ValueError("bitmask exceeds qubit count")
        object.__setattr__(self, "num_qubits", num_qubits)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "phase_exp", phase_exp & 3)

    def __setattr__(self, name, value):
        raise AttributeError("PauliString is immutable")

    @classmethod
    def identity(cls, num_qubits: int) -> "PauliString":
        return cls(num_qubits)

    @classmethod
    def from_axes(
        cls, num_qubits: int, axes: Mapping[int, str], phase_exp: int = 0
    ) -> "PauliString":
        """Build from a {qubit: axis} mapping, axis in 'IXYZ'."""
        x = z = 0
        for qubit, axis in axes.items():
            if not 0 <= qubit < num_qubits:
                raise ValueError(f"qubit {qubit} out of range")
            bx, bz = _BITS_OF_AXIS[axis.upper()]
            x |= bx << qubit
            z |= bz << qubit
        return cls(num_qubits, x, z, phase_exp)

    @classmethod
    def from_label(cls, label: str, phase_exp: int = 0) -> "PauliString":
        """Build from a ket-ordered label, leftmost character = qubit Q-1."""
        axes = {len(label) - 1 - i: ch for i, ch in enumerate(label)}
        return cls.from_axes(len(label), axes, phase_exp)

    def axis(self, qubit: int) -> str:
        return _AXIS_OF_BITS[((self.x >> qubit) & 1, (self.z >> qubit) & 1)]

    def label(self) -> str:
        return "".join(self.axis(q) for q in range(self.num_qubits - 1, -1, -1))

    @property
    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    @property
    def phase(self) -> complex:
        return 1j ** self.phase_exp

    @property
    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    @property
    def is_hermitian(self) -> bool:
        return self.phase_exp % 2 == 0

    def support(self) -> tuple[int, ...]:
        bits = self.x | self.z
        return tuple(q for q in range(self.num_qubits) if (bits >> q) & 1)

    def drop_phase(self) -> "PauliString":
        return PauliString(self.num_qubits, self.x, self.z, 0)

    def sort_key(self) -> tuple:
        return (self.weight, self.label())

    def to_matrix(self) -> np.ndarray:
        return to_matrix(self)

    def __mul__(self, other: "PauliString") -> "PauliString":
        return multiply(self, other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PauliString)
            and self.num_qubits == other.num_qubits
            and self.x == other.x
            and self.z == other.z
            and self.phase_exp == other.phase_exp
        )

    def __hash__(self) -> int:
        return hash((self.num_qubits, self.x, self.z, self.phase_exp))

    def __repr__(self) -> str:
        sign = ("+", "+i*", "-", "-i*")[self.phase_exp]
        return f"{sign}{self.label()}"


def multiply(a: PauliString, b: PauliString) -> PauliString:
    """Group product a*b with the accumulated i**k phase."""
    if a.num_qubits != b.num_qubits:
        raise ValueError("Pauli strings act on different qubit counts")
    x = a.x ^ b.x
    z = a.z ^ b.z
    exp = (
        a.phase_exp
        + b.phase_exp
        + (a.x & a.z).bit_count()
        + (b.x & b.z).bit_count()
        - (x & z).bit_count()
        + 2 * (a.z & b.x).bit_count()
    )
    return PauliString(a.num_qubits, x, z, exp)


def commutes(a: PauliString, b: PauliString) -> bool:
    """True iff a*b == b*a (symplectic overlap is even)."""
    if a.num_qubits != b.num_qubits:
        raise ValueError("Pauli strings act on different qubit counts")
    return ((a.x & b.z).bit_count() + (a.z & b.x).bit_count()) % 2 == 0


def to_matrix(s: PauliString, dense_limit: int = DENSE_QUBIT_LIMIT) -> np.ndarray:
    """Dense 2^Q x 2^Q realisation; permutation-plus-phase fill, no krons."""
    if s.num_qubits > dense_limit:
        raise ValueError(f"dense realisation limited to {dense_limit} qubits")
    dim = 1 << s.num_qubits
    w = pauli_action_phases(s.num_qubits, s.x, s.z, s.phase_exp)
    idx = np.arange(dim)
    M = np.zeros((dim, dim), dtype=np.complex128)
    M[idx ^ s.x, idx] = w
    return M


class PauliSum:
    """Real-weighted sum of phase-free Pauli strings (a Hermitian operator).

    Terms are merged by string, pruned below 1e-12, and kept in a fixed
    (weight, label) order so that any consumer iterating ``terms`` sees the
    same deterministic sequence.
    """

    __slots__ = ("num_qubits", "terms")

    def __init__(
        self, num_qubits: int, terms: Iterable[tuple[complex, PauliString]] = ()
    ):
        merged: dict[tuple[int, int], float] = {}
        strings: dict[tuple[int, int], PauliString] = {}
        for coeff, string in terms:
            if string.num_qubits != num_qubits:
                raise ValueError("term qubit count mismatch")
            c = complex(coeff) * string.phase
            if abs(c.imag) > 1e-12:
                raise ValueError(f"non-Hermitian term with coefficient {c}")
            key = (string.x, string.z)
            merged[key] = merged.get(key, 0.0) + c.real
            strings[key] = string.drop_phase()
        kept = [
            (merged[key], strings[key]) for key in merged if abs(merged[key]) > 1e-12
        ]
        kept.sort(key=lambda item: item[1].sort_key())
        object.__setattr__(self, "num_qubits", num_qubits)
        object.__setattr__(self, "terms", tuple(kept))

    def __setattr__(self, name, value):
        raise AttributeError("PauliSum is immutable")

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "PauliSum") -> "PauliSum":
        if self.num_qubits != other.num_qubits:
            raise ValueError("summands act on different qubit counts")
        return PauliSum(self.num_qubits, (*self.terms, *other.terms))

    def __mul__(self, scalar: float) -> "PauliSum":
        return PauliSum(
            self.num_qubits, ((scalar * c, s) for c, s in self.terms)
        )

    __rmul__ = __mul__

    def to_matrix(self, dense_limit: int = DENSE_QUBIT_LIMIT) -> np.ndarray:
        if self.num_qubits > dense_limit:
            raise ValueError(f"dense realisation limited to {dense_limit} qubits")
        dim = 1 << self.num_qubits
        M = np.zeros((dim, dim), dtype=np.complex128)
        idx = np.arange(dim)
        for coeff, string in self.terms:
            w = pauli_action_phases(self.num_qubits, string.x, string.z, 0)
            M[idx ^ string.x, idx] += coeff * w
        return M

    def __repr__(self) -> str:
        body = " ".join(f"{c:+g}*{s.label()}" for c, s in self.terms)
        return f"PauliSum({body})" if body else "PauliSum(0)"


def sum_to_matrix(h: PauliSum, dense_limit: int = DENSE_QUBIT_LIMIT) -> np.ndarray:
    return h.to_matrix(dense_limit)
