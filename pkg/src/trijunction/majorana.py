"""Majorana mode indexing, exchange operators and symbolic conjugation.

A mode lives at (arm, site, orientation) with arm in {1, 2, 3}, site in
[0, n) along the arm, and orientation 'x' or 'y'.  Monomials are ordered
products of modes with a complex weight; normalisation sorts the factors into
the canonical (arm, site, x<y) order, flipping the sign once per transposition
({g, g'} = 2*delta) and cancelling squared factors (g**2 = 1).

The exchange operator for a mode pair (k, l) is (1 + g_k g_l)/sqrt(2); its
conjugation action sends g_k -> -g_l and g_l -> g_k and fixes every other
mode.  Six braid steps, each a donor-arm sweep, a junction swap and a host-arm
sweep, move the two unpaired modes around the trijunction; ``exchange_list``
returns each step's exchanges in application order (first element acts first,
both on states and in conjugation chains).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

__all__ = [
    "BraidStep",
    "ExchangeOperator",
    "MajoranaHamiltonian",
    "MajoranaIndex",
    "MajoranaMonomial",
    "braid_exchanges",
    "build_sub_operators",
    "conjugate_hamiltonian",
    "conjugate_monomial",
    "exchange_list",
    "normalize",
    "protocol_steps",
]

_ORIENT_RANK = {"x": 0, "y": 1}


class MajoranaIndex(NamedTuple):
    arm: int
    site: int
    orientation: str

    def sort_key(self) -> tuple[int, int, int]:
        return (self.arm, self.site, _ORIENT_RANK[self.orientation])


def _mode(arm: int, site: int, orientation: str) -> MajoranaIndex:
    if arm not in (1, 2, 3):
        raise ValueError(f"arm must be 1, 2 or 3, got {arm}")
    if site < 0:
        raise ValueError(f"site must be non-negative, got {site}")
    if orientation not in ("x", "y"):
        raise ValueError(f"orientation must be 'x' or 'y', got {orientation}")
    return MajoranaIndex(arm, site, orientation)


@dataclass(frozen=True)
class MajoranaMonomial:
    """coefficient * g_{f1} g_{f2} ... with factors applied left to right."""

    coefficient: complex
    factors: tuple[MajoranaIndex, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))


def normalize(m: MajoranaMonomial) -> MajoranaMonomial:
    """Canonical order with anticommutation signs; squared factors cancel."""
    factors = list(m.factors)
    sign = 1
    for i in range(1, len(factors)):
        j = i
        while j > 0 and factors[j].sort_key() < factors[j - 1].sort_key():
            factors[j], factors[j - 1] = factors[j - 1], factors[j]
            sign = -sign
            j -= 1
    reduced: list[MajoranaIndex] = []
    for f in factors:
        if reduced and reduced[-1] == f:
            reduced.pop()
        else:
            reduced.append(f)
    return MajoranaMonomial(sign * m.coefficient, tuple(reduced))


class MajoranaHamiltonian:
    """Merged, normalised collection of quadratic monomials over n-site arms."""

    __slots__ = ("terms", "n")

    def __init__(self, terms: Iterable[MajoranaMonomial], n: int):
        merged: dict[tuple[MajoranaIndex, ...], complex] = {}
        for term in terms:
            norm = normalize(term)
            merged[norm.factors] = merged.get(norm.factors, 0.0) + norm.coefficient
        kept = [
            MajoranaMonomial(c, f) for f, c in merged.items() if abs(c) > 1e-12
        ]
        kept.sort(key=lambda t: tuple(f.sort_key() for f in t.factors))
        object.__setattr__(self, "terms", tuple(kept))
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("MajoranaHamiltonian is immutable")

    def __len__(self) -> int:
        return len(self.terms)

    def as_multiset(self) -> dict[tuple[MajoranaIndex, ...], complex]:
        return {t.factors: t.coefficient for t in self.terms}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MajoranaHamiltonian)
            and self.n == other.n
            and self.as_multiset() == other.as_multiset()
        )

    def __hash__(self):
        return hash((self.n, tuple(self.terms)))

    def __repr__(self) -> str:
        def fmt(t):
            body = " ".join(f"g{f.arm}{f.site}{f.orientation}" for f in t.factors)
            return f"({t.coefficient:+g})*{body or '1'}"

        return "MajoranaHamiltonian(" + " + ".join(fmt(t) for t in self.terms) + ")"


class ExchangeOperator(NamedTuple):
    """(1 + g_k g_l)/sqrt(2); conjugation sends g_k -> -g_l, g_l -> g_k."""

    k: MajoranaIndex
    l: MajoranaIndex


def conjugate_monomial(m: MajoranaMonomial, o: ExchangeOperator) -> MajoranaMonomial:
    coeff = m.coefficient
    out = []
    for f in m.factors:
        if f == o.k:
            out.append(o.l)
            coeff = -coeff
        elif f == o.l:
            out.append(o.k)
        else:
            out.append(f)
    return normalize(MajoranaMonomial(coeff, tuple(out)))


def conjugate_hamiltonian(
    h: MajoranaHamiltonian, ops: Iterable[ExchangeOperator]
) -> MajoranaHamiltonian:
    """Conjugate term by term; ops are applied in list order (first acts first)."""
    terms = list(h.terms)
    for o in ops:
        terms = [conjugate_monomial(t, o) for t in terms]
    return MajoranaHamiltonian(terms, h.n)


@dataclass(frozen=True)
class BraidStep:
    """One protocol step: arm ``donor`` goes trivial, arm ``host`` goes topological."""

    donor: int
    host: int
    bystander: int


def build_sub_operators(step: BraidStep, n: int) -> tuple[ExchangeOperator, ...]:
    """The 2n exchanges of one step, in application order.

    Donor sweep: the unpaired y-mode at the far end of the donor arm is walked
    down to the junction site (n-1 exchanges).  Junction swap: the y then x
    modes at site 0 of donor and host are exchanged (the two commute).  Host
    sweep: the mode is walked out to the far end of the host arm (n-1
    exchanges).  At n = 1 both sweeps are empty and the step is the junction
    swap alone.
    """
    if n < 1:
        raise ValueError(f"sites per arm must be >= 1, got {n}")
    c, a = step.donor, step.host
    ops = []
    for j in range(n - 2, -1, -1):
        ops.append(ExchangeOperator(_mode(c, j, "y"), _mode(c, j + 1, "y")))
    ops.append(ExchangeOperator(_mode(c, 0, "y"), _mode(a, 0, "y")))
    ops.append(ExchangeOperator(_mode(c, 0, "x"), _mode(a, 0, "x")))
    for j in range(n - 1):
        ops.append(ExchangeOperator(_mode(a, j + 1, "y"), _mode(a, j, "y")))
    return tuple(ops)


exchange_list = build_sub_operators


def protocol_steps() -> tuple[BraidStep, ...]:
    """The six braid steps; steps 4-6 repeat steps 1-3."""
    cycle = (BraidStep(2, 3, 1), BraidStep(1, 2, 3), BraidStep(3, 1, 2))
    return cycle + cycle


def braid_exchanges(n: int, steps: int = 6) -> tuple[ExchangeOperator, ...]:
    """Concatenated exchanges of the first ``steps`` protocol steps."""
    if not 0 <= steps <= 6:
        raise ValueError(f"steps must lie in [0, 6], got {steps}")
    ops: list[ExchangeOperator] = []
    for step in protocol_steps()[:steps]:
        ops.extend(build_sub_operators(step, n))
    return tuple(ops)
