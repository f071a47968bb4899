"""Kitaev-chain and trijunction Hamiltonians in Majorana form, plus the
six-transition protocol schedule.

A trijunction configuration is the ordered pair (a, b) of topological arms;
the remaining arm c is trivial.  With x/y modes per site the Hamiltonian is

    H_ab = i*Delta * sum_{k in {a,b}} sum_{j<n-1} y_{kj} x_{k,j+1}
         + i*alpha * sum_l x_{cl} y_{cl}
         + i*eps_abc * t_ab * x_{a0} x_{b0},

with eps the fully antisymmetric symbol, eps_123 = +1.  Default parameters
put alpha = Delta = t_ab = 1 (and mu = 2*alpha for the standalone chain),
where every paired mode is gapped at unit energy and the two unpaired
y-modes at the far ends of arms a and b are exact zero modes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .majorana import MajoranaHamiltonian, MajoranaIndex, MajoranaMonomial

__all__ = [
    "Configuration",
    "PROTOCOL_CONFIGS",
    "TrijunctionParams",
    "kitaev_chain",
    "levi_civita",
    "schedule",
    "trijunction_h",
    "zero_mode_pair",
]


def levi_civita(a: int, b: int, c: int) -> int:
    if {a, b, c} != {1, 2, 3}:
        return 0
    return 1 if (a, b, c) in ((1, 2, 3), (2, 3, 1), (3, 1, 2)) else -1


@dataclass(frozen=True)
class Configuration:
    """Topological arm pair (a, b); arm c = the remaining one is trivial."""

    a: int
    b: int

    def __post_init__(self):
        if {self.a, self.b} - {1, 2, 3} or self.a == self.b:
            raise ValueError(f"invalid topological pair ({self.a}, {self.b})")

    @property
    def c(self) -> int:
        return 6 - self.a - self.b

    @property
    def epsilon(self) -> int:
        return levi_civita(self.a, self.b, self.c)


@dataclass(frozen=True)
class TrijunctionParams:
    """n sites per arm; energies in units where the gap scale is O(1)."""

    n: int
    delta: float = 1.0
    alpha: float = 1.0
    t_junction: float = 1.0
    mu: float = 2.0
    hopping: float = 1.0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"sites per arm must be >= 1, got {self.n}")


def kitaev_chain(
    n: int, mu: float, t: float, delta: float, arm: int = 1
) -> MajoranaHamiltonian:
    """Single open chain: (i/2) sum_j [-mu x_j y_j + (t+|d|) y_j x_{j+1}
    + (-t+|d|) x_j y_{j+1}], boundary site has no hopping."""
    if n < 1:
        raise ValueError(f"chain length must be >= 1, got {n}")
    x = lambda j: MajoranaIndex(arm, j, "x")
    y = lambda j: MajoranaIndex(arm, j, "y")
    terms = []
    for j in range(n):
        terms.append(MajoranaMonomial(-0.5j * mu, (x(j), y(j))))
        if j + 1 < n:
            terms.append(MajoranaMonomial(0.5j * (t + abs(delta)), (y(j), x(j + 1))))
            terms.append(MajoranaMonomial(0.5j * (-t + abs(delta)), (x(j), y(j + 1))))
    return MajoranaHamiltonian(terms, n)


def trijunction_h(
    config: Configuration, params: TrijunctionParams
) -> MajoranaHamiltonian:
    n = params.n
    terms = []
    for k in (config.a, config.b):
        for j in range(n - 1):
            terms.append(
                MajoranaMonomial(
                    1j * params.delta,
                    (MajoranaIndex(k, j, "y"), MajoranaIndex(k, j + 1, "x")),
                )
            )
    for l in range(n):
        terms.append(
            MajoranaMonomial(
                1j * params.alpha,
                (MajoranaIndex(config.c, l, "x"), MajoranaIndex(config.c, l, "y")),
            )
        )
    terms.append(
        MajoranaMonomial(
            1j * config.epsilon * params.t_junction,
            (MajoranaIndex(config.a, 0, "x"), MajoranaIndex(config.b, 0, "x")),
        )
    )
    return MajoranaHamiltonian(terms, n)


PROTOCOL_CONFIGS = (
    Configuration(1, 2),
    Configuration(1, 3),
    Configuration(2, 3),
)


def schedule(
    params: TrijunctionParams, tau: float
) -> tuple[tuple[Configuration, Configuration], ...]:
    """Six (initial, final) configuration pairs; total braid time is 6*tau."""
    if tau <= 0:
        raise ValueError(f"step duration must be positive, got {tau}")
    cycle = PROTOCOL_CONFIGS
    pairs = tuple((cycle[k % 3], cycle[(k + 1) % 3]) for k in range(6))
    return pairs


def zero_mode_pair(config: Configuration, n: int) -> MajoranaMonomial:
    """Conserved quadratic i * y_{a,n-1} y_{b,n-1} of the two unpaired modes.

    Its mapped eigenvalue splits the two ground states of H_ab; the +1
    eigenvector is taken as the first ground-basis column.
    """
    return MajoranaMonomial(
        1j,
        (MajoranaIndex(config.a, n - 1, "y"), MajoranaIndex(config.b, n - 1, "y")),
    )
