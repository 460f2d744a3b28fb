"""Closed-form electron levels in nonlinear-Coulomb hydrogenic systems.

The binding energy of a state with knot count N, orbital momentum l and
total momentum j is

    eps = m * f**p * [1 - n_ef / sqrt(n_ef**2 + (alpha*Z)**2)]

with n_ef = B + N + 1, the mass-interaction factor

    f = n_ef / sqrt(n_ef**2 - g * (alpha*Z)**2)

and the B coefficient given by two series in (alpha*Z)**2, one shared by
all j = l+1/2 states (N = 0 and N = 1), one for the N = 1, j = l-1/2
states.  The factor power p is 1 except for one-knot j = l+1/2 states of
systems whose fitted tables demand the squared factor (the helium-ion
preset); see ``AtomicModelParams.one_knot_mass_power``.

Transition energies are differences of binding energies, so the vacuum
offset never enters them.  A separate model handles the lithium valence
electron, whose potential carries a second, displaced singularity.

Everything here is a pure function of its arguments.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

__all__ = [
    "AtomicModelParams",
    "QuantumState",
    "LiModelParams",
    "LiLevel",
    "AnsatzSolution",
    "GROUND_STATE",
    "b_coefficient",
    "effective_mass_factor",
    "binding_energy",
    "transition_energy",
    "li_level",
    "lamb_shift_estimate",
    "heI_estimate",
    "heI_du0_from_ionization",
    "ansatz_residuals",
    "degeneracy_exponents",
]

_ORBITAL_LETTERS = "spdfghiklmnoqrtuvwxyz"


@dataclass(frozen=True)
class AtomicModelParams:
    """Constants of one nonlinear-Coulomb system (energies in eV)."""

    alpha: float
    mass: float
    Z: int
    d: float
    g: float
    vacuum_offset: float = 0.0
    # Mass-factor exponent for (N=1, j=l+1/2) states; 2.0 for the He II fit.
    one_knot_mass_power: float = 1.0

    def __post_init__(self) -> None:
        if not (self.alpha > 0 and math.isfinite(self.alpha)):
            raise ValueError("alpha must be positive and finite")
        if not (self.mass > 0 and math.isfinite(self.mass)):
            raise ValueError("mass must be positive and finite")
        if self.Z < 0 or self.Z != int(self.Z):
            raise ValueError("Z must be a non-negative integer")
        for name in ("d", "g", "vacuum_offset"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    @property
    def zeta(self) -> float:
        """alpha*Z, the combination every formula actually uses."""
        return self.alpha * self.Z


@dataclass(frozen=True)
class QuantumState:
    """(knot count, orbital momentum, 2j) with n = N + j + 1/2."""

    N: int
    l: int
    two_j: int
    label: str = ""

    def __post_init__(self) -> None:
        if self.N < 0 or self.l < 0:
            raise ValueError("N and l must be non-negative")
        if self.two_j < 1 or self.two_j % 2 == 0:
            raise ValueError("two_j must be a positive odd integer")
        if self.two_j not in (2 * self.l - 1, 2 * self.l + 1):
            raise ValueError("two_j must be 2l-1 or 2l+1")
        if self.two_j == 2 * self.l - 1 and self.l == 0:
            raise ValueError("no j = l-1/2 state for l = 0")

    @property
    def n(self) -> int:
        """Principal number N + j + 1/2."""
        return self.N + (self.two_j + 1) // 2

    @property
    def is_plus(self) -> bool:
        return self.two_j == 2 * self.l + 1

    @classmethod
    def from_label(cls, label: str) -> "QuantumState":
        """Parse a spectroscopic label like '2p3/2' or '10m19/2'."""
        m = re.fullmatch(r"(\d+)([a-z])(\d+)/2", label.strip())
        if not m:
            raise ValueError(f"unparseable state label: {label!r}")
        n, letter, two_j = int(m.group(1)), m.group(2), int(m.group(3))
        l = _ORBITAL_LETTERS.index(letter)
        N = n - (two_j + 1) // 2
        return cls(N=N, l=l, two_j=two_j, label=label)


GROUND_STATE = QuantumState(N=0, l=0, two_j=1, label="1s1/2")


def b_coefficient(params: AtomicModelParams, state: QuantumState) -> float:
    """Series coefficient B of the radial wave function R**B.

    The j = l+1/2 expression applies to both N = 0 and N = 1; the second
    expression covers N = 1, j = l-1/2 (which requires l >= 1).
    """
    x = params.zeta**2
    l, d = state.l, params.d
    if state.is_plus:
        return (
            l
            + x * (-1.0 / (2 * l + 2) + d / (2 * l + 1))
            - x * x * (1.0 / (2 * l + 2) ** 3 + d * d / (2 * l + 1) ** 3)
        )
    if l < 1:
        raise ValueError("j = l-1/2 requires l >= 1")
    return (
        (l - 1)
        + x * (-1.0 / (2 * l) + d / (2 * l + 1))
        - x * x / (8 * l**3)
    )


def effective_mass_factor(params: AtomicModelParams, n_ef: float) -> float:
    """Mass-interaction factor n_ef / sqrt(n_ef**2 - g*(alpha*Z)**2)."""
    radicand = n_ef * n_ef - params.g * params.zeta**2
    if radicand <= 0.0:
        raise ValueError("effective-mass radicand <= 0 (unphysical g)")
    return n_ef / math.sqrt(radicand)


def _mass_power(params: AtomicModelParams, state: QuantumState) -> float:
    if state.N == 1 and state.is_plus:
        return params.one_knot_mass_power
    return 1.0


def binding_energy(params: AtomicModelParams, state: QuantumState) -> float:
    """Binding energy in eV, vacuum offset excluded.

    The bracket 1 - n_ef/sqrt(n_ef**2 + x) is evaluated as
    x / (s*(s + n_ef)) with s = sqrt(n_ef**2 + x); the naive form loses
    five digits to cancellation, which the calibration round trip cannot
    afford.
    """
    x = params.zeta**2
    n_ef = b_coefficient(params, state) + state.N + 1
    s = math.sqrt(n_ef * n_ef + x)
    bracket = x / (s * (s + n_ef))
    factor = effective_mass_factor(params, n_ef) ** _mass_power(params, state)
    return params.mass * factor * bracket


def transition_energy(params: AtomicModelParams, state: QuantumState) -> float:
    """Transition energy from the ground state; vacuum offsets cancel."""
    return binding_energy(params, GROUND_STATE) - binding_energy(params, state)


# --------------------------------------------------------------------------
# Li I valence-electron model
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class LiModelParams:
    """Constants of the two-singularity lithium valence model.

    ``a`` and ``b`` scale the R**-2 terms at the origin and at the
    electron-pair radius; ``g`` is the mass-interaction strength (enters
    as g*alpha, not g*alpha**2); ``limit_energy`` is the series limit of
    the transition energies in eV.
    """

    alpha: float
    mass: float
    a: float
    b: float
    g: float
    limit_energy: float

    def __post_init__(self) -> None:
        if self.limit_energy <= 0:
            raise ValueError("limit_energy must be positive")
        if self.b > 0 and 1 - 8 * self.b < 0:
            raise ValueError("1 - 8b < 0: displaced-singularity exponent undefined")


@dataclass(frozen=True)
class LiLevel:
    binding_tilde: float
    transition: float


def _sqrt_checked(value: float, what: str) -> float:
    if value < 0.0:
        raise ValueError(f"negative radicand in {what}")
    return math.sqrt(value)


def li_level(
    params: LiModelParams, n: int, l: int, plus_branch: bool = False
) -> LiLevel:
    """Level of the lithium valence electron with principal number n >= 2.

    ``plus_branch`` selects the diagnostic plus sign of the square root in
    the displaced-singularity exponent; the physical choice is minus (the
    Rydberg correction must stay small).
    """
    if n < 2:
        raise ValueError("n must be >= 2 (the valence series starts at n = 2)")
    if l < 0:
        raise ValueError("l must be >= 0")
    al, a, b = params.alpha, params.a, params.b
    sign = +1.0 if plus_branch else -1.0

    b0 = -0.5 + _sqrt_checked((l + 0.5) ** 2 - a, "B0")
    d0 = 0.5 * (1.0 + sign * _sqrt_checked(1.0 - 8 * b, "D0"))
    n0 = n + b0 - l + d0
    w = 1.0 - al * al / (2 * n0 * n0)

    bb = -0.5 + _sqrt_checked((l + 0.5) ** 2 - 9 * al * al - a * w, "B")
    dd = 0.5 + sign * 0.5 * _sqrt_checked(1.0 - 16 * al * al - 8 * b * w, "D")
    n_ef = n + bb - l + dd

    m_ef = params.mass * n_ef / _sqrt_checked(n_ef * n_ef + params.g * al, "m_ef")
    s = math.sqrt(n_ef * n_ef + al * al)
    binding = m_ef * (al * al) / (s * (s + n_ef))
    return LiLevel(binding_tilde=binding, transition=params.limit_energy - binding)


# --------------------------------------------------------------------------
# Rough estimates and the algebraic residual checker
# --------------------------------------------------------------------------

def lamb_shift_estimate(d: float, u0: float, Z: int, mass: float) -> float:
    """S-below-P splitting estimate -u0*d*Z**4*m/12 (eV)."""
    if abs(u0) > 1.0:
        raise ValueError("|u0| must be <= 1 (scalar velocity at infinity)")
    return -u0 * d * Z**4 * mass / 12.0


def heI_estimate(l: int, du0: float, alpha: float, mass: float) -> float:
    """Neutral-helium binding estimate for maximal-momentum states (eV)."""
    radicand = (l + 0.5) ** 2 - du0
    if radicand <= 0.0:
        raise ValueError("negative radicand: d*u0 too large for this l")
    return mass * alpha * alpha / 2.0 / (0.5 + math.sqrt(radicand)) ** 2


def heI_du0_from_ionization(
    ionization: float, alpha: float, mass: float, l: int = 0
) -> float:
    """Invert heI_estimate for d*u0 at given ionization energy (bisection)."""
    lo, hi = -5.0, (l + 0.5) ** 2 - 1e-12
    f = lambda du0: heI_estimate(l, du0, alpha, mass) - ionization
    if f(lo) * f(hi) > 0:
        raise ValueError("ionization energy outside the representable range")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(lo) * f(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class AnsatzSolution:
    """Candidate solution of the four boundary-condition equations.

    ``Z_eff`` is alpha*Z, ``W`` must equal ``E + mass``, ``roots`` are the
    knot positions (length N), ``f`` is the spin coefficient (-l for
    j = l+1/2, l+1 for j = l-1/2).
    """

    D: float
    B: float
    E: float
    W: float
    N: int
    roots: tuple[float, ...]
    Z_eff: float
    a_scale: float
    s2: float
    s3: float
    f: float

    def __post_init__(self) -> None:
        if len(self.roots) != self.N:
            raise ValueError("roots must have length N")


def ansatz_residuals(
    sol: AnsatzSolution, params: AtomicModelParams
) -> list[float]:
    """Left-minus-right residuals of the four algebraic equations.

    All four vanish exactly iff ``sol`` solves the system; the third and
    fourth are linear in s2 and s3.  Diagnostic only — nothing is solved.
    """
    if abs(sol.W - (sol.E + params.mass)) > 1e-6 * max(1.0, abs(sol.W)):
        raise ValueError("W must equal E + mass")
    m, z, a = params.mass, sol.Z_eff, sol.a_scale
    D, B, E, W, N = sol.D, sol.B, sol.E, sol.W, sol.N
    sum_r = sum(sol.roots)
    sum_r2 = sum(r * r for r in sol.roots)
    zw = z / W if W != 0.0 else math.inf

    r1 = D * D - (m * m - E * E)
    r2 = D * (N + B + 1) - (-E * z)
    # l(l+1) carried through f: f = -l or l+1 both give f*(f-1) = l(l+1).
    l_l1 = sol.f * (sol.f - 1)
    r3 = B * B + B + D * (zw + 2 * sum_r) + 2 * B * N + N * N + N - (
        l_l1 - z * z - z * E * a * sol.s2
    )
    r4 = (
        D * (zw * (a * sol.s2 - zw) + 2 * sum_r2)
        + 2 * (B + N) * sum_r
        + (B + N + sol.f) * zw
        - (-z * z * a * sol.s2 - z * E * sol.s3 * a * a / 3.0)
    )
    return [r1, r2, r3, r4]


def degeneracy_exponents() -> set[float]:
    """Both roots of x**2 - 2x = 0, the displaced-zero exponents."""
    return {0.0, 2.0}
