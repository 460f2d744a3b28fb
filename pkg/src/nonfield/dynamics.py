"""Exact solutions and fixed-step integration for the wave, vacuum-field
and fluid models.

Wave pair (slow amplitudes):  p'' - p = v*(p'**2 - p**2) and the same
with p, v swapped.  On the v = p family the first integral
p'**2 - p**2 - C*exp(p**2) is conserved; turning points of periodic
solutions are the roots of p**2 + C*exp(p**2) for small negative C.

Integration is classical fixed-step fourth order so that conservation
order checks stay clean.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

__all__ = [
    "WaveState",
    "Trajectory",
    "integrate_wave_pair",
    "first_integral_constant",
    "first_integral",
    "turning_points",
    "coulomb_vacuum_potential",
    "light_nucleus_field",
    "light_nucleus_continuity_constant",
    "ideal_stream_velocity",
    "stream_pressure",
    "rotational_velocity",
    "gluonic_resonance_mass2",
]

_OVERFLOW_LIMIT = 1e150


@dataclass(frozen=True)
class WaveState:
    x: float
    p: float
    dp: float
    v: float
    dv: float

    def __post_init__(self) -> None:
        for name in ("x", "p", "dp", "v", "dv"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")


@dataclass(frozen=True)
class Trajectory:
    states: tuple[WaveState, ...]
    diverged: bool = False

    @property
    def last(self) -> WaveState:
        return self.states[-1]

    def to_csv(self) -> str:
        lines = ["x,p,dp,v,dv,first_integral"]
        c = first_integral_constant(self.states[0])
        for s in self.states:
            lines.append(f"{s.x:.12g},{s.p:.12g},{s.dp:.12g},"
                         f"{s.v:.12g},{s.dv:.12g},{first_integral(s, c):.12g}")
        return "\n".join(lines) + "\n"


def _rhs(p: float, dp: float, v: float, dv: float) -> tuple[float, float, float, float]:
    w = dp * dp - p * p
    return dp, p + v * w, dv, v + p * w


def integrate_wave_pair(initial: WaveState, x_end: float, step: float) -> Trajectory:
    """Integrate the coupled amplitude pair from initial.x to x_end.

    Divergence (any magnitude beyond 1e150) aborts and returns the last
    valid state with ``diverged`` set.
    """
    if not (0.0 < step <= 0.1):
        raise ValueError("step must be in (0, 0.1]")
    span = x_end - initial.x
    if abs(span) > 100.0:
        raise ValueError("|x_end - x| must be <= 100")
    n_steps = max(1, round(abs(span) / step))
    h = span / n_steps
    states = [initial]
    x, p, dp, v, dv = initial.x, initial.p, initial.dp, initial.v, initial.dv
    for i in range(n_steps):
        k1 = _rhs(p, dp, v, dv)
        k2 = _rhs(p + 0.5 * h * k1[0], dp + 0.5 * h * k1[1],
                  v + 0.5 * h * k1[2], dv + 0.5 * h * k1[3])
        k3 = _rhs(p + 0.5 * h * k2[0], dp + 0.5 * h * k2[1],
                  v + 0.5 * h * k2[2], dv + 0.5 * h * k2[3])
        k4 = _rhs(p + h * k3[0], dp + h * k3[1], v + h * k3[2], dv + h * k3[3])
        p += h / 6.0 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0])
        dp += h / 6.0 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1])
        v += h / 6.0 * (k1[2] + 2 * k2[2] + 2 * k3[2] + k4[2])
        dv += h / 6.0 * (k1[3] + 2 * k2[3] + 2 * k3[3] + k4[3])
        x = initial.x + (i + 1) * h
        if max(abs(p), abs(dp), abs(v), abs(dv)) > _OVERFLOW_LIMIT or not all(
                map(math.isfinite, (p, dp, v, dv))):
            return Trajectory(states=tuple(states), diverged=True)
        states.append(WaveState(x=x, p=p, dp=dp, v=v, dv=dv))
    return Trajectory(states=tuple(states))


def first_integral_constant(state: WaveState) -> float:
    """C with p'**2 - p**2 - C*exp(p**2) = 0 at this state (v = p family)."""
    return (state.dp**2 - state.p**2) * math.exp(-state.p**2)


def first_integral(state: WaveState, C: float) -> float:
    return state.dp**2 - state.p**2 - C * math.exp(state.p**2)


def turning_points(C: float) -> tuple[float, float]:
    """Both roots of p**2 + C*exp(p**2) = 0 for -1/e < C < 0.

    p**2*exp(-p**2) peaks at 1/e at p = 1, so the two roots straddle 1;
    at C = -1/e they merge there.
    """
    tol = 1e-10
    if C >= 0.0:
        raise ValueError("C must be negative")
    q = -C
    peak = math.exp(-1.0)
    if q > peak + 1e-15:
        raise ValueError("no turning points: C < -1/e")
    if abs(q - peak) <= 1e-15:
        return (1.0, 1.0)

    def g(p: float) -> float:
        return p * p * math.exp(-p * p) - q

    def bisect(lo: float, hi: float) -> float:
        flo = g(lo)
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if hi - lo < tol:
                return mid
            if flo * g(mid) <= 0:
                hi = mid
            else:
                lo = mid
                flo = g(lo)
        return 0.5 * (lo + hi)

    hi = 2.0
    while g(hi) > 0:
        hi *= 2.0
    return (bisect(0.0, 1.0), bisect(1.0, hi))


# --------------------------------------------------------------------------
# Vacuum-state potential and the light-nucleus tension
# --------------------------------------------------------------------------

def coulomb_vacuum_potential(s0: float, u0: float, x: float) -> tuple[float, float]:
    """Potential and slope of the vacuum-state solution of s'' = u0*s'**2.

    s(x) = s0 - ln(1 - u0*x)/u0 with s'(0) = 1; the u0 -> 0 limit is the
    free field s0 + x.
    """
    if u0 == 0.0:
        return s0 + x, 1.0
    arg = 1.0 - u0 * x
    if arg <= 0.0:
        raise ValueError("1 - u0*x must stay positive")
    # log1p keeps the u0 -> 0 limit accurate
    return s0 - math.log1p(-u0 * x) / u0, 1.0 / arg


def light_nucleus_continuity_constant(eZ: float, b: float) -> float:
    """Inner-field constant making the tension continuous at R = b."""
    return 2.0 * eZ * b


def light_nucleus_field(eZ: float, b: float, R: float,
                        d: Optional[float] = None) -> float:
    """Electrostatic tension around a light nucleus of radius b.

    Outside (R > b) the free form eZ/R**; inside the polarized form
    d/(R*(R+b)), with d defaulting to the value that makes the tension
    continuous at the surface.
    """
    if R <= 0 or b <= 0:
        raise ValueError("R and b must be positive")
    if R > b:
        return eZ / R
    if d is None:
        d = light_nucleus_continuity_constant(eZ, b)
    return d / (R * (R + b))


# --------------------------------------------------------------------------
# Fluid exact profiles
# --------------------------------------------------------------------------

def ideal_stream_velocity(k_const: float, x: float, c: float) -> float:
    """Sheet-stream profile v = c*sqrt((1 - sqrt(1 - (k*x)**2))/2)."""
    kx = k_const * x
    if abs(kx) > 1.0:
        raise ValueError("|k*x| must be <= 1")
    return c * math.sqrt(0.5 * (1.0 - math.sqrt(1.0 - kx * kx)))


def stream_pressure(rho: float, c: float, q: float, v: float) -> float:
    """Pressure c**2*rho*(1 + q/sqrt(1 - v**2/c**2)) along the stream."""
    if abs(v) >= c:
        raise ValueError("|v| must stay below c")
    return c * c * rho * (1.0 + q / math.sqrt(1.0 - (v / c) ** 2))


def rotational_velocity(A_c: float, B_c: float, x: float, branch: str = "subsonic",
                        ) -> float:
    """Solve v*sqrt(1 - v**2) = A*x + B/x on the requested branch.

    The left side peaks at 1/2 (v = 1/sqrt(2)); beyond that the flow
    breaks down and no solution exists.  The sign of the right side only
    fixes the sense of rotation, so its magnitude is solved.
    """
    if x == 0.0:
        raise ValueError("x must be nonzero")
    if branch not in ("subsonic", "supersonic"):
        raise ValueError("branch must be 'subsonic' or 'supersonic'")
    r = abs(A_c * x + B_c / x)
    if r > 0.5 + 1e-15:
        raise ValueError(f"|A*x + B/x| = {r:.6f} > 1/2: flow breakdown")
    if r >= 0.5 - 1e-13:
        return math.sqrt(0.5)  # both branches meet at the sonic point
    lo, hi = (0.0, math.sqrt(0.5)) if branch == "subsonic" else (math.sqrt(0.5), 1.0)

    def f(v: float) -> float:
        return v * math.sqrt(1.0 - v * v) - r

    sign = 1.0 if branch == "subsonic" else -1.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if hi - lo < 1e-10:
            break
        if sign * f(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def gluonic_resonance_mass2(b_slope: float, N: int, l: int) -> complex:
    """Squared resonance mass -i*b*(2N + 2l + 3) of the free linear field."""
    if N < 0 or l < 0:
        raise ValueError("N and l must be non-negative")
    return complex(0.0, -b_slope * (2 * N + 2 * l + 3))
