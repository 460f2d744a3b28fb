"""Root systems and constraint checks for the coherent and confined fields.

Coherent electrostatic nodes solve the mutual-repulsion system

    s_n = 2k * sum_{i != n} 1/(s_n - s_i)

whose solution is sqrt(2k) times the zeros of the count-th Hermite
polynomial; the solver does not use that fact (tests do).

The confinement system fixes A = sqrt(2m g4), the power B, the positive
knot radii R_n, and emits g3 = A*B/m; two summed identities over the
per-knot equations follow for free and are verified, never imposed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

__all__ = [
    "SolverError",
    "CoherentRootSet",
    "GluonicSystem",
    "CoherenceResult",
    "solve_coherent_roots",
    "coherent_residuals",
    "solve_gluonic_system",
    "gluonic_identities",
    "inverse_radius_moment",
    "coherence_residual",
]

RESIDUAL_TARGET = 1e-12
RESIDUAL_ACCEPT = 1e-10
MAX_ITERATIONS = 200


class SolverError(RuntimeError):
    def __init__(self, message: str, best_residual: float):
        super().__init__(f"{message} (best residual {best_residual:.3e})")
        self.best_residual = best_residual


def _damped_newton(
    fun: Callable[[np.ndarray], np.ndarray],
    jac: Callable[[np.ndarray], np.ndarray],
    x0: np.ndarray,
    guard: Optional[Callable[[np.ndarray], bool]] = None,
) -> tuple[np.ndarray, float]:
    """Newton iteration with step halving; returns (x, max|f|)."""
    x = np.array(x0, dtype=float)
    best = float(np.max(np.abs(fun(x)))) if x.size else 0.0
    for _ in range(MAX_ITERATIONS):
        f = fun(x)
        norm = float(np.max(np.abs(f))) if f.size else 0.0
        best = min(best, norm)
        if norm <= RESIDUAL_TARGET:
            return x, norm
        try:
            step = np.linalg.solve(jac(x), -f)
        except np.linalg.LinAlgError:
            raise SolverError("singular Jacobian", best)
        lam = 1.0
        for _ in range(60):
            xn = x + lam * step
            if (guard is None or guard(xn)):
                fn = fun(xn)
                if np.all(np.isfinite(fn)) and float(np.max(np.abs(fn))) < norm:
                    x = xn
                    break
            lam *= 0.5
        else:
            break
    norm = float(np.max(np.abs(fun(x)))) if x.size else 0.0
    if norm > RESIDUAL_ACCEPT:
        raise SolverError("no convergence", min(best, norm))
    return x, norm


# --------------------------------------------------------------------------
# Coherent-state nodes
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CoherentRootSet:
    k_int: float
    roots: tuple[float, ...]
    residual: float


def coherent_residuals(roots: Sequence[float], k: float) -> np.ndarray:
    s = np.asarray(roots, dtype=float)
    out = np.empty_like(s)
    for i in range(len(s)):
        diff = s[i] - np.delete(s, i)
        out[i] = s[i] - 2.0 * k * np.sum(1.0 / diff)
    return out


def solve_coherent_roots(k: float, count: int) -> CoherentRootSet:
    """Nodes of the coherent tension profile for interaction constant k."""
    if k <= 0:
        raise ValueError("k must be positive")
    if not (1 <= count <= 50):
        raise ValueError("count must be within 1..50")
    if count == 1:
        return CoherentRootSet(k_int=k, roots=(0.0,), residual=0.0)

    # Chebyshev-spaced, symmetric initial guesses on the expected scale.
    scale = math.sqrt(2.0 * k * count)
    x0 = np.array([-scale * math.cos(math.pi * (i + 0.5) / count)
                   for i in range(count)])

    def fun(s: np.ndarray) -> np.ndarray:
        return coherent_residuals(s, k)

    def jac(s: np.ndarray) -> np.ndarray:
        J = np.zeros((count, count))
        for i in range(count):
            diff = s[i] - s
            diff[i] = np.inf
            inv2 = 1.0 / (diff * diff)
            J[i, :] = -2.0 * k * (-inv2)
            J[i, i] = 1.0 + 2.0 * k * np.sum(inv2)
        return J

    def guard(s: np.ndarray) -> bool:
        return bool(np.all(np.diff(np.sort(s)) > 1e-12))

    x, res = _damped_newton(fun, jac, x0, guard)
    roots = tuple(sorted(float(v) for v in x))
    return CoherentRootSet(k_int=k, roots=roots, residual=res)


# --------------------------------------------------------------------------
# Confinement constraint system
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class GluonicSystem:
    m: float
    g2: float
    g3: float
    g4: float
    N: int
    l: int
    A: float
    B: float
    roots: tuple[float, ...]
    residual: float


def _gluonic_root_residuals(r: np.ndarray, A: float, B: float) -> np.ndarray:
    out = np.empty_like(r)
    for i in range(len(r)):
        diff = r[i] - np.delete(r, i)
        out[i] = np.sum(1.0 / diff) + A / r[i] ** 2 + (B + 1.0) / r[i]
    return out


def solve_gluonic_system(m: float, g2: float, g4: float, N: int, l: int,
                         ) -> GluonicSystem:
    """Solve the confinement constraints for given quantum numbers."""
    if m <= 0 or g2 <= 0 or g4 <= 0:
        raise ValueError("m, g2, g4 must be positive")
    if N < 0 or l < 0:
        raise ValueError("N and l must be non-negative")
    A = math.sqrt(2.0 * m * g4)
    B = -N - 0.5 - math.sqrt((l + 0.5) ** 2 + m * g2)
    g3 = A * B / m

    if N == 0:
        return GluonicSystem(m=m, g2=g2, g3=g3, g4=g4, N=N, l=l, A=A, B=B,
                             roots=(), residual=0.0)
    if N == 1:
        root = -A / (B + 1.0)
        res = float(abs(1.0 / root * (B + 1.0) + A / root**2))
        return GluonicSystem(m=m, g2=g2, g3=g3, g4=g4, N=N, l=l, A=A, B=B,
                             roots=(root,), residual=res)

    # Equally spaced positive initial radii around the single-root scale.
    base = -A / (B + 1.0)
    x0 = np.array([base * (0.4 + 1.2 * i / (N - 1)) for i in range(N)])

    def fun(r: np.ndarray) -> np.ndarray:
        return _gluonic_root_residuals(r, A, B)

    def jac(r: np.ndarray) -> np.ndarray:
        J = np.zeros((N, N))
        for i in range(N):
            diff = r[i] - r
            diff[i] = np.inf
            inv2 = 1.0 / (diff * diff)
            J[i, :] = inv2
            J[i, i] = -np.sum(inv2) - 2.0 * A / r[i] ** 3 - (B + 1.0) / r[i] ** 2
        return J

    def guard(r: np.ndarray) -> bool:
        return bool(np.all(r > 0) and np.all(np.diff(np.sort(r)) > 1e-12))

    x, res = _damped_newton(fun, jac, x0, guard)
    return GluonicSystem(m=m, g2=g2, g3=g3, g4=g4, N=N, l=l, A=A, B=B,
                         roots=tuple(sorted(float(v) for v in x)), residual=res)


def gluonic_identities(sys: GluonicSystem) -> tuple[float, float, float, float]:
    """Residuals of the four invariants (defining pair + two implied sums)."""
    inv_r = sum(1.0 / r for r in sys.roots)
    inv_r2 = sum(1.0 / r**2 for r in sys.roots)
    return (
        sys.A**2 - 2.0 * sys.m * sys.g4,
        sys.A * sys.B - sys.m * sys.g3,
        sys.A * inv_r2 + (sys.B + 1.0) * inv_r,
        sys.N * (sys.N - 1) / 2.0 + sys.A * inv_r + (sys.B + 1.0) * sys.N,
    )


def inverse_radius_moment(B: float, A: float, p: int = 1) -> float:
    """Moment <R**-p> of the density R**(2B+2) * exp(-2A/R).

    Closed Gamma-ratio form: the rising factorial c*(c+1)*...*(c+p-1)
    over (2A)**p with c = -2B-3; p = 1 gives (-2B-3)/(2A).
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    if A <= 0:
        raise ValueError("A must be positive")
    c = -2.0 * B - 3.0
    if c <= p - 1:
        raise ValueError("normalizability requires -2B-3 > p-1")
    value = 1.0
    for i in range(p):
        value *= c + i
    return value / (2.0 * A) ** p


# --------------------------------------------------------------------------
# Coherence-condition worked cases
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CoherenceResult:
    case: str
    solved: dict
    residual: Optional[float] = None


_COHERENCE_CASES = ("linear_vacuum", "log_state", "quadratic_vacuum",
                    "coulomb_w_vacuum")


def coherence_residual(case: str, **params) -> CoherenceResult:
    """Worked coherence-condition cases.

    linear_vacuum / quadratic_vacuum: the condition forces the slope to
    vanish; returns b = 0 (plus the residual of a supplied b).
    log_state: the integral of (a - ln(b+x))/(b+x)**3 is
    (a - ln b - 1/2)/(2 b**2); returns the solved a, or the constraint
    residual when a is supplied.
    coulomb_w_vacuum: solves u0*(s0 + q*u0) = 1, u0*(2*s0 + q*u0) = 3.
    """
    if case in ("linear_vacuum", "quadratic_vacuum"):
        b = params.get("b")
        return CoherenceResult(case=case, solved={"b": 0.0},
                               residual=None if b is None else float(b))
    if case == "log_state":
        b = params.get("b")
        if b is None or b <= 0:
            raise ValueError("log_state requires b > 0")
        a_solved = math.log(b) + 0.5
        a = params.get("a")
        residual = None if a is None else a - a_solved
        return CoherenceResult(case=case, solved={"a": a_solved}, residual=residual)
    if case == "coulomb_w_vacuum":
        u0 = params.get("u0", -1.0)
        if u0 == 0:
            raise ValueError("u0 must be nonzero")
        s0 = 2.0 / u0
        q = (1.0 - u0 * s0) / (u0 * u0)
        return CoherenceResult(case=case, solved={"s0": s0, "q": q})
    raise KeyError(f"unknown coherence case {case!r}; "
                   f"expected one of {_COHERENCE_CASES}")
