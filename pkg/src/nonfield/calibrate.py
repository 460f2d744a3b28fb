"""Recover the fitted constants from their stated anchors.

Atomic systems: Gauss-Newton with Levenberg damping on squared
transition-energy residuals over the maximal-momentum series.  Nuclei:
Newton on the three anchor conditions (deuteron, alpha particle, and the
follower level that defines the gluonic constant).  Everything is
deterministic: fixed initial guesses, fixed iteration caps, no RNG.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from typing import Callable, Optional, Sequence

import numpy as np

from .atomic import AtomicModelParams, QuantumState, transition_energy
from .nuclei import PionicField, pionic_charge, spin_orbit_term, _pionic_energy
from . import refdata

__all__ = [
    "CalibrationError",
    "AtomicFit",
    "NucleiCalibration",
    "calibrate_atomic",
    "calibrate_nuclei",
    "calibrate_k1",
]

ATOMIC_START = (0.05, 0.15)
NUCLEI_START = (300.0, 0.4, 0.45)
MAX_ITER = 80


class CalibrationError(RuntimeError):
    def __init__(self, message: str, trace: Sequence[float]):
        super().__init__(message)
        self.residual_trace = list(trace)


@dataclass(frozen=True)
class AtomicFit:
    system: str
    d: float
    g: float
    residuals: tuple[float, ...]
    iterations: int
    converged: bool

    def to_json(self) -> str:
        return json.dumps({
            "system": self.system, "parameters": {"d": self.d, "g": self.g},
            "residuals": list(self.residuals), "iterations": self.iterations,
            "converged": self.converged,
        }, indent=1)


@dataclass(frozen=True)
class NucleiCalibration:
    variant: str
    G: float
    k: float
    d_gluon: float
    residuals: tuple[float, ...]
    iterations: int
    converged: bool

    def to_json(self) -> str:
        return json.dumps({
            "variant": self.variant,
            "parameters": {"G": self.G, "k": self.k, "d_gluon": self.d_gluon},
            "residuals": list(self.residuals), "iterations": self.iterations,
            "converged": self.converged,
        }, indent=1)


def _levenberg(residual: Callable[[np.ndarray], np.ndarray], p0: Sequence[float],
               ) -> tuple[np.ndarray, np.ndarray, int, bool, list[float]]:
    """Gauss-Newton with multiplicative Levenberg damping, central-difference
    Jacobian.  Returns (params, residuals, iterations, converged, trace)."""
    p = np.asarray(p0, dtype=float)
    lam = 1e-3
    trace: list[float] = []
    f = residual(p)
    for it in range(1, MAX_ITER + 1):
        cost = float(f @ f)
        trace.append(cost)
        J = np.empty((f.size, p.size))
        for j in range(p.size):
            h = 1e-6 * max(abs(p[j]), 1e-3)
            pp, pm = p.copy(), p.copy()
            pp[j] += h
            pm[j] -= h
            J[:, j] = (residual(pp) - residual(pm)) / (2.0 * h)
        A = J.T @ J
        g = J.T @ f
        improved = False
        for _ in range(50):
            damped = A + lam * np.diag(np.diag(A) + 1e-30)
            try:
                step = np.linalg.solve(damped, -g)
            except np.linalg.LinAlgError:
                lam *= 10.0
                continue
            fn = residual(p + step)
            if np.all(np.isfinite(fn)) and float(fn @ fn) <= cost:
                p = p + step
                f = fn
                lam = max(lam * 0.3, 1e-14)
                improved = True
                break
            lam *= 10.0
        if not improved:
            return p, f, it, cost < 1e-8, trace
        if float(np.max(np.abs(step))) < 1e-13 * max(1.0, float(np.max(np.abs(p)))):
            return p, f, it, True, trace
    return p, f, MAX_ITER, False, trace


def _max_momentum_series(observed: "refdata.ReferenceTable") -> list[tuple[QuantumState, float]]:
    rows = [r for r in observed.select(source="paper_obs", unflagged_only=True)
            if r.series == "N0-plus" and r.value and r.n is not None and r.n >= 2]
    return [(QuantumState(N=0, l=r.l, two_j=2 * r.l + 1, label=r.label), r.numeric)
            for r in rows]


def calibrate_atomic(system: str, observed=None,
                     start: Sequence[float] = ATOMIC_START,
                     template: Optional[AtomicModelParams] = None) -> AtomicFit:
    """Least-squares (d, g) from observed maximal-momentum transitions."""
    if template is None:
        template = refdata.atomic_params(system)
    if observed is None:
        observed = refdata.builtin_reference(system)
    data = _max_momentum_series(observed)
    if len(data) < 2:
        raise ValueError("need at least 2 observed lines in the N=0, j=l+1/2 series")

    def residual(p: np.ndarray) -> np.ndarray:
        params = replace(template, d=float(p[0]), g=float(p[1]))
        return np.array([transition_energy(params, st) - obs for st, obs in data])

    p, f, iters, converged, trace = _levenberg(residual, start)
    if not converged and float(f @ f) > 1e-6:
        raise CalibrationError(f"atomic calibration for {system} did not converge",
                               trace)
    return AtomicFit(system=system, d=float(p[0]), g=float(p[1]),
                     residuals=tuple(float(v) for v in f),
                     iterations=iters, converged=converged)


def _base_conditions(anchors: tuple[float, float]) -> Callable[[np.ndarray], np.ndarray]:
    deuteron, alpha = anchors

    def residual(p: np.ndarray) -> np.ndarray:
        G, k, d = (float(v) for v in p)
        ga2 = pionic_charge(1, 2, k)
        ga4 = pionic_charge(2, 4, k)
        f2 = PionicField(Z=1, A=2, G=G, Ga=ga2, d_gluon=d)
        f4 = PionicField(Z=2, A=4, G=G, Ga=ga4, d_gluon=d)
        e2 = _pionic_energy(f2, 0, 0, 0.0, 0.0)
        e4n = _pionic_energy(f4, 0, 0, 0.0, 0.0)
        e4p = _pionic_energy(f4, 0, 0, f4.coulomb_k(), 0.0)
        return np.array([
            2.0 * (e2 - d) - deuteron,
            2.0 * (e4n + e4p) - 6.0 * d - alpha,
            _pionic_energy(f2, 0, 1, 0.0, 0.0) - d,
        ])

    return residual


def _so_conditions(anchors: tuple[float, float]) -> Callable[[np.ndarray], np.ndarray]:
    deuteron, alpha = anchors

    def residual(p: np.ndarray) -> np.ndarray:
        G, k, d = (float(v) for v in p)
        ga2 = pionic_charge(1, 2, k)
        ga4 = pionic_charge(2, 4, k)
        f2 = PionicField(Z=1, A=2, G=G, Ga=ga2, d_gluon=d, so_enabled=True)
        f4 = PionicField(Z=2, A=4, G=G, Ga=ga4, d_gluon=d, so_enabled=True)
        s2 = spin_orbit_term(1, ga2)
        s4 = spin_orbit_term(1, ga4)
        e2 = (_pionic_energy(f2, 0, 0, 0.0, s2.s_minus)
              + _pionic_energy(f2, 0, 0, 0.0, s2.s_plus))
        e4 = (_pionic_energy(f4, 0, 0, f4.coulomb_k(), s4.s_minus)
              + _pionic_energy(f4, 0, 0, 0.0, s4.s_plus))
        return np.array([
            e2 - 2.0 * d - deuteron,
            2.0 * e4 - 6.0 * d - alpha,
            _pionic_energy(f2, 0, 1, 0.0, s2.s_minus) - d,
        ])

    return residual


def calibrate_nuclei(anchors: tuple[float, float] = (2.224, 28.284),
                     variant: str = "base",
                     start: Sequence[float] = NUCLEI_START) -> NucleiCalibration:
    """Solve the 3x3 anchor system for (G, k, d_gluon)."""
    if anchors[0] <= 0 or anchors[1] <= 0:
        raise ValueError("anchors must be positive")
    if variant == "base":
        residual = _base_conditions(anchors)
    elif variant == "so":
        residual = _so_conditions(anchors)
    else:
        raise ValueError("variant must be 'base' or 'so'")
    p, f, iters, converged, trace = _levenberg(residual, start)
    if float(np.max(np.abs(f))) > 1e-8:
        raise CalibrationError("nuclei calibration did not converge", trace)
    return NucleiCalibration(variant=variant, G=float(p[0]), k=float(p[1]),
                             d_gluon=float(p[2]),
                             residuals=tuple(float(v) for v in f),
                             iterations=iters, converged=True)


def calibrate_k1(triton_binding: float = 8.481,
                 G: Optional[float] = None, k: Optional[float] = None) -> float:
    """Bisect k1 in (0, 1) from the triton splitting anchor."""
    if triton_binding <= 0:
        raise ValueError("triton binding must be positive")
    G = refdata.NUCLEI_BASE["G"] if G is None else G
    k = refdata.NUCLEI_BASE["k"] if k is None else k

    def f(k1: float) -> float:
        ga = pionic_charge(1, 3, k, k1, mirror=False)
        fld = PionicField(Z=1, A=3, G=G, Ga=ga, d_gluon=0.0, coulomb_c=0.0)
        return 3.0 * (_pionic_energy(fld, 0, 0, 0.0, 0.0)
                      - _pionic_energy(fld, 0, 1, 0.0, 0.0)) - triton_binding

    lo, hi = 1e-6, 1.0 - 1e-9
    flo, fhi = f(lo), f(hi)
    if flo * fhi > 0:
        raise ValueError("no sign change in (0, 1): anchor out of range")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if flo * f(mid) <= 0:
            hi = mid
        else:
            lo = mid
            flo = f(lo)
    return 0.5 * (lo + hi)
