import math

import numpy as np
import pytest
from scipy import integrate, optimize

from nonfield.solvers import (
    CoherenceResult,
    SolverError,
    coherence_residual,
    coherent_residuals,
    gluonic_identities,
    inverse_radius_moment,
    solve_coherent_roots,
    solve_gluonic_system,
)


# --------------------------------------------------------------------------
# Independent oracle: Hermite zeros by three-term recurrence + bisection
# --------------------------------------------------------------------------

def hermite_value(n: int, x: float) -> float:
    h0, h1 = 1.0, 2.0 * x
    if n == 0:
        return h0
    for k in range(1, n):
        h0, h1 = h1, 2.0 * x * h1 - 2.0 * k * h0
    return h1

def hermite_zeros(n: int) -> list[float]:
    # all zeros lie inside |x| < sqrt(2n+1); scan sign changes, bisect
    bound = math.sqrt(2.0 * n + 1.0) + 1.0
    grid = np.linspace(-bound, bound, 4000)
    vals = [hermite_value(n, x) for x in grid]
    zeros = []
    for a, b, fa, fb in zip(grid, grid[1:], vals, vals[1:]):
        if fa == 0.0:
            zeros.append(float(a))
        elif fa * fb < 0:
            lo, hi, flo = a, b, fa
            for _ in range(200):
                mid = 0.5 * (lo + hi)
                fm = hermite_value(n, mid)
                if flo * fm <= 0:
                    hi = mid
                else:
                    lo, flo = mid, fm
            zeros.append(0.5 * (lo + hi))
    assert len(zeros) == n
    return zeros


class TestCoherentRoots:
    def test_pair_symmetric(self):
        result = solve_coherent_roots(1.0, 2)
        assert result.roots == pytest.approx((-1.0, 1.0), abs=1e-10)

    def test_triple(self):
        result = solve_coherent_roots(1.0, 3)
        assert result.roots == pytest.approx(
            (-math.sqrt(3), 0.0, math.sqrt(3)), abs=1e-10)

    @pytest.mark.parametrize("k,count", [(1.0, 2), (1.0, 3), (0.5, 6),
                                         (2.0, 5), (0.25, 9)])
    def test_matches_hermite_oracle(self, k, count):
        result = solve_coherent_roots(k, count)
        oracle = [math.sqrt(2.0 * k) * z for z in hermite_zeros(count)]
        assert result.roots == pytest.approx(oracle, abs=1e-10)
        assert np.max(np.abs(coherent_residuals(result.roots, k))) <= 1e-10

    @pytest.mark.parametrize("count", [2, 3, 4, 5, 6, 7, 8])
    def test_odd_symmetry(self, count):
        roots = solve_coherent_roots(0.7, count).roots
        mirrored = tuple(-r for r in reversed(roots))
        assert roots == pytest.approx(mirrored, abs=1e-12)

    @pytest.mark.parametrize("count", [2, 4, 6])
    def test_electrostatic_energy_stationary(self, count):
        k = 0.8
        roots = np.array(solve_coherent_roots(k, count).roots)

        def energy(s):
            pair = sum(math.log(abs(s[i] - s[j]))
                       for i in range(len(s)) for j in range(i))
            return 0.5 * float(np.sum(s * s)) - 2.0 * k * pair

        h = 1e-5
        for i in range(count):
            up, dn = roots.copy(), roots.copy()
            up[i] += h
            dn[i] -= h
            grad = (energy(up) - energy(dn)) / (2 * h)
            assert abs(grad) <= 1e-9

    def test_validation(self):
        with pytest.raises(ValueError):
            solve_coherent_roots(0.0, 3)
        with pytest.raises(ValueError):
            solve_coherent_roots(1.0, 51)


class TestGluonicSystem:
    def test_n0_vacuous(self):
        sys = solve_gluonic_system(1.0, 1.0, 1.0, 0, 2)
        assert sys.roots == ()
        assert sys.B == pytest.approx(-0.5 - math.sqrt(2.5**2 + 1.0), rel=1e-14)
        assert sys.A == pytest.approx(math.sqrt(2.0), rel=1e-14)
        assert gluonic_identities(sys) == pytest.approx((0, 0, 0, 0), abs=1e-12)

    def test_n1_closed_form(self):
        sys = solve_gluonic_system(1.0, 1.0, 1.0, 1, 0)
        assert len(sys.roots) == 1
        assert sys.roots[0] == pytest.approx(-sys.A / (sys.B + 1.0), rel=1e-12)
        assert sys.roots[0] > 0

    def test_n3_against_independent_newton(self):
        sys = solve_gluonic_system(1.0, 1.0, 1.0, 3, 1)
        A, B = sys.A, sys.B

        # independent oracle: scipy on the log-radius formulation
        def eqs(logr):
            r = np.exp(logr)
            out = []
            for i in range(3):
                diff = r[i] - np.delete(r, i)
                out.append(np.sum(1.0 / diff) + A / r[i] ** 2 + (B + 1) / r[i])
            return out

        guess = np.log([0.05, 0.15, 0.4])
        sol = optimize.fsolve(eqs, guess, xtol=1e-13)
        oracle = np.sort(np.exp(sol))
        assert np.asarray(sys.roots) == pytest.approx(oracle, rel=1e-8)
        assert max(abs(v) for v in gluonic_identities(sys)) <= 1e-9

    @pytest.mark.parametrize("N,l", [(0, 0), (1, 2), (2, 1), (3, 1), (4, 0)])
    def test_identities_hold(self, N, l):
        sys = solve_gluonic_system(1.3, 0.9, 1.7, N, l)
        idents = gluonic_identities(sys)
        assert max(abs(v) for v in idents) <= 1e-9
        # the vanishing of the linear-potential coefficient is implied:
        # identity 3 equals -m*g1, so g1 == 0 follows, never imposed
        assert abs(idents[2] / sys.m) <= 1e-9

    def test_g3_emitted(self):
        sys = solve_gluonic_system(2.0, 1.0, 0.5, 0, 0)
        assert sys.g3 == pytest.approx(sys.A * sys.B / sys.m, rel=1e-14)
        assert sys.g3 < 0

    def test_validation(self):
        with pytest.raises(ValueError):
            solve_gluonic_system(-1.0, 1.0, 1.0, 0, 0)


class TestInverseRadiusMoment:
    def test_first_moment_closed_form(self):
        assert inverse_radius_moment(-3.0, 1.0, 1) == pytest.approx(1.5, rel=1e-14)
        B, A = -4.2, 0.7
        assert inverse_radius_moment(B, A, 1) == pytest.approx(
            (-2 * B - 3) / (2 * A), rel=1e-14)

    def test_second_moment_gamma_recurrence(self):
        B, A = -4.2, 0.7
        c = -2 * B - 3
        assert inverse_radius_moment(B, A, 2) == pytest.approx(
            c * (c + 1) / (2 * A) ** 2, rel=1e-14)

    @pytest.mark.parametrize("B,A", [(-3.0, 1.0), (-2.6, 0.5), (-5.0, 2.0),
                                     (-3.7, 1.3)])
    @pytest.mark.parametrize("p", [1, 2])
    def test_against_quadrature(self, B, A, p):
        def density(r):
            return r ** (2 * B + 2) * math.exp(-2 * A / r)

        norm, _ = integrate.quad(density, 0, np.inf)
        num, _ = integrate.quad(lambda r: density(r) / r**p, 0, np.inf)
        assert inverse_radius_moment(B, A, p) == pytest.approx(
            num / norm, rel=1e-8)

    def test_divergence_edge(self):
        with pytest.raises(ValueError):
            inverse_radius_moment(-1.4, 1.0, 1)  # -2B-3 < 0
        with pytest.raises(ValueError):
            inverse_radius_moment(-2.0, 1.0, 2)  # -2B-3 = 1 <= p-1


class TestCoherenceCases:
    def test_coulomb_w_vacuum(self):
        result = coherence_residual("coulomb_w_vacuum", u0=-1.0)
        assert result.solved == {"s0": -2.0, "q": -1.0}

    def test_linear_vacuum(self):
        result = coherence_residual("linear_vacuum")
        assert result.solved["b"] == 0.0
        assert coherence_residual("quadratic_vacuum", b=0.3).residual == 0.3

    @pytest.mark.parametrize("b", [0.5, 1.0, 2.0])
    def test_log_state_against_quadrature(self, b):
        solved = coherence_residual("log_state", b=b).solved["a"]
        # quadrature route: solve integral(a) = 0 using the computed moments
        i0, _ = integrate.quad(lambda x: (0.0 - math.log(b + x)) / (b + x) ** 3,
                               0, np.inf)
        i_slope, _ = integrate.quad(lambda x: 1.0 / (b + x) ** 3, 0, np.inf)
        a_quad = -i0 / i_slope
        assert solved == pytest.approx(a_quad, abs=1e-8)
        assert solved == pytest.approx(math.log(b) + 0.5, rel=1e-12)

    def test_log_state_b1(self):
        assert coherence_residual("log_state", b=1.0).solved["a"] == \
            pytest.approx(0.5, rel=1e-14)

    def test_unknown_case(self):
        with pytest.raises(KeyError):
            coherence_residual("cubic_state")
