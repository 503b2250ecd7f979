import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hbim.errors import DegenerateTimeError, DomainError, StageExceededError
from hbim.exact_ref import Medium, pt_exact_accumulated_heat, pt_exact_surface_flux, pt_exact_temperature
from hbim.hbim_core import (
    PF,
    PT,
    OverSpecified,
    PowerLawProfile,
    SpherePT,
    accumulated_heat_approx,
    evaluate,
    front_degeneracy_check,
    hbi_residual,
    overspecified_depth_ode,
    overspecified_heatup_time,
    overspecified_profile,
    overspecified_solve,
    pf_depth,
    pf_profile,
    pt_depth,
    pt_profile,
    sphere_solve,
    surface_flux_approx,
)
from hbim.numerics import Tolerance, integrate

N_STAR = 2.0 / (math.pi - 2.0)
SWEEP_N = (1.1, 1.75, 2.0, 3.0, 3.66, 4.0, 10.0, 20.0)
SWEEP_T = (0.01, 1.0, 100.0)

exponents = st.floats(min_value=1.0, max_value=40.0)
amplitudes = st.floats(min_value=-500.0, max_value=500.0).filter(lambda v: abs(v) > 1e-3)


class TestProfile:
    @given(n=exponents, b=amplitudes, d=st.floats(1e-4, 1e3), base=st.floats(-300, 300))
    def test_boundary_identities(self, n, b, d, base):
        p = PowerLawProfile(base, b, d, n)
        assert p(0.0) == base + b
        assert p(d) == base
        assert p(2.0 * d) == base
        assert p.gradient(d) == 0.0

    def test_offset_profile(self):
        p = PowerLawProfile(1.0, 2.0, 0.5, 2.0, origin_offset=3.0)
        assert p.front == 3.5
        assert p(3.0) == 3.0
        assert p(3.25) == pytest.approx(1.5)
        with pytest.raises(DomainError):
            p(2.9)

    def test_gradient_matches_difference(self):
        p = PowerLawProfile(0.0, 3.0, 2.0, 2.7)
        x, h = 0.6, 1e-6
        assert p.gradient(x) == pytest.approx((p(x + h) - p(x - h)) / (2 * h), rel=1e-7)

    @pytest.mark.parametrize("n", [0.5, 0.999])
    def test_exponent_below_one(self, n):
        with pytest.raises(DomainError):
            PowerLawProfile(0.0, 1.0, 1.0, n)

    def test_nonpositive_depth(self):
        with pytest.raises(DomainError):
            PowerLawProfile(0.0, 1.0, 0.0, 2.0)

    def test_evaluate_is_call(self):
        p = PowerLawProfile(0.0, 1.0, 1.0, 3.0)
        assert evaluate(p, 0.3) == p(0.3) == pytest.approx(0.343)


class TestDepthLaws:
    @given(n=exponents, alpha=st.floats(1e-7, 1e-2), t=st.floats(1e-3, 1e5))
    def test_algebraic_laws(self, n, alpha, t):
        at = alpha * t
        assert pt_depth(n, alpha, t) ** 2 / at == pytest.approx(2 * n * (n + 1), rel=1e-14)
        assert pf_depth(n, alpha, t) ** 2 / at == pytest.approx(n * (n + 1), rel=1e-14)

    @pytest.mark.parametrize("n", [1.0, 1.5, 2.0, 20.0, 100.0])
    def test_ratio_exceeds_one(self, n):
        assert pt_depth(n, 1.0, 1.0) > 1.0
        assert pf_depth(n, 1.0, 1.0) > 1.0

    def test_literal_variant(self):
        assert pt_depth(2.0, 1.0, 1.0, literal=True) == pytest.approx(2.0)
        with pytest.raises(DomainError):
            pt_depth(1.0, 1.0, 1.0, literal=True)

    def test_printed_upper_limits(self):
        # the published integration limits are sqrt(2n(n+1)) truncated to two decimals
        for n, limit in [(2, 3.46), (3, 4.89), (3.75, 5.96), (4, 6.32), (20, 28.98)]:
            assert math.floor(pt_depth(n, 1.0, 1.0) * 100) / 100 == limit

    def test_negative_time(self):
        with pytest.raises(DegenerateTimeError):
            pt_depth(2.0, 1.0, -1.0)


class TestPTAndPF:
    def test_pt_surface_flux_at_optimum_matches_exact(self, steel):
        t = 12.0
        p = pt_profile(N_STAR, steel, 300.0, 20.0, t)
        q_a = surface_flux_approx(p, steel.conductivity)
        assert q_a == pytest.approx(pt_exact_surface_flux(steel, 300.0, 20.0, t), rel=1e-12)

    def test_pt_heat_at_optimum_matches_exact(self, steel):
        t = 12.0
        p = pt_profile(N_STAR, steel, 300.0, 20.0, t)
        Q_a = accumulated_heat_approx(p, steel)
        assert Q_a == pytest.approx(pt_exact_accumulated_heat(steel, 300.0, 20.0, t), rel=1e-12)

    def test_pt_profile_close_to_exact(self, steel):
        t = 100.0
        p = pt_profile(N_STAR, steel, 1.0, 0.0, t)
        worst = max(abs(p(x) - pt_exact_temperature(steel, 1.0, 0.0, x, t))
                    for x in [i * p.depth / 50 for i in range(60)])
        # a few percent of the surface excess
        assert worst < 0.05

    def test_pf_surface_gradient(self, steel):
        p = pf_profile(3.0, steel, 2e4, 15.0, 9.0)
        assert surface_flux_approx(p, steel.conductivity) == pytest.approx(2e4, rel=1e-13)

    def test_pf_callable_rejected(self, steel):
        with pytest.raises(TypeError):
            pf_profile(3.0, steel, lambda t: 1.0, 0.0, 1.0)
        with pytest.raises(TypeError):
            PF(lambda t: 1.0, 0.0)

    def test_profile_needs_positive_time(self, steel):
        with pytest.raises(DegenerateTimeError):
            pt_profile(2.0, steel, 1.0, 0.0, 0.0)

    @pytest.mark.parametrize("problem", [PT(1.0, 0.0), PT(-4.0, 2.0), PF(1.0, 0.0), PF(-3.0, 1.0)],
                             ids=["pt", "pt-cooling", "pf", "pf-cooling"])
    @pytest.mark.parametrize("n", SWEEP_N)
    @pytest.mark.parametrize("t", SWEEP_T)
    def test_hbi_residual_sweep(self, unit_medium, problem, n, t):
        assert hbi_residual(problem, n, unit_medium, t) <= 1e-4

    @pytest.mark.parametrize("problem", [PT(1.0, 0.0), PF(1.0, 0.0)], ids=["pt", "pf"])
    @pytest.mark.parametrize("scale", [2.0, 0.5])
    def test_wrong_depth_law_detected(self, unit_medium, problem, scale):
        assert hbi_residual(problem, 2.0, unit_medium, 1.0, depth_scale=scale) >= 0.1

    def test_literal_law_violates_balance(self, unit_medium):
        assert hbi_residual(PT(1.0, 0.0), 2.0, unit_medium, 1.0, literal=True) >= 0.1

    @given(n=exponents, b=amplitudes, d=st.floats(1e-3, 10.0))
    @settings(max_examples=40)
    def test_accumulated_heat_closed_form(self, n, b, d):
        m = Medium(2.0, 3.0, 5.0)
        p = PowerLawProfile(7.0, b, d, n)
        quad = m.volumetric_heat_capacity * integrate(lambda x: p(x) - 7.0, 0.0, d, Tolerance(1e-300, 1e-13))
        assert accumulated_heat_approx(p, m) == pytest.approx(quad, rel=1e-10)


class TestDegeneracy:
    def test_n3(self):
        assert front_degeneracy_check(3.0) == (0.0, 0.0)

    def test_n2(self):
        assert front_degeneracy_check(2.0, amplitude=1.5, depth=0.5) == (0.0, pytest.approx(2 * 1.5 / 0.25))

    def test_n20(self):
        assert front_degeneracy_check(20.0) == (0.0, 0.0)

    def test_below_two(self):
        with pytest.raises(DomainError):
            front_degeneracy_check(1.75)


class TestOverSpecified:
    @pytest.fixture
    def case(self):
        m = Medium(20.0, 8000.0, 500.0)
        prob = OverSpecified(Ts=400.0, Tinf=20.0, F=2e5, h0=0.05)
        return m, prob

    def test_groups(self, case):
        m, prob = case
        s = overspecified_solve(m, prob, 10.0)
        phi = 2e5 / (20.0 * 380.0)
        assert s.groups.Phi == pytest.approx(phi, rel=1e-15)
        assert s.groups.Phi0 == pytest.approx(phi * 0.05, rel=1e-15)
        assert s.groups.Fo_c == pytest.approx(m.diffusivity * 10.0 / 0.05 ** 2, rel=1e-15)
        assert s.groups.Fo_f == pytest.approx(m.diffusivity * phi ** 2 * 10.0, rel=1e-15)

    def test_exponent_is_phi_delta(self, case):
        m, prob = case
        t_h = overspecified_heatup_time(m, prob)
        for k in range(1, 51):
            s = overspecified_solve(m, prob, t_h * k / 50)
            assert s.exponent == s.groups.Phi * s.delta

    def test_exponent_at_heatup_time(self, case):
        m, prob = case
        s = overspecified_solve(m, prob, overspecified_heatup_time(m, prob))
        assert s.exponent == pytest.approx(s.groups.Phi0, rel=1e-9)
        assert s.delta == pytest.approx(prob.h0, rel=1e-9)

    @pytest.mark.parametrize("frac", [0.01, 0.3, 0.8, 1.0])
    def test_closed_form_vs_rk4(self, case, frac):
        m, prob = case
        t = frac * overspecified_heatup_time(m, prob)
        assert overspecified_depth_ode(m, prob, t) == pytest.approx(overspecified_solve(m, prob, t).delta, rel=1e-8)

    def test_past_heatup(self, case):
        m, prob = case
        t_h = overspecified_heatup_time(m, prob)
        with pytest.raises(StageExceededError) as info:
            overspecified_solve(m, prob, 1.01 * t_h)
        assert info.value.heatup_time == t_h

    def test_profile(self, case):
        m, prob = case
        s = overspecified_solve(m, prob, 5.0)
        assert overspecified_profile(s, prob, 0.0) == 400.0
        assert overspecified_profile(s, prob, s.delta) == 20.0

    def test_surface_gradient_matches_flux(self, case):
        # -λ dT/dx at the face = λ ΔT n/δ = λ ΔT Φ = F
        m, prob = case
        s = overspecified_solve(m, prob, 5.0)
        q = m.conductivity * (prob.Ts - prob.Tinf) * s.exponent / s.delta
        assert q == pytest.approx(prob.F, rel=1e-12)

    @pytest.mark.parametrize("kwargs", [
        dict(Ts=1.0, Tinf=1.0, F=1.0, h0=1.0),
        dict(Ts=2.0, Tinf=1.0, F=0.0, h0=1.0),
        dict(Ts=2.0, Tinf=1.0, F=1.0, h0=0.0),
        dict(Ts=2.0, Tinf=1.0, F=-1.0, h0=1.0),
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(DomainError):
            OverSpecified(**kwargs)


class TestSphere:
    def test_default_exponent(self, steel):
        sol = sphere_solve(steel, SpherePT(0.02, 500.0, 20.0), 5.0)
        assert sol.profile.exponent == N_STAR

    def test_surface_temperature(self, steel):
        sol = sphere_solve(steel, SpherePT(0.02, 500.0, 20.0), 5.0)
        assert sol.temperature(0.02) == pytest.approx(500.0, rel=1e-15)
        assert sol.temperature(sol.profile.front + 1.0) == 20.0

    def test_equivalent_to_shifted_slab(self, steel):
        rng = random.Random(3)
        for _ in range(100):
            r0 = rng.uniform(1e-3, 0.2)
            Ts, Tinf = rng.uniform(100, 900), rng.uniform(-20, 60)
            t = rng.uniform(0.1, 500.0)
            sol = sphere_solve(steel, SpherePT(r0, Ts, Tinf), t)
            slab = pt_profile(N_STAR, steel, r0 * (Ts - Tinf), 0.0, t)
            r = r0 + rng.uniform(0.0, 1.2) * slab.depth
            assert abs(sol.U(r) - slab(r - r0)) <= 1e-12 * abs(r0 * (Ts - Tinf))

    def test_shell_balance(self, unit_medium):
        assert hbi_residual(SpherePT(1.0, 2.0, 1.0), N_STAR, unit_medium, 1.0) <= 1e-4

    def test_invalid(self):
        with pytest.raises(DomainError):
            SpherePT(-1.0, 2.0, 1.0)
        with pytest.raises(DomainError):
            SpherePT(1.0, 2.0, 2.0)
