"""Power-law HBIM profiles and the four boundary-value problems built on them.

The approximate field is

    T(x, t) = T_inf + b * (1 - x / delta(t))**n,    0 <= x <= delta,

and ``T = T_inf`` beyond the penetration depth ``delta``. Integrating the heat
equation over the layer (the heat-balance integral) fixes ``delta(t)`` for a
given exponent ``n``. The layer integral ``∫(1 - u)**n du = 1/(n + 1)`` is
used throughout; the ``literal`` switches reproduce the ``(n - 1)`` variants
that appear in print and are kept only for comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import DegenerateTimeError, DomainError, StageExceededError
from .exact_ref import Medium
from .numerics import Tolerance, integrate, integrate_ode

__all__ = [
    "PowerLawProfile",
    "PT",
    "PF",
    "OverSpecified",
    "SpherePT",
    "BoundaryProblem",
    "DimensionlessGroups",
    "OverSpecifiedState",
    "SphereSolution",
    "evaluate",
    "pt_depth",
    "pf_depth",
    "pt_profile",
    "pf_profile",
    "surface_flux_approx",
    "accumulated_heat_approx",
    "overspecified_heatup_time",
    "overspecified_solve",
    "overspecified_profile",
    "overspecified_depth_ode",
    "sphere_solve",
    "hbi_residual",
    "front_degeneracy_check",
]


@dataclass(frozen=True)
class PowerLawProfile:
    """``base_temp + amplitude * (1 - (x - origin_offset)/depth)**exponent``.

    ``origin_offset`` is zero for slabs and ``r0`` for the sphere, whose
    profile lives in ``U = r (T - T_inf)`` space.
    """

    base_temp: float
    amplitude: float
    depth: float
    exponent: float
    origin_offset: float = 0.0

    def __post_init__(self):
        if not (self.depth > 0.0 and math.isfinite(self.depth)):
            raise DomainError(f"penetration depth must be > 0, got {self.depth!r}")
        if not self.exponent >= 1.0:
            raise DomainError(f"exponent must be >= 1, got {self.exponent!r}")

    @property
    def front(self) -> float:
        return self.origin_offset + self.depth

    def __call__(self, x: float) -> float:
        return evaluate(self, x)

    def gradient(self, x: float) -> float:
        """Analytic ∂T/∂x; zero beyond the front."""
        if x < self.origin_offset:
            raise DomainError(f"x={x!r} lies before the profile origin {self.origin_offset!r}")
        u = (x - self.origin_offset) / self.depth
        if u >= 1.0:
            return 0.0
        n = self.exponent
        return -self.amplitude * n / self.depth * (1.0 - u) ** (n - 1.0)


def evaluate(profile: PowerLawProfile, x: float) -> float:
    """Profile value at ``x``; clamped to ``base_temp`` past the front."""
    if x < profile.origin_offset:
        raise DomainError(f"x={x!r} lies before the profile origin {profile.origin_offset!r}")
    u = (x - profile.origin_offset) / profile.depth
    if u >= 1.0:
        return profile.base_temp
    return profile.base_temp + profile.amplitude * (1.0 - u) ** profile.exponent


# ---------------------------------------------------------------------------
# boundary problems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PT:
    """Prescribed surface temperature ``Ts`` on a body initially at ``Tinf``."""

    Ts: float
    Tinf: float

    def __post_init__(self):
        if self.Ts == self.Tinf:
            raise DomainError("PT problem needs Ts != Tinf")


@dataclass(frozen=True)
class PF:
    """Prescribed constant surface heat flux ``F`` (W/m², positive into the body)."""

    F: float
    Tinf: float

    def __post_init__(self):
        if callable(self.F):
            raise TypeError("time-varying flux F(t) is not supported; pass a constant")
        if self.F == 0.0:
            raise DomainError("PF problem needs F != 0")


@dataclass(frozen=True)
class OverSpecified:
    """Surface temperature and surface flux imposed together on a slab of thickness h0."""

    Ts: float
    Tinf: float
    F: float
    h0: float

    def __post_init__(self):
        if self.Ts == self.Tinf:
            raise DomainError("over-specified problem needs Ts != Tinf")
        if self.F == 0.0:
            raise DomainError("over-specified problem needs F != 0")
        if not self.h0 > 0.0:
            raise DomainError(f"slab thickness h0 must be > 0, got {self.h0!r}")
        if self.F / (self.Ts - self.Tinf) <= 0.0:
            raise DomainError("F and Ts - Tinf must have the same sign (flux into the hotter face)")


@dataclass(frozen=True)
class SpherePT:
    """Sphere of radius ``r0`` held at ``Ts`` in an infinite medium at ``Tinf``."""

    r0: float
    Ts: float
    Tinf: float

    def __post_init__(self):
        if self.Ts == self.Tinf:
            raise DomainError("sphere problem needs Ts != Tinf")
        if not self.r0 >= 0.0:
            raise DomainError(f"sphere radius must be >= 0, got {self.r0!r}")


BoundaryProblem = Union[PT, PF, OverSpecified, SpherePT]


# ---------------------------------------------------------------------------
# depth laws and fixed-exponent solutions
# ---------------------------------------------------------------------------

def _depth_factor(n, literal):
    if literal:
        if not n > 1.0:
            raise DomainError(f"the (n-1) depth law needs n > 1, got {n!r}")
        return n * (n - 1.0)
    if not n >= 1.0:
        raise DomainError(f"exponent must be >= 1, got {n!r}")
    return n * (n + 1.0)


def pt_depth(n: float, alpha: float, t: float, literal: bool = False) -> float:
    """Penetration depth for a prescribed surface temperature, ``sqrt(2n(n+1) α t)``."""
    if t < 0.0:
        raise DegenerateTimeError(f"time must be >= 0, got {t!r}")
    return math.sqrt(2.0 * _depth_factor(n, literal) * alpha * t)


def pf_depth(n: float, alpha: float, t: float, literal: bool = False) -> float:
    """Penetration depth for a prescribed surface flux, ``sqrt(n(n+1) α t)``."""
    if t < 0.0:
        raise DegenerateTimeError(f"time must be >= 0, got {t!r}")
    return math.sqrt(_depth_factor(n, literal) * alpha * t)


def _require_positive_time(t):
    if not t > 0.0:
        raise DegenerateTimeError(f"profile needs t > 0, got {t!r}")


def pt_profile(n: float, m: Medium, Ts: float, Tinf: float, t: float,
               literal: bool = False) -> PowerLawProfile:
    _require_positive_time(t)
    return PowerLawProfile(Tinf, Ts - Tinf, pt_depth(n, m.diffusivity, t, literal), n)


def pf_profile(n: float, m: Medium, F: float, Tinf: float, t: float,
               literal: bool = False) -> PowerLawProfile:
    """Flux-driven profile; the amplitude ``F δ/(λ n)`` makes the surface gradient match ``F``."""
    if callable(F):
        raise TypeError("time-varying flux F(t) is not supported; pass a constant")
    _require_positive_time(t)
    delta = pf_depth(n, m.diffusivity, t, literal)
    return PowerLawProfile(Tinf, F * delta / (m.conductivity * n), delta, n)


def surface_flux_approx(profile: PowerLawProfile, conductivity: float) -> float:
    """Heat flux into the body at the profile origin, ``λ b n / δ``."""
    return conductivity * profile.amplitude * profile.exponent / profile.depth


def accumulated_heat_approx(profile: PowerLawProfile, m: Medium, literal: bool = False) -> float:
    """Heat stored in the layer per unit area, ``ρ Cp b δ / (n + 1)``."""
    n = profile.exponent
    denom = (n - 1.0) if literal else (n + 1.0)
    return m.volumetric_heat_capacity * profile.amplitude * profile.depth / denom


# ---------------------------------------------------------------------------
# over-specified face (temperature and flux both imposed)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DimensionlessGroups:
    Phi: float  # flux length-scale inverse, 1/m
    Phi0: float  # radiation-conduction number N0 = Phi * h0
    Fo_c: float  # alpha t / h0**2
    Fo_f: float  # alpha Phi**2 t
    Bi: Optional[float] = None


@dataclass(frozen=True)
class OverSpecifiedState:
    delta: float
    exponent: float
    heatup_time: float
    groups: DimensionlessGroups


def _phi(m, prob):
    return prob.F / (m.conductivity * (prob.Ts - prob.Tinf))


def overspecified_heatup_time(m: Medium, prob: OverSpecified) -> float:
    """Time at which the layer reaches the back face, ``ln(1 + Φ0) / (α Φ²)``."""
    phi = _phi(m, prob)
    phi0 = phi * prob.h0
    return prob.h0 ** 2 / m.diffusivity / phi0 ** 2 * math.log1p(phi0)


def overspecified_solve(m: Medium, prob: OverSpecified, t: float) -> OverSpecifiedState:
    """Heat-up stage of the over-specified problem.

    The layer grows as ``δ = (exp(α Φ² t) - 1)/Φ`` and the exponent follows
    it as ``n = Φ δ``. Past the heat-up time the layer has reached the back
    face and :class:`StageExceededError` is raised; the fixed-geometry
    flux problem takes over from there.
    """
    if not t > 0.0:
        raise DegenerateTimeError(f"time must be > 0, got {t!r}")
    phi = _phi(m, prob)
    phi0 = phi * prob.h0
    t_h = overspecified_heatup_time(m, prob)
    if t > t_h * (1.0 + 1e-12):
        raise StageExceededError(
            f"t={t!r} s is past the heat-up time t_h={t_h!r} s; the layer has reached "
            "the back face and the fixed-depth flux problem applies",
            heatup_time=t_h,
        )
    fo_f = m.diffusivity * phi * phi * t
    delta = math.expm1(fo_f) / phi
    groups = DimensionlessGroups(
        Phi=phi, Phi0=phi0, Fo_c=m.diffusivity * t / prob.h0 ** 2, Fo_f=fo_f
    )
    return OverSpecifiedState(delta=delta, exponent=phi * delta, heatup_time=t_h, groups=groups)


def overspecified_profile(state: OverSpecifiedState, prob: OverSpecified, x: float) -> float:
    if x < 0.0:
        raise DomainError(f"x must be >= 0, got {x!r}")
    if x >= state.delta:
        return prob.Tinf
    return prob.Tinf + (prob.Ts - prob.Tinf) * (1.0 - x / state.delta) ** state.exponent


def overspecified_depth_ode(m: Medium, prob: OverSpecified, t: float, steps: int = 2000) -> float:
    """δ(t) by RK4 on ``dδ/dt = α Φ (1 + Φ δ)``, δ(0) = 0 (cross-check of the closed form)."""
    phi = _phi(m, prob)
    a = m.diffusivity * phi
    return integrate_ode(lambda _t, d: a * (1.0 + phi * d), 0.0, 0.0, t, steps)


# ---------------------------------------------------------------------------
# sphere in an infinite medium
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SphereSolution:
    """Sphere solution held in ``U = r (T - Tinf)`` space.

    ``profile.depth`` is the shell thickness ``δ - r0``; ``profile.front`` is
    the outer radius ``δ`` of the heated shell.
    """

    profile: PowerLawProfile
    r0: float
    Tinf: float
    Ts: float = field(default=0.0)

    def U(self, r: float) -> float:
        return evaluate(self.profile, r)

    def temperature(self, r: float) -> float:
        if r < self.r0:
            raise DomainError(f"r must be >= r0, got r={r!r}, r0={self.r0!r}")
        if r == 0.0:
            return self.Ts
        return self.Tinf + evaluate(self.profile, r) / r


def sphere_solve(m: Medium, prob: SpherePT, t: float, n: Optional[float] = None,
                 literal: bool = False) -> SphereSolution:
    """Solve the hot-sphere problem with the slab PT machinery in ``U = r T``.

    The far field is shifted to zero so that ``U_inf = 0`` and
    ``U_s = r0 (Ts - Tinf)``; ``n`` defaults to the PT exponent ``2/(π-2)``.
    """
    _require_positive_time(t)
    if n is None:
        from .exponent_solver import closed_form_exponent

        n = closed_form_exponent("sphere")
    shell = pt_depth(n, m.diffusivity, t, literal)
    Us = prob.r0 * (prob.Ts - prob.Tinf)
    profile = PowerLawProfile(0.0, Us, shell, n, origin_offset=prob.r0)
    return SphereSolution(profile=profile, r0=prob.r0, Tinf=prob.Tinf, Ts=prob.Ts)


# ---------------------------------------------------------------------------
# diagnostics
# ---------------------------------------------------------------------------

_LAYER_TOL = Tolerance(absolute=1e-300, relative=1e-13)


def _layer_profile(problem, n, m, t, depth_scale, literal):
    if isinstance(problem, PT):
        p = pt_profile(n, m, problem.Ts, problem.Tinf, t, literal)
    elif isinstance(problem, PF):
        p = pf_profile(n, m, problem.F, problem.Tinf, t, literal)
    elif isinstance(problem, SpherePT):
        p = sphere_solve(m, problem, t, n, literal).profile
    else:
        raise DomainError(f"heat-balance residual is not defined for {type(problem).__name__}")
    if depth_scale != 1.0:
        delta = p.depth * depth_scale
        amp = p.amplitude
        if isinstance(problem, PF):
            amp = problem.F * delta / (m.conductivity * n)
        p = PowerLawProfile(p.base_temp, amp, delta, p.exponent, p.origin_offset)
    return p


def hbi_residual(problem: BoundaryProblem, n: float, m: Medium, t: float,
                 depth_scale: float = 1.0, literal: bool = False,
                 rel_step: float = 1e-3) -> float:
    """Normalised violation of the heat-balance integral at time ``t``.

    Evaluates ``|d/dt ∫(T - T_inf) dx - α q(0)/λ| / |α q(0)/λ|`` with the
    layer integral done by quadrature and the time derivative by a central
    difference of relative step ``rel_step``. ``depth_scale`` stretches the
    depth law, which is how a deliberately wrong law is exercised.
    """
    _require_positive_time(t)
    h = rel_step * t

    def stored(tt):
        p = _layer_profile(problem, n, m, tt, depth_scale, literal)
        return integrate(lambda x: evaluate(p, x) - p.base_temp, p.origin_offset, p.front, _LAYER_TOL)

    rate = (stored(t + h) - stored(t - h)) / (2.0 * h)
    p = _layer_profile(problem, n, m, t, depth_scale, literal)
    inflow = m.diffusivity * p.amplitude * p.exponent / p.depth
    return abs(rate - inflow) / abs(inflow)


def front_degeneracy_check(n: float, amplitude: float = 1.0, depth: float = 1.0):
    """First and second x-derivatives of the profile at its front.

    Both vanish for every ``n > 2``, so requiring them to vanish cannot
    select the exponent.
    """
    if not n >= 2.0:
        raise DomainError(f"second derivative at the front is unbounded for n < 2 (n={n!r})")
    zero = 0.0
    first = -amplitude * n / depth * zero ** (n - 1.0)
    second = amplitude * n * (n - 1.0) / depth ** 2 * zero ** (n - 2.0)
    return first + 0.0, second
