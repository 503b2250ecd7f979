"""Closed-form semi-infinite-body solutions (Carslaw & Jaeger).

These are the reference fields every HBIM approximation is measured against:
the erf field for a fixed surface temperature, the ierfc field for a fixed
surface flux, and the slab erf field reused for the sphere in ``U = r T``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import DegenerateTimeError, DomainError
from .numerics import erf, ierfc

__all__ = [
    "Medium",
    "pt_exact_temperature",
    "pt_exact_surface_flux",
    "pt_exact_accumulated_heat",
    "pf_exact_temperature",
    "sphere_exact_U",
]

_CONSISTENCY_RTOL = 1e-12


@dataclass(frozen=True)
class Medium:
    """Thermophysical constants of a homogeneous medium (SI units).

    ``diffusivity`` may be omitted, in which case it is computed as
    ``conductivity / (density * heat_capacity)``. When supplied it must agree
    with that ratio to 1e-12 relative.
    """

    conductivity: float
    density: float
    heat_capacity: float
    diffusivity: Optional[float] = None

    def __post_init__(self):
        for name in ("conductivity", "density", "heat_capacity"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise DomainError(f"{name} must be a positive finite number, got {v!r}")
        alpha = self.conductivity / (self.density * self.heat_capacity)
        if self.diffusivity is None:
            object.__setattr__(self, "diffusivity", alpha)
        else:
            if not (math.isfinite(self.diffusivity) and self.diffusivity > 0.0):
                raise DomainError(f"diffusivity must be positive, got {self.diffusivity!r}")
            if abs(self.diffusivity - alpha) > _CONSISTENCY_RTOL * self.diffusivity:
                raise DomainError(
                    f"inconsistent medium: diffusivity {self.diffusivity!r} != "
                    f"conductivity/(density*heat_capacity) = {alpha!r}"
                )

    @classmethod
    def from_diffusivity(cls, conductivity: float, diffusivity: float,
                         density: float = 1.0) -> "Medium":
        """Build a medium from λ and α, choosing Cp so that ρ·Cp = λ/α."""
        heat_capacity = conductivity / (diffusivity * density)
        return cls(conductivity, density, heat_capacity)

    @property
    def volumetric_heat_capacity(self) -> float:
        return self.density * self.heat_capacity


def _similarity(x, alpha, t):
    return x / (2.0 * math.sqrt(alpha * t))


def pt_exact_temperature(m: Medium, Ts: float, Tinf: float, x: float, t: float) -> float:
    """Temperature of a semi-infinite body whose face is held at ``Ts``.

    At ``t == 0`` the limit values are returned (``Ts`` on the face, ``Tinf``
    inside); negative times raise :class:`DegenerateTimeError`.
    """
    if x < 0.0:
        raise DomainError(f"x must be >= 0, got {x!r}")
    if t < 0.0:
        raise DegenerateTimeError(f"time must be >= 0, got {t!r}")
    if x == 0.0:
        return Ts
    if t == 0.0:
        return Tinf
    return Ts + (Tinf - Ts) * erf(_similarity(x, m.diffusivity, t))


def pt_exact_surface_flux(m: Medium, Ts: float, Tinf: float, t: float) -> float:
    """Heat flux into the body at x = 0, ``λ(Ts - Tinf)/sqrt(π α t)``."""
    if t <= 0.0:
        raise DegenerateTimeError(f"surface flux is singular at t <= 0 (t={t!r})")
    return m.conductivity * (Ts - Tinf) / math.sqrt(math.pi * m.diffusivity * t)


def pt_exact_accumulated_heat(m: Medium, Ts: float, Tinf: float, t: float) -> float:
    """Heat per unit area absorbed up to time ``t`` (time integral of the flux)."""
    if t < 0.0:
        raise DegenerateTimeError(f"time must be >= 0, got {t!r}")
    return 2.0 * m.conductivity * (Ts - Tinf) * math.sqrt(t / (math.pi * m.diffusivity))


def pf_exact_temperature(m: Medium, F: float, Tinf: float, x: float, t: float) -> float:
    """Temperature under a constant surface heat flux ``F`` (W/m²).

    Only a constant flux is supported; passing a callable raises ``TypeError``.
    """
    if callable(F):
        raise TypeError("time-varying flux F(t) is not supported; pass a constant")
    if x < 0.0:
        raise DomainError(f"x must be >= 0, got {x!r}")
    if t < 0.0:
        raise DegenerateTimeError(f"time must be >= 0, got {t!r}")
    if t == 0.0:
        return Tinf
    root = math.sqrt(m.diffusivity * t)
    return Tinf + 2.0 * F / m.conductivity * root * ierfc(x / (2.0 * root))


def sphere_exact_U(m: Medium, Us: float, Uinf: float, r0: float, r: float, t: float) -> float:
    """Reference field for ``U = r T`` outside a sphere of radius ``r0``.

    This is the slab PT solution evaluated at the shifted coordinate
    ``r - r0``.
    """
    if r < r0:
        raise DomainError(f"r must be >= r0, got r={r!r}, r0={r0!r}")
    return pt_exact_temperature(m, Us, Uinf, r - r0, t)
