"""Determine the profile exponent from pairs of matching constraints.

Every constraint is reduced to a curve ``g(n) = δ/sqrt(α t)``: the depth
ratio it demands for a given exponent. Two independent constraints fix both
unknowns where their curves cross. All curves are dimensionless, so the
solutions carry no dependence on material data or boundary magnitudes.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from .errors import BracketError, DomainError, NoSolutionError
from .numerics import DEFAULT_ROOT_TOL, Tolerance, find_root

__all__ = [
    "ConstraintKind",
    "MokrushinFluxGroup",
    "Constraint",
    "ExponentSolution",
    "ScalingEstimate",
    "ConsistencyRow",
    "EXPONENT_BRACKET",
    "depth_ratio",
    "solve_exponent",
    "closed_form_exponent",
    "canonical_pair",
    "solve_problem",
    "scaling_estimate",
    "consistency_report",
    "problem_class_of",
]

_SQRT_PI = math.sqrt(math.pi)
EXPONENT_BRACKET = (1.0 + 1e-6, 100.0)


class ConstraintKind(enum.Enum):
    FLUX_MATCH_PT = "FluxMatchPT"
    HEAT_MATCH = "HeatMatch"
    SURFACE_TEMP_MATCH_PF = "SurfaceTempMatchPF"
    HBI_DEPTH_PT = "HbiDepthPT"
    HBI_DEPTH_PF = "HbiDepthPF"
    VEINIK_PT = "VeinikPT"
    VEINIK_PF = "VeinikPF"
    MOKRUSHIN_MIDPOINT = "MokrushinMidpoint"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class MokrushinFluxGroup:
    """Mokrushin-type depth law carrying a boundary group (Bi or Φ0).

    Approximate by construction; useful for order-of-magnitude estimates only.
    """

    group: float
    which: str = "Bi"

    def __post_init__(self):
        if self.which not in ("Bi", "Phi0"):
            raise DomainError(f"which must be 'Bi' or 'Phi0', got {self.which!r}")
        if not self.group > 0.0:
            raise DomainError(f"group must be > 0, got {self.group!r}")

    def __str__(self):
        return f"MokrushinFluxGroup({self.which}={self.group:g})"


Constraint = Union[ConstraintKind, MokrushinFluxGroup]


def depth_ratio(kind: Constraint, n: float, literal: bool = False) -> float:
    """Depth ratio ``δ/sqrt(α t)`` that constraint ``kind`` demands at exponent ``n``.

    ``literal=True`` swaps ``(n + 1)`` for ``(n - 1)`` in the heat-integral
    based curves, reproducing the printed variants.
    """
    if not n > 1.0:
        raise DomainError(f"constraint curves are defined for n > 1, got {n!r}")
    m = (n - 1.0) if literal else (n + 1.0)
    K = ConstraintKind
    if isinstance(kind, MokrushinFluxGroup):
        return math.sqrt(8.0 * n * m * kind.group)
    if kind is K.FLUX_MATCH_PT:
        return n * _SQRT_PI
    if kind is K.HEAT_MATCH:
        return 2.0 * m / _SQRT_PI
    if kind is K.SURFACE_TEMP_MATCH_PF:
        return 2.0 * n / _SQRT_PI
    if kind in (K.HBI_DEPTH_PT, K.VEINIK_PT):
        return math.sqrt(2.0 * n * m)
    if kind in (K.HBI_DEPTH_PF, K.VEINIK_PF):
        return math.sqrt(n * m)
    if kind is K.MOKRUSHIN_MIDPOINT:
        return math.sqrt(8.0 * n * m)
    raise DomainError(f"unknown constraint {kind!r}")


@dataclass(frozen=True)
class ExponentSolution:
    n: float
    depth_ratio: float
    residual: float
    pair: Tuple[Constraint, Constraint]


def _coincident(c1, c2, lo, hi, literal):
    probes = (lo + 0.1, 0.5 * (lo + hi), hi)
    return all(depth_ratio(c1, p, literal) == depth_ratio(c2, p, literal) for p in probes)


def solve_exponent(c1: Constraint, c2: Constraint,
                   bracket: Tuple[float, float] = EXPONENT_BRACKET,
                   tol: Tolerance = DEFAULT_ROOT_TOL,
                   literal: bool = False) -> ExponentSolution:
    """Exponent at which the depth-ratio curves of ``c1`` and ``c2`` cross.

    Raises :class:`NoSolutionError` when the curves coincide or do not cross
    on ``bracket``.
    """
    if c1 == c2:
        raise DomainError("a constraint cannot be paired with itself")
    lo, hi = bracket
    if _coincident(c1, c2, lo, hi, literal):
        raise NoSolutionError(f"{c1} and {c2} describe the same curve; they cannot fix n")

    def gap(n):
        return depth_ratio(c1, n, literal) - depth_ratio(c2, n, literal)

    try:
        n = find_root(gap, lo, hi, tol)
    except BracketError as exc:
        raise NoSolutionError(f"{c1} and {c2} do not cross for n in [{lo:g}, {hi:g}]") from exc
    return ExponentSolution(
        n=n,
        depth_ratio=depth_ratio(c1, n, literal),
        residual=abs(gap(n)),
        pair=(c1, c2),
    )


def problem_class_of(problem) -> str:
    """Normalise a problem instance or name to ``'pt'``, ``'pf'`` or ``'sphere'``."""
    if isinstance(problem, str):
        key = problem.lower()
        if key in ("pt", "pf", "sphere"):
            return key
        if key == "spherept":
            return "sphere"
        raise DomainError(f"no exponent constraints for problem class {problem!r}")
    from . import hbim_core

    if isinstance(problem, hbim_core.PT):
        return "pt"
    if isinstance(problem, hbim_core.PF):
        return "pf"
    if isinstance(problem, hbim_core.SpherePT):
        return "sphere"
    raise DomainError(f"no exponent constraints for {type(problem).__name__}")


def closed_form_exponent(problem_class) -> float:
    """``2/(π - 2)`` for the PT slab and the sphere, ``π/(4 - π)`` for PF."""
    key = problem_class_of(problem_class)
    if key == "pf":
        return math.pi / (4.0 - math.pi)
    return 2.0 / (math.pi - 2.0)


def canonical_pair(problem_class) -> Tuple[ConstraintKind, ConstraintKind]:
    key = problem_class_of(problem_class)
    K = ConstraintKind
    if key == "pf":
        return K.SURFACE_TEMP_MATCH_PF, K.HBI_DEPTH_PF
    # sphere shares the slab pair so both return bit-identical exponents
    return K.FLUX_MATCH_PT, K.HEAT_MATCH


def solve_problem(problem, tol: Tolerance = DEFAULT_ROOT_TOL) -> ExponentSolution:
    """Solve the canonical constraint pair for a problem class or instance."""
    return solve_exponent(*canonical_pair(problem), tol=tol)


@dataclass(frozen=True)
class ScalingEstimate:
    n_estimate: float
    tuning_coefficient: float
    group: float


_PATTERN_DIVISORS = {"veinik": math.sqrt(2.0), "mokrushin": 2.0 * math.sqrt(2.0)}


def scaling_estimate(depth_ratio: float, group: float = 1.0, p: float = 1.0,
                     pattern: str = "veinik") -> ScalingEstimate:
    """Rough exponent from ``n(n+1) ≈ n²``: ``n ≈ p * ratio / (k * sqrt(group))``.

    ``k`` is ``sqrt(2)`` for the Veinik law and ``2*sqrt(2)`` for the
    Mokrushin midpoint law. ``p`` is a tuning coefficient to be fitted.
    """
    if not (depth_ratio > 0.0 and group > 0.0 and p > 0.0):
        raise DomainError("depth_ratio, group and p must all be > 0")
    try:
        k = _PATTERN_DIVISORS[pattern]
    except KeyError:
        raise DomainError(f"pattern must be one of {sorted(_PATTERN_DIVISORS)}, got {pattern!r}") from None
    return ScalingEstimate(p * depth_ratio / (k * math.sqrt(group)), p, group)


@dataclass(frozen=True)
class ConsistencyRow:
    pair: Tuple[Constraint, Constraint]
    status: str  # "solved", "coincident" or "no-crossing"
    n: Optional[float] = None
    depth_ratio: Optional[float] = None
    residual: Optional[float] = None


_CLASS_CONSTRAINTS = {
    "pt": (
        ConstraintKind.FLUX_MATCH_PT,
        ConstraintKind.HEAT_MATCH,
        ConstraintKind.HBI_DEPTH_PT,
        ConstraintKind.VEINIK_PT,
        ConstraintKind.MOKRUSHIN_MIDPOINT,
    ),
    "pf": (
        ConstraintKind.SURFACE_TEMP_MATCH_PF,
        ConstraintKind.HBI_DEPTH_PF,
        ConstraintKind.VEINIK_PF,
        ConstraintKind.MOKRUSHIN_MIDPOINT,
    ),
}
_CLASS_CONSTRAINTS["sphere"] = _CLASS_CONSTRAINTS["pt"]


def consistency_report(problem_class, tol: Tolerance = DEFAULT_ROOT_TOL) -> List[ConsistencyRow]:
    """Intersect every pair of constraints relevant to a problem class.

    For PF the Veinik curve is the overall heat balance, i.e. the heat-match
    route, and coincides with the HBI depth law.
    """
    rows = []
    for c1, c2 in itertools.combinations(_CLASS_CONSTRAINTS[problem_class_of(problem_class)], 2):
        try:
            sol = solve_exponent(c1, c2, tol=tol)
        except NoSolutionError:
            lo, hi = EXPONENT_BRACKET
            status = "coincident" if _coincident(c1, c2, lo, hi, False) else "no-crossing"
            rows.append(ConsistencyRow((c1, c2), status))
            continue
        rows.append(ConsistencyRow((c1, c2), "solved", sol.n, sol.depth_ratio, sol.residual))
    return rows
