"""Heat-balance integral method with a power-law profile of free exponent."""

__version__ = "0.1.0"

from .errors import (
    BracketError,
    DegenerateTimeError,
    DivergenceError,
    DomainError,
    HBIMError,
    NoSolutionError,
    NonConvergenceError,
    StageExceededError,
)
from .exact_ref import Medium
from .exponent_solver import ConstraintKind, closed_form_exponent, solve_exponent, solve_problem
from .hbim_core import PF, PT, OverSpecified, PowerLawProfile, SpherePT
from .numerics import Tolerance, erf, erfc, ierfc
