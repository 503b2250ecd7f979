"""Scalar numerical kernels: error functions, quadrature, root finding, RK4.

Everything here is a pure function of its arguments. No module-level state
is mutated, so the routines are safe to call from several threads at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

from .errors import BracketError, DivergenceError, DomainError, NonConvergenceError

__all__ = [
    "Tolerance",
    "QuadResult",
    "erf",
    "erfc",
    "ierfc",
    "integrate",
    "integrate_with_error",
    "find_root",
    "integrate_ode",
    "DEFAULT_QUAD_TOL",
    "DEFAULT_ROOT_TOL",
]

_TWO_OVER_SQRT_PI = 2.0 / math.sqrt(math.pi)
_INV_SQRT_PI = 1.0 / math.sqrt(math.pi)
_EPS = 2.220446049250313e-16

# erf: power series up to here, continued fraction beyond
_SERIES_LIMIT = 2.0
# erfc: continued fraction above here (1 - erf loses digits otherwise)
_ERFC_CF_LIMIT = 0.5
_CF_MAX_TERMS = 5000
_QUAD_MAX_DEPTH = 60
# total bisections before giving up; bounds the work on pathological integrands
_QUAD_MAX_SPLITS = 100_000


@dataclass(frozen=True)
class Tolerance:
    """Stopping criteria for the iterative routines.

    ``absolute`` carries the units of whatever is being converged (an
    integral, a root location); ``relative`` is dimensionless.
    """

    absolute: float = 1e-10
    relative: float = 1e-10
    max_iterations: int = 200

    def __post_init__(self):
        if not (self.absolute > 0.0 and math.isfinite(self.absolute)):
            raise DomainError(f"absolute tolerance must be > 0, got {self.absolute!r}")
        if not (self.relative > 0.0 and math.isfinite(self.relative)):
            raise DomainError(f"relative tolerance must be > 0, got {self.relative!r}")
        if int(self.max_iterations) != self.max_iterations or self.max_iterations < 1:
            raise DomainError(f"max_iterations must be a positive integer, got {self.max_iterations!r}")


DEFAULT_QUAD_TOL = Tolerance(absolute=1e-10, relative=1e-10)
DEFAULT_ROOT_TOL = Tolerance(absolute=1e-12, relative=1e-12, max_iterations=200)


def _check_finite(x, name="x"):
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")


# ---------------------------------------------------------------------------
# error functions
# ---------------------------------------------------------------------------

def _erf_series(x):
    # erf(x) = 2/sqrt(pi) exp(-x^2) sum_k 2^k x^(2k+1) / (1*3*...*(2k+1));
    # all terms positive, so no cancellation for |x| <= 2.
    x2 = x * x
    term = x
    total = x
    k = 0
    while True:
        k += 1
        term *= 2.0 * x2 / (2 * k + 1)
        total += term
        if term <= _EPS * 0.25 * total:
            break
    return _TWO_OVER_SQRT_PI * math.exp(-x2) * total


def _erfc_cf(x):
    """erfc for x > 0 via the Laplace continued fraction (modified Lentz).

    erfc(x) = exp(-x^2)/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    """
    tiny = 1e-300
    f = x
    c = x
    d = 0.0
    for k in range(1, _CF_MAX_TERMS):
        a = 0.5 * k
        d = x + a * d
        if d == 0.0:
            d = tiny
        d = 1.0 / d
        c = x + a / c
        if c == 0.0:
            c = tiny
        delta = c * d
        f *= delta
        if abs(delta - 1.0) <= _EPS:
            break
    else:
        raise NonConvergenceError(f"erfc continued fraction did not converge at x={x}", estimate=f)
    return math.exp(-x * x) * _INV_SQRT_PI / f


def erf(x: float) -> float:
    """Gauss error function, absolute error below 1e-12 on the real line."""
    _check_finite(x)
    ax = abs(x)
    if ax <= _SERIES_LIMIT:
        val = _erf_series(ax)
    elif ax >= 6.5:
        # erfc(6.5) < 1e-19, far below double spacing near 1
        val = 1.0
    else:
        val = 1.0 - _erfc_cf(ax)
    return -val if x < 0 else val


def erfc(x: float) -> float:
    """Complementary error function ``1 - erf(x)``.

    For ``x > 0.5`` the value is computed directly from a continued fraction,
    so it keeps full relative precision deep into the tail.
    """
    _check_finite(x)
    if x > _ERFC_CF_LIMIT:
        if x > 27.0:
            return 0.0
        return _erfc_cf(x)
    if x < -_ERFC_CF_LIMIT:
        if x < -6.5:
            return 2.0
        return 2.0 - _erfc_cf(-x)
    return 1.0 - erf(x)


def ierfc(x: float) -> float:
    """First repeated integral of erfc, ``exp(-x^2)/sqrt(pi) - x*erfc(x)``."""
    _check_finite(x)
    if x < 0.0:
        raise DomainError(f"ierfc is defined here for x >= 0, got {x!r}")
    if x > 27.0:
        return 0.0
    return math.exp(-x * x) * _INV_SQRT_PI - x * erfc(x)


# ---------------------------------------------------------------------------
# quadrature
# ---------------------------------------------------------------------------

class QuadResult(NamedTuple):
    value: float
    error: float
    evaluations: int


def integrate_with_error(f: Callable[[float], float], a: float, b: float,
                         tol: Tolerance = DEFAULT_QUAD_TOL) -> QuadResult:
    """Adaptive Simpson quadrature with Richardson extrapolation.

    Returns the extrapolated integral together with the summed local error
    estimates ``|S2 - S1| / 15``. Raises :class:`NonConvergenceError` (with the
    best estimate attached) when an interval cannot be resolved within the
    maximum bisection depth of 60 or the total bisection budget runs out.
    """
    _check_finite(a, "a")
    _check_finite(b, "b")
    if a > b:
        raise DomainError(f"integration limits must satisfy a <= b, got a={a}, b={b}")
    if a == b:
        return QuadResult(0.0, 0.0, 0)

    evals = 0

    def fx(x):
        nonlocal evals
        evals += 1
        y = f(x)
        if not math.isfinite(y):
            raise DomainError(f"integrand is not finite at x={x!r}")
        return y

    # coarse composite pass, used only to fix the relative-tolerance scale
    panels = 8
    h = (b - a) / panels
    xs = [a + i * h for i in range(panels + 1)]
    xs[-1] = b
    mids = [0.5 * (xs[i] + xs[i + 1]) for i in range(panels)]
    fxs = [fx(x) for x in xs]
    fms = [fx(m) for m in mids]
    coarse = sum((xs[i + 1] - xs[i]) / 6.0 * (fxs[i] + 4.0 * fms[i] + fxs[i + 1])
                 for i in range(panels))
    eps = max(tol.absolute, tol.relative * abs(coarse))

    total = 0.0
    err_total = 0.0
    failed = False
    splits = 0
    # explicit stack: (lo, hi, f_lo, f_mid, f_hi, whole, eps, depth)
    stack = []
    for i in reversed(range(panels)):
        lo, hi = xs[i], xs[i + 1]
        whole = (hi - lo) / 6.0 * (fxs[i] + 4.0 * fms[i] + fxs[i + 1])
        stack.append((lo, hi, fxs[i], fms[i], fxs[i + 1], whole, eps / panels, 3))
    while stack:
        lo, hi, flo, fmid, fhi, whole, e, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        lm = 0.5 * (lo + mid)
        rm = 0.5 * (mid + hi)
        flm = fx(lm)
        frm = fx(rm)
        left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid)
        right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi)
        diff = left + right - whole
        if abs(diff) <= e:
            total += left + right + diff / 15.0
            err_total += abs(diff) / 15.0
            continue
        if depth >= _QUAD_MAX_DEPTH or not (lo < lm < mid < rm < hi):
            failed = True
            total += left + right + diff / 15.0
            err_total += abs(diff) / 15.0
            continue
        splits += 1
        if splits > _QUAD_MAX_SPLITS:
            failed = True
            total += left + right + diff / 15.0
            err_total += abs(diff) / 15.0
            # settle what is left at its current resolution
            total += sum(item[5] for item in stack)
            stack.clear()
            break
        stack.append((mid, hi, fmid, frm, fhi, right, 0.5 * e, depth + 1))
        stack.append((lo, mid, flo, flm, fmid, left, 0.5 * e, depth + 1))

    if failed:
        raise NonConvergenceError(
            f"adaptive Simpson did not converge on [{a}, {b}] within depth "
            f"{_QUAD_MAX_DEPTH} / {_QUAD_MAX_SPLITS} bisections "
            f"(estimated error {err_total:.3g})",
            estimate=total,
        )
    return QuadResult(total, err_total, evals)


def integrate(f: Callable[[float], float], a: float, b: float,
              tol: Tolerance = DEFAULT_QUAD_TOL) -> float:
    """Integral of ``f`` over ``[a, b]``; see :func:`integrate_with_error`."""
    return integrate_with_error(f, a, b, tol).value


# ---------------------------------------------------------------------------
# root finding
# ---------------------------------------------------------------------------

def find_root(g: Callable[[float], float], lo: float, hi: float,
              tol: Tolerance = DEFAULT_ROOT_TOL) -> float:
    """Root of ``g`` on ``[lo, hi]`` by safeguarded secant / bisection.

    A secant step is taken whenever it lands strictly inside the bracket and
    the previous step at least halved the bracket; otherwise the bracket is
    bisected. Trial points are kept at least ``tol.absolute / 2`` from the
    ends so a one-sided secant sequence still collapses the bracket.
    Terminates once the bracket is no wider than ``tol.absolute``.
    """
    _check_finite(lo, "lo")
    _check_finite(hi, "hi")
    if lo > hi:
        lo, hi = hi, lo
    a, b = lo, hi
    fa, fb = g(a), g(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if not (math.isfinite(fa) and math.isfinite(fb)):
        raise DomainError(f"g is not finite at the bracket ends ({fa!r}, {fb!r})")
    if (fa > 0.0) == (fb > 0.0):
        raise BracketError(f"no sign change on [{lo}, {hi}]: g(lo)={fa:.6g}, g(hi)={fb:.6g}")

    half_tol = 0.5 * tol.absolute
    bisect_next = False
    for _ in range(tol.max_iterations):
        width = b - a
        if width <= tol.absolute:
            return a if abs(fa) <= abs(fb) else b
        mid = a + 0.5 * width
        s = mid
        if not bisect_next and fb != fa:
            s = b - fb * (b - a) / (fb - fa)
            if not (a < s < b):
                s = mid
        s = min(max(s, a + half_tol), b - half_tol)
        fs = g(s)
        if not math.isfinite(fs):
            raise DomainError(f"g is not finite at x={s!r}")
        if fs == 0.0:
            return s
        if (fs > 0.0) == (fa > 0.0):
            a, fa = s, fs
        else:
            b, fb = s, fs
        bisect_next = (b - a) > 0.5 * width
    best = a if abs(fa) <= abs(fb) else b
    raise NonConvergenceError(
        f"root not bracketed to {tol.absolute:g} within {tol.max_iterations} iterations",
        estimate=best,
    )


# ---------------------------------------------------------------------------
# ODE
# ---------------------------------------------------------------------------

def integrate_ode(rhs: Callable[[float, float], float], y0: float, t0: float,
                  t1: float, steps: int) -> float:
    """Classic fixed-step RK4 for a scalar ODE; returns y(t1)."""
    if int(steps) != steps or steps < 1:
        raise DomainError(f"steps must be a positive integer, got {steps!r}")
    if t1 < t0:
        raise DomainError(f"t1 must be >= t0, got t0={t0}, t1={t1}")
    h = (t1 - t0) / steps
    y = float(y0)
    for i in range(int(steps)):
        t = t0 + i * h
        k1 = rhs(t, y)
        k2 = rhs(t + 0.5 * h, y + 0.5 * h * k1)
        k3 = rhs(t + 0.5 * h, y + 0.5 * h * k2)
        k4 = rhs(t + h, y + h * k3)
        y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if not math.isfinite(y):
            raise DivergenceError(f"ODE state became non-finite at t={t + h!r}", estimate=y)
    return y
