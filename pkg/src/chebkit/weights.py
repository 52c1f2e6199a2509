"""Compactly supported smoothing weight and its closed-form Laplace transform.

The weight f(t; x, ell, eps) equals 1 on [1/2, 1], vanishes outside
[1/2 - eps/log x, 1 + eps/log x], and is built as the ell-fold convolution
of a box kernel of half-width A = eps/(2*ell*log x) with the indicator of
[1/2 - ell*A, 1 + ell*A].  Its Laplace transform

    F(z) = exp(-(1+2*ell*A)*z) * (1 - exp((1/2+2*ell*A)*z))/(-z)
                               * ((1 - exp(2*A*z))/(-2*A*z))**ell

is entire; the z = 0 singularity of each factor is removable.  The module
also verifies the transform's decay inequalities, which the contour
machinery relies on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError
from .reports import BoundReport

# switch each (1-exp(c*z))/(-c*z) factor to a 6-term series below this |c*z|
# to avoid catastrophic cancellation near z = 0
SERIES_THRESHOLD = 1e-4

# closed-form convolution CDF is numerically safe up to this many folds;
# beyond it the grid evaluator takes over
_MAX_CLOSED_FORM_ELL = 16


@dataclass(frozen=True)
class WeightSpec:
    """Parameters (x, ell, eps) of the smoothing weight; A is derived."""

    x: float
    ell: int
    eps: float

    def __post_init__(self):
        if not (self.x >= 3):
            raise DomainError(f"x must be >= 3, got {self.x}")
        if not (isinstance(self.ell, (int, np.integer)) and self.ell >= 1):
            raise DomainError(f"ell must be a positive integer, got {self.ell}")
        if not (0 < self.eps < 0.25):
            raise DomainError(f"eps must lie in (0, 1/4), got {self.eps}")

    @property
    def log_x(self) -> float:
        return math.log(self.x)

    @property
    def A(self) -> float:
        """Box kernel half-width, eps/(2*ell*log x); recomputed, never stored."""
        return self.eps / (2.0 * self.ell * self.log_x)

    @property
    def support(self) -> tuple[float, float]:
        h = self.eps / self.log_x
        return (0.5 - h, 1.0 + h)


def _phi(w: np.ndarray) -> np.ndarray:
    """(1 - exp(w)) / (-w) with the removable singularity handled by series."""
    w = np.asarray(w, dtype=complex)
    small = np.abs(w) < SERIES_THRESHOLD
    wsafe = np.where(small, 1.0, w)
    direct = (np.exp(wsafe) - 1.0) / wsafe
    series = 1.0 + w * (1 / 2 + w * (1 / 6 + w * (1 / 24 + w * (1 / 120 + w / 720))))
    return np.where(small, series, direct)


def laplace_transform(spec: WeightSpec, z: complex | np.ndarray) -> complex | np.ndarray:
    """Closed-form F(z); entire, conjugate-symmetric, F(0) = 1/2 + eps/log x."""
    scalar = np.isscalar(z) or (isinstance(z, np.ndarray) and z.ndim == 0)
    zz = np.asarray(z, dtype=complex)
    a2 = 2.0 * spec.A
    c1 = 0.5 + spec.ell * a2
    out = np.exp(-(1.0 + spec.ell * a2) * zz) * c1 * _phi(c1 * zz) * _phi(a2 * zz) ** spec.ell
    return complex(out) if scalar else out


@lru_cache(maxsize=64)
def _irwin_hall_coeffs(ell: int) -> tuple[float, ...]:
    fact = math.factorial(ell)
    return tuple((-1) ** k * math.comb(ell, k) / fact for k in range(ell + 1))


def _uniform_sum_cdf(s: np.ndarray, ell: int) -> np.ndarray:
    """CDF of a sum of ell iid Uniform[0,1] variables (piecewise polynomial)."""
    s = np.asarray(s, dtype=float)
    out = np.zeros_like(s)
    out[s >= ell] = 1.0
    mid = (s > 0) & (s < ell)
    if np.any(mid):
        sm = s[mid]
        acc = np.zeros_like(sm)
        for k, coef in enumerate(_irwin_hall_coeffs(ell)):
            acc += coef * np.maximum(sm - k, 0.0) ** ell
        out[mid] = acc
    return out


def weight_value(spec: WeightSpec, t: float | np.ndarray) -> float | np.ndarray:
    """The weight f(t): 1 on [1/2,1], 0 outside the support, smooth between.

    Evaluated in closed form as a difference of two convolution CDFs; for
    ell beyond the numerically safe range a grid convolution (linear
    interpolation between nodes) takes over.
    """
    if spec.ell > _MAX_CLOSED_FORM_ELL:
        return _weight_value_grid(spec, t)
    scalar = np.isscalar(t) or (isinstance(t, np.ndarray) and t.ndim == 0)
    tt = np.asarray(t, dtype=float)
    a2 = 2.0 * spec.A
    u1 = (tt - 0.5 + spec.ell * a2) / a2
    u2 = (tt - 1.0) / a2
    f = _uniform_sum_cdf(u1, spec.ell) - _uniform_sum_cdf(u2, spec.ell)
    f = np.clip(f, 0.0, 1.0)
    return float(f) if scalar else f


def _grid_samples(spec: WeightSpec, steps_per_kernel: int = 0) -> tuple[np.ndarray, np.ndarray]:
    """Iterated box-kernel convolution of the inner indicator on a uniform grid."""
    ell, A = spec.ell, spec.A
    k = steps_per_kernel or 2 * max(1, round(128 / ell))  # ~ step (eps/log x)/256
    h = 2.0 * A / k
    lo = 0.5 - 2 * ell * A - 2 * h
    hi = 1.0 + 2 * ell * A + 2 * h
    grid = lo + h * np.arange(int(round((hi - lo) / h)) + 1)
    g = ((grid >= 0.5 - ell * A) & (grid <= 1.0 + ell * A)).astype(float)
    kernel = np.full(k + 1, h / (2.0 * A))
    kernel[0] *= 0.5
    kernel[-1] *= 0.5
    for _ in range(ell):
        g = np.convolve(g, kernel, mode="same")
    return grid, np.clip(g, 0.0, 1.0)


def _weight_value_grid(spec: WeightSpec, t):
    scalar = np.isscalar(t) or (isinstance(t, np.ndarray) and t.ndim == 0)
    grid, g = _grid_samples(spec)
    f = np.interp(np.asarray(t, dtype=float), grid, g, left=0.0, right=0.0)
    return float(f) if scalar else f


def weight_breakpoints(spec: WeightSpec) -> np.ndarray:
    """Knots of the piecewise-polynomial weight, ascending."""
    a2 = 2.0 * spec.A
    left = 0.5 - spec.ell * a2 + a2 * np.arange(spec.ell + 1)
    right = 1.0 + a2 * np.arange(spec.ell + 1)
    return np.unique(np.concatenate((left, right)))


def laplace_transform_quadrature(spec: WeightSpec, z: complex, step: float = 1e-4) -> complex:
    """Numerical int f(t) exp(-z t) dt, the independent cross-check of F(z).

    Composite Simpson on each smooth piece between the convolution knots.
    """
    total = 0.0 + 0.0j
    knots = weight_breakpoints(spec)
    for a, b in zip(knots[:-1], knots[1:]):
        n = 2 * max(4, int(math.ceil((b - a) / (2.0 * step))))
        t = np.linspace(a, b, n + 1)
        v = weight_value(spec, t) * np.exp(-z * t)
        w = np.ones(n + 1)
        w[1:-1:2] = 4.0
        w[2:-1:2] = 2.0
        total += (b - a) / n / 3.0 * np.dot(w, v)
    return complex(total)


def check_decay_bound(spec: WeightSpec, s: complex, alpha: float) -> BoundReport:
    """Right-half-plane decay: for Re s > 0 and 0 <= alpha <= ell,

        |F(-s log x)| <= e^(sigma eps) x^sigma / (|s| log x)
                         * (1 + x^(-sigma/2)) * (2 ell/(eps |s|))^alpha.
    """
    s = complex(s)
    sigma = s.real
    if sigma <= 0:
        raise DomainError("decay bound requires Re{s} > 0")
    if not (0 <= alpha <= spec.ell):
        raise DomainError("need 0 <= alpha <= ell")
    lhs = abs(laplace_transform(spec, -s * spec.log_x))
    mod = abs(s)
    rhs = (math.exp(sigma * spec.eps) * spec.x ** sigma / (mod * spec.log_x)
           * (1.0 + spec.x ** (-sigma / 2.0))
           * (2.0 * spec.ell / (spec.eps * mod)) ** alpha)
    return BoundReport.compare(lhs, rhs, label="right-half-plane decay")


def check_growth_bound(spec: WeightSpec, s: complex) -> BoundReport:
    """Plain growth bound |F(-s log x)| <= e^(sigma eps) x^sigma for Re s > 0."""
    s = complex(s)
    if s.real <= 0:
        raise DomainError("growth bound requires Re{s} > 0")
    lhs = abs(laplace_transform(spec, -s * spec.log_x))
    rhs = math.exp(s.real * spec.eps) * spec.x ** s.real
    return BoundReport.compare(lhs, rhs, label="growth")


def check_real_axis_bound(spec: WeightSpec, sigma: float) -> BoundReport:
    """Real-axis bound F(-sigma log x) <= e^(sigma eps) x^sigma/(sigma log x)."""
    if sigma <= 0:
        raise DomainError("real-axis bound requires sigma > 0")
    value = laplace_transform(spec, complex(-sigma * spec.log_x))
    lhs = value.real
    rhs = math.exp(sigma * spec.eps) * spec.x ** sigma / (sigma * spec.log_x)
    return BoundReport.compare(lhs, rhs, label="real axis")


def check_left_line_bound(spec: WeightSpec, t: float) -> BoundReport:
    """Decay on the line s = -1/2 + it:

        |F(-s log x)| <= 5 x^(-1/4)/log x * (2 ell/eps)^ell * (1/4 + t^2)^(-ell/2).
    """
    s = complex(-0.5, t)
    lhs = abs(laplace_transform(spec, -s * spec.log_x))
    rhs = (5.0 * spec.x ** -0.25 / spec.log_x
           * (2.0 * spec.ell / spec.eps) ** spec.ell
           * (0.25 + t * t) ** (-spec.ell / 2.0))
    return BoundReport.compare(lhs, rhs, label="left line decay")
