"""Numerical checks of contact forms and open-book compatibility.

Forms are given by coefficient functions in a coordinate chart and exterior
derivatives are taken by central finite differences.  On S^3 the chart is
polar, ``(rho1, theta1, rho2, theta2)``; angle coordinates are differenced
modulo 2 pi so that wrapped angles never produce spurious jumps.
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import NumericalBreakdown
from .lenslift import TWO_PI, LensParams, S3Point, angle_diff, zp_act

H_FIRST = 1e-5
H_NESTED = 1e-4
H_PAGE = 1e-6
T_MIN = 1e-3
DEFAULT_TOL = 1e-8

Coefficients = Callable[[Sequence[float]], Sequence[float]]

# polar-chart slots holding angles
_S3_ANGLE_SLOTS = (1, 3)


def default_tolerance() -> float:
    env = os.environ.get("LENSFIB_TOL")
    return float(env) if env else DEFAULT_TOL


@dataclass(frozen=True)
class SampledOneForm:
    dimension: int
    coefficients: Coefficients
    name: str = ""
    angle_slots: tuple[int, ...] = ()

    def __call__(self, point: Sequence[float]) -> np.ndarray:
        try:
            c = np.asarray(self.coefficients(point), dtype=float)
        except (ZeroDivisionError, OverflowError, ValueError) as exc:
            raise NumericalBreakdown(f"{self.name or 'form'} failed at {tuple(point)}: {exc}") from exc
        if c.shape != (self.dimension,):
            raise NumericalBreakdown(f"{self.name or 'form'} returned {c.shape} coefficients")
        if not np.all(np.isfinite(c)):
            raise NumericalBreakdown(f"{self.name or 'form'} is not finite at {tuple(point)}")
        return c

    def evaluate(self, point: Sequence[float], vector: Sequence[float]) -> float:
        return float(np.dot(self(point), vector))

    def scaled(self, factor: float) -> "SampledOneForm":
        coeffs = self.coefficients
        return SampledOneForm(self.dimension, lambda x: [factor * c for c in coeffs(x)],
                              f"{factor}*{self.name}", self.angle_slots)

    def __neg__(self) -> "SampledOneForm":
        return self.scaled(-1.0)


def standard_forms() -> dict[str, SampledOneForm]:
    """The standard form on R^3, its rotationally symmetric variant, and S^3's."""
    return {
        # dz + x dy
        "r3_standard": SampledOneForm(3, lambda p: (0.0, p[0], 1.0), "dz + x dy"),
        # dz + rho^2 dtheta = dz + x dy - y dx
        "r3_symmetric": SampledOneForm(3, lambda p: (-p[1], p[0], 1.0), "dz + x dy - y dx"),
        # rho1^2 dtheta1 + rho2^2 dtheta2
        "s3_standard": SampledOneForm(
            4, lambda p: (0.0, p[0] ** 2, 0.0, p[2] ** 2),
            "rho1^2 dtheta1 + rho2^2 dtheta2", _S3_ANGLE_SLOTS),
    }


def exterior_derivative(alpha: SampledOneForm, point: Sequence[float], h: float = H_FIRST) -> np.ndarray:
    """Antisymmetric matrix D with D[i, j] = d_i alpha_j - d_j alpha_i."""
    x = np.asarray(point, dtype=float)
    n = alpha.dimension
    jac = np.empty((n, n))
    for i in range(n):
        step = np.zeros(n)
        step[i] = h
        jac[i] = (alpha(x + step) - alpha(x - step)) / (2 * h)
    d = jac - jac.T
    if not np.all(np.isfinite(d)):
        raise NumericalBreakdown(f"non-finite derivative at {tuple(point)}")
    return d


def contact_volume_value(alpha: SampledOneForm, point: Sequence[float], h: float = H_FIRST) -> float:
    """(alpha ^ d alpha)(e1, e2, e3) for a form on R^3."""
    if alpha.dimension != 3:
        raise ValueError("contact volume is defined here for 3-dimensional charts")
    if h <= 0:
        raise ValueError("step must be positive")
    a = alpha(point)
    d = exterior_derivative(alpha, point, h)
    return float(a[0] * d[1, 2] + a[1] * d[2, 0] + a[2] * d[0, 1])


# --- pages of the Hopf open book ----------------------------------------------

@dataclass(frozen=True)
class PageParametrization:
    """A page (t, theta) -> S^3 of an open book, t in [0, 1]."""

    omega: float
    map: Callable[[float, float], S3Point]
    name: str = ""

    def __call__(self, t: float, theta: float) -> S3Point:
        return self.map(t, theta)


def hopf_page(omega: float, orientation: int = 1) -> PageParametrization:
    """Page theta1 + theta2 = omega of the fibration of S^3 minus z1 z2 = 0.

    ``orientation=-1`` reverses the fibre direction (theta -> -theta).
    """
    s = orientation

    def i_plus(t: float, theta: float) -> S3Point:
        return S3Point(math.sqrt(1.0 - t * t), omega - s * theta, t, s * theta)

    return PageParametrization(omega, i_plus, f"i+(omega={omega:g}, orientation={s:+d})")


def _chart_diff(a: Sequence[float], b: Sequence[float], angle_slots: Sequence[int]) -> np.ndarray:
    d = np.subtract(a, b, dtype=float)
    for k in angle_slots:
        d[k] = angle_diff(a[k], b[k])
    return d


def pullback_page(alpha: SampledOneForm, page: PageParametrization, t: float, theta: float,
                  h: float = H_PAGE) -> tuple[float, float]:
    """Coefficients ``(f_t, f_theta)`` of the pulled-back form in the (dt, dtheta) basis."""
    if not (0.0 < t - h and t + h < 1.0):
        raise NumericalBreakdown(f"t={t} too close to the page boundary for step {h}")
    x = page(t, theta).as_tuple()
    slots = alpha.angle_slots
    dx_dt = _chart_diff(page(t + h, theta).as_tuple(), page(t - h, theta).as_tuple(), slots) / (2 * h)
    dx_dth = _chart_diff(page(t, theta + h).as_tuple(), page(t, theta - h).as_tuple(), slots) / (2 * h)
    a = alpha(x)
    return float(np.dot(a, dx_dt)), float(np.dot(a, dx_dth))


def page_area_value(alpha: SampledOneForm, page: PageParametrization, t: float, theta: float,
                    h: float = H_NESTED) -> float:
    """dt ^ dtheta coefficient of d(pullback): d_t f_theta - d_theta f_t."""
    _, fth_plus = pullback_page(alpha, page, t + h, theta)
    _, fth_minus = pullback_page(alpha, page, t - h, theta)
    ft_plus, _ = pullback_page(alpha, page, t, theta + h)
    ft_minus, _ = pullback_page(alpha, page, t, theta - h)
    value = (fth_plus - fth_minus) / (2 * h) - (ft_plus - ft_minus) / (2 * h)
    if not math.isfinite(value):
        raise NumericalBreakdown(f"non-finite page area at t={t}, theta={theta}")
    return value


class BindingComponent(enum.Enum):
    Z1_ZERO = "Z1Zero"
    Z2_ZERO = "Z2Zero"


def binding_point(component: BindingComponent, theta: float) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """Chart point and oriented unit tangent of a Hopf binding circle."""
    if component is BindingComponent.Z1_ZERO:
        return (0.0, 0.0, 1.0, theta % TWO_PI), (0.0, 0.0, 0.0, 1.0)
    return (1.0, theta % TWO_PI, 0.0, 0.0), (0.0, 1.0, 0.0, 0.0)


def binding_value(alpha: SampledOneForm, component: BindingComponent, theta: float) -> float:
    # the polar chart degenerates on the binding; evaluate coefficients directly
    x, v = binding_point(component, theta)
    return alpha.evaluate(x, v)


# --- Z_p invariance -----------------------------------------------------------

def _random_tangent(rng: np.random.Generator, x: S3Point) -> np.ndarray:
    # radial part stays tangent to rho1^2 + rho2^2 = 1
    s, a1, a2 = rng.uniform(-1.0, 1.0, size=3)
    return np.array([-s * x.rho2, a1, s * x.rho1, a2])


def zp_invariance_defect(params: LensParams, sample_count: int = 200, seed: int = 0,
                         alpha: Optional[SampledOneForm] = None, h: float = 1e-3) -> float:
    """Max |alpha(zeta^n x)(d zeta^n v) - alpha(x)(v)| over random samples and n in [0, p)."""
    if params.p < 1:
        raise ValueError("need p >= 1")
    alpha = alpha or standard_forms()["s3_standard"]
    rng = np.random.default_rng(seed)
    slots = _S3_ANGLE_SLOTS
    worst = 0.0

    def pushed(n: int, x: S3Point, v: np.ndarray) -> tuple[tuple[float, ...], np.ndarray]:
        base = np.array(x.as_tuple())
        fwd = zp_act(params, n, _shift(base, h * v))
        bwd = zp_act(params, n, _shift(base, -h * v))
        return zp_act(params, n, x).as_tuple(), _chart_diff(fwd.as_tuple(), bwd.as_tuple(), slots) / (2 * h)

    for _ in range(sample_count):
        phi = rng.uniform(0.05, math.pi / 2 - 0.05)
        x = S3Point.from_angles(phi, rng.uniform(0, TWO_PI), rng.uniform(0, TWO_PI))
        v = _random_tangent(rng, x)
        x0, v0 = pushed(0, x, v)
        ref = alpha.evaluate(x0, v0)
        for n in range(params.p):
            xn, vn = pushed(n, x, v)
            worst = max(worst, abs(alpha.evaluate(xn, vn) - ref))
    return worst


def _shift(base: np.ndarray, delta: np.ndarray) -> S3Point:
    r1, r2 = base[0] + delta[0], base[2] + delta[2]
    # renormalise so the displaced chart point stays on S^3
    s = math.hypot(r1, r2)
    return S3Point(r1 / s, base[1] + delta[1], r2 / s, base[3] + delta[3])


# --- compatibility ----------------------------------------------------------

@dataclass(frozen=True)
class CompatibilityReport:
    min_page_area_value: float
    min_binding_value: float
    sample_count: int
    tolerance: float
    verdict: bool
    threshold: float = field(default=0.0)

    def to_dict(self, digits: int = 10) -> dict:
        return {
            "min_page_area_value": round(self.min_page_area_value, digits),
            "min_binding_value": round(self.min_binding_value, digits),
            "sample_count": self.sample_count,
            "tolerance": self.tolerance,
            "threshold": round(self.threshold, digits),
            "verdict": self.verdict,
        }


def check_supports(alpha: SampledOneForm,
                   pages: Callable[[float], PageParametrization] = hopf_page,
                   bindings: Sequence[BindingComponent] = tuple(BindingComponent),
                   grid: tuple[int, int, int] = (50, 50, 3),
                   tol: Optional[float] = None,
                   t_min: float = T_MIN) -> CompatibilityReport:
    """Sample d alpha on pages and alpha on the binding.

    The positivity threshold is ``tol`` scaled by the largest sampled
    magnitude (at least 1), so it tracks the size of the form.
    """
    n_t, n_th, n_om = grid
    if min(grid) < 2:
        raise ValueError("every grid dimension must be at least 2")
    tol = default_tolerance() if tol is None else tol
    ts = np.linspace(t_min, 1.0 - t_min, n_t)
    thetas = np.linspace(0.0, TWO_PI, n_th, endpoint=False)
    omegas = np.linspace(0.0, TWO_PI, n_om, endpoint=False)
    areas = [page_area_value(alpha, pages(float(om)), float(t), float(th))
             for om in omegas for t in ts for th in thetas]
    binds = [binding_value(alpha, comp, float(th)) for comp in bindings for th in thetas]
    scale = max(1.0, max(abs(v) for v in areas + binds))
    threshold = tol * scale
    min_area = min(areas)
    min_bind = min(binds)
    return CompatibilityReport(
        min_page_area_value=min_area,
        min_binding_value=min_bind,
        sample_count=len(areas) + len(binds),
        tolerance=tol,
        verdict=bool(min_area > threshold and min_bind > threshold),
        threshold=threshold,
    )
