"""
The standard arcsine law on (-√2, √2): density, closed-form moments and quadrature.

Substituting x = √2·sin θ turns the singular moment integral into
(√2)^m/π · ∫_{-π/2}^{π/2} sin^m θ dθ, which composite Gauss-Legendre panels handle
to machine precision.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

import numpy as np

from ..combinatorics.counting import double_factorial
from ..exceptions import ConvergenceError, DomainError, InvalidInputError

logger = logging.getLogger(__name__)

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class QuadratureSpec:
    """Panel schedule and absolute tolerance for moment quadrature."""

    panel_count: int = 64
    tolerance: float = 1e-10
    max_panels: int = 2 ** 14
    nodes_per_panel: int = 8

    def __post_init__(self):
        errors = []
        if self.panel_count < 2:
            errors.append(f"panel_count must be at least 2, got {self.panel_count}")
        if not self.tolerance > 0:
            errors.append(f"tolerance must be positive, got {self.tolerance}")
        if self.max_panels < self.panel_count:
            errors.append(f"max_panels {self.max_panels} is below panel_count {self.panel_count}")
        if self.nodes_per_panel < 1:
            errors.append(f"nodes_per_panel must be positive, got {self.nodes_per_panel}")
        if errors:
            raise InvalidInputError("Invalid quadrature settings", errors=errors)


@lru_cache(maxsize=None)
def _gauss_legendre(nodes: int) -> Tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(nodes)


def arcsine_pdf(x: float) -> float:
    """1 / (π·√(2 - x²)) on the open interval (-√2, √2).

    Raises:
        DomainError: If |x| >= √2.
    """
    gap = 2.0 - x * x
    if not gap > 0:
        raise DomainError(f"Arcsine density is undefined at x={x}; support is (-√2, √2)")
    return 1.0 / (math.pi * math.sqrt(gap))


def arcsine_moment_closed(m: int) -> Fraction:
    """Exact m-th moment: 0 for odd m, (2k-1)!!/k! for m = 2k."""
    if m < 0:
        raise InvalidInputError(f"Moment order must be nonnegative, got {m}")
    if m % 2:
        return Fraction(0)
    k = m // 2
    return Fraction(double_factorial(2 * k - 1), math.factorial(k))


def _composite_sine_power(m: int, panels: int, nodes: int) -> float:
    """∫_{-π/2}^{π/2} sin^m θ dθ on `panels` equal Gauss-Legendre panels."""
    points, weights = _gauss_legendre(nodes)
    edges = np.linspace(-math.pi / 2, math.pi / 2, panels + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    theta = mid[:, None] + half[:, None] * points[None, :]
    contributions = half[:, None] * weights[None, :] * np.sin(theta) ** m
    # fsum over a fixed row-major order keeps results bit-reproducible.
    return math.fsum(contributions.ravel().tolist())


def arcsine_moment_quadrature(m: int, spec: QuadratureSpec = QuadratureSpec()) -> float:
    """(1/π) ∫_{-√2}^{√2} x^m / √(2 - x²) dx, refined by panel doubling.

    Raises:
        ConvergenceError: If successive estimates still differ by more than the
            tolerance when max_panels is reached.
    """
    if m < 0:
        raise InvalidInputError(f"Moment order must be nonnegative, got {m}")
    scale = SQRT2 ** m / math.pi
    panels = spec.panel_count
    estimate = scale * _composite_sine_power(m, panels, spec.nodes_per_panel)
    error_bound = math.inf
    while panels * 2 <= spec.max_panels:
        panels *= 2
        refined = scale * _composite_sine_power(m, panels, spec.nodes_per_panel)
        error_bound = abs(refined - estimate)
        estimate = refined
        logger.debug(f"m={m}: {panels} panels, estimate {estimate!r}, change {error_bound:.3e}")
        if error_bound <= spec.tolerance:
            return estimate
    raise ConvergenceError(
        f"Moment {m} quadrature did not reach tolerance {spec.tolerance}",
        estimate=estimate, error_bound=error_bound, panels=panels,
    )


def arcsine_mass(spec: QuadratureSpec = QuadratureSpec()) -> float:
    """Total probability mass by quadrature."""
    return arcsine_moment_quadrature(0, spec)
