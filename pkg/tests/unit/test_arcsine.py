"""
Unit tests for the arcsine law.
"""

import math
from fractions import Fraction

import pytest

from src.monotone_clt.arcsine.quadrature import (QuadratureSpec, arcsine_mass,
                                                 arcsine_moment_closed, arcsine_moment_quadrature,
                                                 arcsine_pdf)
from src.monotone_clt.exceptions import ConvergenceError, DomainError, InvalidInputError
from src.monotone_clt.moment_engine.limits import limit_moment


class TestArcsineDensity:
    def test_value_at_zero(self):
        assert arcsine_pdf(0.0) == pytest.approx(1 / (math.pi * math.sqrt(2)))

    def test_symmetric(self):
        assert arcsine_pdf(0.7) == arcsine_pdf(-0.7)

    @pytest.mark.parametrize("x", [math.sqrt(2), -2.0, 5.0])
    def test_outside_open_support(self, x):
        with pytest.raises(DomainError):
            arcsine_pdf(x)


class TestClosedForm:
    def test_values(self):
        assert [arcsine_moment_closed(m) for m in range(0, 9, 2)] == [
            1, 1, Fraction(3, 2), Fraction(5, 2), Fraction(35, 8)]

    @pytest.mark.parametrize("m", range(17))
    def test_equals_monotone_limit(self, m):
        assert arcsine_moment_closed(m) == limit_moment(m, "monotone")

    def test_negative_order(self):
        with pytest.raises(InvalidInputError):
            arcsine_moment_closed(-1)


class TestQuadrature:
    """Test cases for arcsine_moment_quadrature."""

    @pytest.mark.parametrize("m", range(0, 13, 2))
    def test_even_moments(self, m):
        assert abs(arcsine_moment_quadrature(m) - float(arcsine_moment_closed(m))) < 1e-8

    @pytest.mark.parametrize("m", range(1, 13, 2))
    def test_odd_moments_vanish(self, m):
        assert abs(arcsine_moment_quadrature(m)) <= 1e-12

    def test_total_mass(self):
        assert abs(arcsine_mass() - 1.0) <= 1e-10

    def test_deterministic(self):
        spec = QuadratureSpec(panel_count=16)
        assert arcsine_moment_quadrature(10, spec) == arcsine_moment_quadrature(10, spec)

    def test_unreachable_tolerance(self):
        # No room to double the panel count, so no error estimate exists.
        spec = QuadratureSpec(panel_count=2, max_panels=2)
        with pytest.raises(ConvergenceError) as exc_info:
            arcsine_moment_quadrature(6, spec)
        assert exc_info.value.panels == 2
        assert exc_info.value.error_bound == math.inf

    @pytest.mark.parametrize("kwargs", [
        {"panel_count": 1},
        {"tolerance": 0.0},
        {"panel_count": 64, "max_panels": 32},
    ])
    def test_invalid_spec(self, kwargs):
        with pytest.raises(InvalidInputError):
            QuadratureSpec(**kwargs)
