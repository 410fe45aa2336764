"""
The standard arcsine law: density, closed-form moments and singularity-free quadrature.
"""

from .quadrature import (QuadratureSpec, arcsine_mass, arcsine_moment_closed,
                         arcsine_moment_quadrature, arcsine_pdf)

__all__ = [
    "QuadratureSpec",
    "arcsine_pdf",
    "arcsine_moment_closed",
    "arcsine_moment_quadrature",
    "arcsine_mass",
]
