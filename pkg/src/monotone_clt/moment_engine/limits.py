"""
Central limit moments for the four independence classes.
"""

from fractions import Fraction
from math import factorial
from typing import Union

from ..combinatorics.counting import catalan, double_factorial
from ..combinatorics.models import IndependenceClass
from ..exceptions import InvalidInputError
from .models import LimitMoments


def limit_moment(m: int, independence: Union[IndependenceClass, str]) -> Fraction:
    """M_m of the class's central limit law.

    Odd orders vanish. For m = 2k: monotone (2k-1)!!/k! (arcsine), commutative
    (2k-1)!! (Gaussian), free Catalan(k) (semicircle), boolean 1 (Bernoulli).
    """
    if m < 0:
        raise InvalidInputError(f"Moment order must be nonnegative, got {m}")
    try:
        independence = IndependenceClass(independence)
    except ValueError:
        raise InvalidInputError(f"Unknown independence class: {independence}")
    if m % 2:
        return Fraction(0)

    k = m // 2
    if independence is IndependenceClass.MONOTONE:
        return Fraction(double_factorial(2 * k - 1), factorial(k))
    if independence is IndependenceClass.COMMUTATIVE:
        return Fraction(double_factorial(2 * k - 1))
    if independence is IndependenceClass.FREE:
        return Fraction(catalan(k))
    return Fraction(1)


def limit_moments(independence: Union[IndependenceClass, str], max_order: int) -> LimitMoments:
    """M_0..M_max_order as a LimitMoments table."""
    if max_order < 0:
        raise InvalidInputError(f"max_order must be nonnegative, got {max_order}")
    values = tuple(limit_moment(m, independence) for m in range(max_order + 1))
    return LimitMoments(independence=IndependenceClass(independence), values=values)
