"""Torsion of Mordell curves y^2 = x^3 + c over number fields."""

from ._core import (
    EllipticError,
    NumberFieldError,
    classify,
    division_polynomial,
    factor,
    orbits,
    torsion,
    torsion_long,
    verify_paper,
)

__all__ = [
    "EllipticError",
    "NumberFieldError",
    "classify",
    "division_polynomial",
    "factor",
    "orbits",
    "torsion",
    "torsion_long",
    "verify_paper",
]
