"""Motivic superpolynomials, L-functions and DAHA-Jones polynomials of plane curve singularities."""

__version__ = "0.1.0"

from .exactalg import ExactPoly, parse  # noqa: E402
from .semigroup import CableData, NumSemigroup  # noqa: E402
from .superpoly import Fixture, Superpolynomial, load_fixtures  # noqa: E402

__all__ = ["ExactPoly", "parse", "CableData", "NumSemigroup", "Fixture", "Superpolynomial",
           "load_fixtures", "__version__"]
