"""Exact irreducibility certificates for twisted generalized Laguerre polynomials."""

from .polys import AlphaParam, IntPoly, RatPoly, build_g, build_psi, build_script_L
from .polygon import NewtonPolygon, newton_polygon

__version__ = "0.1.0"

__all__ = [
    "AlphaParam", "IntPoly", "RatPoly", "build_g", "build_psi", "build_script_L",
    "NewtonPolygon", "newton_polygon",
]
