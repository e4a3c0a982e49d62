"""Exact base-norm / order-unit space constructions and their duality.

Everything is computed over :class:`fractions.Fraction`; there is no
floating-point path outside of SVG rendering.
"""

from fractions import Fraction

from basenorm.errors import BasenormError

__all__ = ["Fraction", "BasenormError"]
__version__ = "0.1.0"
