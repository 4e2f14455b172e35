"""Integral geometry of convex bodies: kinematic formulas, contact measures and
the Hermitian additive kinematic formula for the surface area measure."""

__version__ = "0.1.0"
