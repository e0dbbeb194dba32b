"""Nearly modular covers of punctured hyperbolic surfaces.

Builds finite unbranched covers with near-zero shear coordinates from a base
ideal triangulation, evaluates Weil-Petersson distance upper bounds, and
verifies the supporting geometry and measure decompositions by closed-form
checks and Monte Carlo over the unit tangent bundle.
"""

__version__ = "0.1.0"
