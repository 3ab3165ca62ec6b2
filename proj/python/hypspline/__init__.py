"""Tension-spline interpolation.

Thin re-export of the compiled extension: fitting entry points for the
order-1 and order-2 hyperbolic/tanh families, Hermite and cubic references,
shape-preservation tools, and the stability kernels.
"""

from _hypspline import *  # noqa: F401,F403
