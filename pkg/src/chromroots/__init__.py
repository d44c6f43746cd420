"""Exact chromatic polynomials, graph families and zero-free interval certificates."""

__version__ = "0.1.0"

from .graph import Graph  # noqa: E402
from .poly import IntPolynomial, RootInterval  # noqa: E402

__all__ = ["Graph", "IntPolynomial", "RootInterval", "__version__"]
