"""F-free colourings of Cartesian products built from k-multiplicative Sidon sets."""

__version__ = "0.1.0"

from ._budget import BudgetExceeded  # noqa: E402
from .graphs import Graph, ProductGraph, cartesian_product  # noqa: E402
from .sidon import SidonSet  # noqa: E402

__all__ = ["BudgetExceeded", "Graph", "ProductGraph", "SidonSet", "cartesian_product", "__version__"]
