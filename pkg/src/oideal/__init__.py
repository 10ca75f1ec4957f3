"""Exact graded commutative algebra: resolutions, Ext/Tor, canonical modules
and instance checks for order-ideal and canonical-element statements."""

__version__ = "0.1.0"

from .algebra import Field, PolyRing, Polynomial  # noqa: E402
from .errors import InputError, LiftError, OIdealError, ResourceLimitError, SearchExhaustedError  # noqa: E402
from .groebner import Ideal, colon, intersect  # noqa: E402
from .modsyz import FreeModule, GradedMap, Presentation, syzygies  # noqa: E402
from .resolution import betti_table, minimal_free_resolution  # noqa: E402

__all__ = [
    "__version__", "Field", "PolyRing", "Polynomial", "Ideal", "colon", "intersect",
    "FreeModule", "GradedMap", "Presentation", "syzygies", "betti_table", "minimal_free_resolution",
    "OIdealError", "InputError", "LiftError", "ResourceLimitError", "SearchExhaustedError",
]
