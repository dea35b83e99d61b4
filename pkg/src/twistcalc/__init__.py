"""Exact calculators for twist families of knots: braid algebra, Laurent
polynomial pipelines, genus growth laws, and L-space surgery criteria."""

from .braidcore import BraidWord, garside_elements, normal_form_equal
from .laurent import MultiLaurent, format_poly, parse_poly
from .lspace import Slope
from .twistfam import TwistFamilySpec

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "MultiLaurent",
    "Slope",
    "TwistFamilySpec",
    "format_poly",
    "garside_elements",
    "normal_form_equal",
    "parse_poly",
    "__version__",
]
