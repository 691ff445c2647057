"""Exact dimension data for Hochschild homology and cohomology.

Covers hypersurfaces, their semiorthogonal components, and categories of
group invariants.
"""

from hhcalc.errors import HHCalcError
from hhcalc.gradedvec import GradedDims, GradedInterval
from hhcalc.hodge import HodgeDiamond, VarietySpec

__version__ = "0.1.0"

__all__ = ["GradedDims", "GradedInterval", "HHCalcError", "HodgeDiamond", "VarietySpec"]
