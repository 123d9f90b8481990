"""mahlerlab: a desk-scale laboratory around Mahler measures, torsion-point
averages of log|P|, periodic-point counts of algebraic Z^d-actions,
torsion homology of abelian covers, and the small-height auxiliary
construction that powers the underlying Diophantine bound.
"""

__version__ = "0.1.0"

from .laurent import LaurentPoly, UniPoly
from .torsion import TorsionPoint

__all__ = [
    "LaurentPoly",
    "UniPoly",
    "TorsionPoint",
    "__version__",
]
