"""Type II Z4-code lifts of binary doubly even self-dual codes.

Builds the generator-matrix lift (A1 | tilde + 2 A2) of a binary doubly
even self-dual code, searches the free entries of A2 for extremal Type II
codes, and certifies extremality exactly through the minimum norm of the
Construction A4 lattice.
"""

from ._kernels import BACKEND as kernel_backend
from .codes import builtin
from .errors import Z4LiftError
from .gf2 import BinaryCode, BitMatrix
from .lattice import LatticeBasis, SvpResult, certify_extremal, construction_a4, lll, shortest_vectors
from .lifter import FreeBits, LiftTemplate, SearchConfig, SearchReport, lift, search_extremal
from .z4 import Z4Code, Z4Vector, euclidean_bound, euclidean_weight

__version__ = "0.1.0"

__all__ = [
    "BinaryCode",
    "BitMatrix",
    "FreeBits",
    "LatticeBasis",
    "LiftTemplate",
    "SearchConfig",
    "SearchReport",
    "SvpResult",
    "Z4Code",
    "Z4LiftError",
    "Z4Vector",
    "builtin",
    "certify_extremal",
    "construction_a4",
    "euclidean_bound",
    "euclidean_weight",
    "kernel_backend",
    "lift",
    "lll",
    "search_extremal",
    "shortest_vectors",
    "__version__",
]
