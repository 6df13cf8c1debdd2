"""Backend selection for the hot kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module with identical contracts is imported.  ``BACKEND`` names the one in
use.
"""

try:
    from ._ckernels import map_binary, map_unary, truth_mask, witness_scan

    BACKEND = "cython"
except ImportError:  # extension not built
    from ._pykernels import map_binary, map_unary, truth_mask, witness_scan

    BACKEND = "python"

__all__ = ["BACKEND", "map_unary", "map_binary", "truth_mask", "witness_scan"]
