"""Hot-kernel dispatch: the compiled extension when built, numpy otherwise.

Set ``WALLED_PURE_PYTHON=1`` to force the numpy fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels
if os.environ.get("WALLED_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

basis_permutation = _impl.basis_permutation
scatter_blocks = _impl.scatter_blocks
grid_min_eig = _impl.grid_min_eig


def compiled():
    """The compiled module, or ``None`` if it was not built."""
    try:
        from . import _ckernels
    except ImportError:
        return None
    return _ckernels
