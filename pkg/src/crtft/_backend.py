"""Pick the compiled kernels when available.

Set ``CRTFT_PURE_PYTHON=1`` to force the NumPy fallback.
"""

import os

from . import _pykernels

python_kernels = _pykernels
compiled_kernels = None

try:
    from . import _kernels as compiled_kernels
except ImportError:  # extension not built
    pass

if compiled_kernels is not None and not os.environ.get("CRTFT_PURE_PYTHON"):
    kernels = compiled_kernels
    BACKEND = "compiled"
else:
    kernels = python_kernels
    BACKEND = "python"
