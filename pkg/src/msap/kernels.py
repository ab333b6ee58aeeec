"""Backend selection for the hot counting loops.

The compiled extension is used when importable; setting the environment
variable ``MSAP_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

import os

from . import _pykernels

python_backend = _pykernels

if os.environ.get("MSAP_PURE_PYTHON", "") not in ("", "0"):
    compiled_backend = None
else:
    try:
        from . import _kernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

backend = compiled_backend or python_backend
BACKEND = "compiled" if compiled_backend is not None else "python"

place = backend.place
count_cycle_covers = backend.count_cycle_covers
