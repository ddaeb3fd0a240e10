"""Backend selection for the multiplication-table kernels.

Prefers the compiled extension; falls back to the numpy lane when the
extension is missing or when ``BOCKSTEIN_PURE=1`` is set.  Everything
downstream imports ``impl`` and ``BACKEND`` from here.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("BOCKSTEIN_PURE"):
    impl = _kernels_py
    BACKEND = "numpy"
else:
    try:
        from . import _kernels_c as impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        impl = _kernels_py
        BACKEND = "numpy"


def backend_name() -> str:
    return BACKEND
