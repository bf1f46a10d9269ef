"""Backend selection for the divergence kernels.

Prefers the compiled extension, falls back to the pure-Python twin when it
is not built. Set CALLBRIEF_PURE_PYTHON=1 to force the fallback (used by
the benchmark and by tests that compare the two backends).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("CALLBRIEF_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

js_sparse = _impl.js_sparse
js_pairs = _impl.js_pairs


def backend_name() -> str:
    """Which kernel implementation is active: "compiled" or "python"."""
    return _impl.BACKEND_NAME
