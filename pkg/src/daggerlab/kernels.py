"""Kernel backend selection.

Imports the compiled quaternion product if it was built, otherwise the
numpy fallback.  Set DAGGERLAB_PURE_PYTHON=1 to force the fallback, e.g.
for benchmarking the two against each other.
"""

import os

if os.environ.get("DAGGERLAB_PURE_PYTHON"):
    from ._quatmul_py import quat_matmul

    BACKEND = "python"
else:
    try:
        from ._quatmul import quat_matmul  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from ._quatmul_py import quat_matmul  # type: ignore[no-redef]

        BACKEND = "python"

__all__ = ["quat_matmul", "BACKEND"]
