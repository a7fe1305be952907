"""Backend selection for the hot step kernels.

Prefers the compiled extension; falls back to the numpy implementation when
the extension is missing (e.g. a source checkout without a build step).
Set ROCOVER_PURE=1 to force the fallback, mainly for benchmarks and parity
tests.
"""

import os

if os.environ.get("ROCOVER_PURE"):
    from . import _stepkernel_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _stepkernel as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _stepkernel_py as _impl

        BACKEND = "python"

project_capped = _impl.project_capped
omd_step = _impl.omd_step
