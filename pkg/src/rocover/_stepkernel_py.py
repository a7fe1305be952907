"""Pure-numpy fallback for the compiled step kernels.

Same contract as ``_stepkernel.pyx``. Bisection and tolerances are identical;
results can differ from the compiled kernels only by float rounding in the
last bits (summation order, vectorized exp).
"""

import numpy as np

SUM_TOL = 1e-12
MAX_ITERS = 200
FLOOR = 1e-300


def project_capped(point, caps):
    """Entropy (unnormalized-KL) projection onto {0 <= x <= caps, sum x <= 1}."""
    point = np.asarray(point, dtype=np.float64)
    caps = np.asarray(caps, dtype=np.float64)

    lam = 0.0
    if float(np.minimum(point, caps).sum()) > 1.0:
        lo = 0.0
        hi = float(np.log(point.sum())) + 30.0
        lam = hi
        for _ in range(MAX_ITERS):
            mid = 0.5 * (lo + hi)
            s = float(np.minimum(point * np.exp(-mid), caps).sum())
            if abs(s - 1.0) <= SUM_TOL:
                lam = mid
                break
            if s > 1.0:
                lo = mid
            else:
                hi = mid
                lam = hi

    out = np.minimum(point * np.exp(-lam), caps)
    np.maximum(out, FLOOR, out=out)
    return out


def omd_step(coords, caps, gscaled, eta):
    """One mirror-descent gain step: coords * e^{eta * g}, then project."""
    coords = np.asarray(coords, dtype=np.float64)
    tilde = coords * np.exp(eta * np.asarray(gscaled, dtype=np.float64))
    return project_capped(tilde, caps)
