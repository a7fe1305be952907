# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels for the mirror-descent learner.

Both kernels here are called once per online step; at the acceptance-suite
scale that is millions of invocations, which is why they live in a C loop
rather than numpy. A pure-python fallback with the same signatures lives in
``_stepkernel_py``; ``rocover.kernels`` picks one at import time.
"""

import numpy as np

from libc.math cimport exp, fabs, log

DEF SUM_TOL = 1e-12
DEF MAX_ITERS = 200
DEF FLOOR = 1e-300


cdef double _capped_sum(double[::1] point, double[::1] caps, double lam) noexcept:
    cdef Py_ssize_t i, d = point.shape[0]
    cdef double s = 0.0, v, scale = exp(-lam)
    for i in range(d):
        v = point[i] * scale
        if v > caps[i]:
            v = caps[i]
        s += v
    return s


def project_capped(double[::1] point, double[::1] caps):
    """Entropy (unnormalized-KL) projection onto {0 <= x <= caps, sum x <= 1}.

    KKT form: x_i = min(caps_i, point_i * e^{-lam}) for the smallest lam >= 0
    with sum(x) <= 1, found by bisection to SUM_TOL on the sum constraint.
    Outputs are floored at 1e-300 so downstream logarithms stay finite.
    """
    cdef Py_ssize_t i, d = point.shape[0]
    cdef double total = 0.0
    out = np.empty(d, dtype=np.float64)
    cdef double[::1] o = out

    for i in range(d):
        total += point[i]

    cdef double lam = 0.0
    cdef double s = _capped_sum(point, caps, 0.0)
    cdef double lo, hi, mid
    cdef int it
    if s > 1.0:
        lo = 0.0
        hi = log(total) + 30.0
        lam = hi
        for it in range(MAX_ITERS):
            mid = 0.5 * (lo + hi)
            s = _capped_sum(point, caps, mid)
            if fabs(s - 1.0) <= SUM_TOL:
                lam = mid
                break
            if s > 1.0:
                lo = mid
            else:
                hi = mid
                lam = hi

    cdef double v, scale = exp(-lam)
    for i in range(d):
        v = point[i] * scale
        if v > caps[i]:
            v = caps[i]
        if v < FLOOR:
            v = FLOOR
        o[i] = v
    return out


def omd_step(double[::1] coords, double[::1] caps, double[::1] gscaled, double eta):
    """One mirror-descent gain step: coords * e^{eta * g}, then project."""
    cdef Py_ssize_t i, d = coords.shape[0]
    tilde = np.empty(d, dtype=np.float64)
    cdef double[::1] t = tilde
    for i in range(d):
        t[i] = coords[i] * exp(eta * gscaled[i])
    return project_capped(t, caps)
