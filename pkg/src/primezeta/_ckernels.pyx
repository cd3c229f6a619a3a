# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops.

Signatures mirror ``_pykernels`` exactly; ``_backend`` picks one at import.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport floor, sqrt, exp, log, cos, sin

cnp.import_array()


cdef inline double _sgn(double a) noexcept nogil:
    if a > 0.0:
        return 1.0
    if a < 0.0:
        return -1.0
    return 0.0


cdef inline double _omega0(double u) noexcept nogil:
    cdef double s0 = _sgn(u)
    cdef double s1 = _sgn(u - 1.0)
    return s0 * s0 * s1 * s1 * (1.0 - _sgn(u - floor(u)))


cdef int _lambda_literal(double u) noexcept nogil:
    # full double product over the closed-form bounds, no early exit
    cdef double prod = _omega0(u)
    cdef long h1 = 1 + <long>floor(u / 2.0)
    cdef long m, n, h2
    cdef double f1, f2, odd_m
    for m in range(2, h1 + 1):
        odd_m = 2.0 * m - 1.0
        h2 = 1 + <long>floor((u + odd_m) / (2.0 * odd_m))
        f1 = _sgn(u - 2.0 * m)
        f1 = f1 * f1
        for n in range(2, h2 + 1):
            f2 = _sgn(u - odd_m * (2.0 * n - 1.0))
            prod = prod * f1 * f2 * f2
    return <int>prod


cdef int _lambda_optimized(double u) noexcept nogil:
    if _omega0(u) == 0.0:
        return 0
    cdef long v = <long>u
    cdef long d, root
    if v % 2 == 0:
        # Omega1 vanishes at m = v/2 for every even v >= 4
        return 1 if v == 2 else 0
    root = <long>sqrt(<double>v)
    while root * root > v:
        root -= 1
    while (root + 1) * (root + 1) <= v:
        root += 1
    d = 3
    while d <= root:
        # Omega2 vanishes iff v = d * (2n - 1) with 2n - 1 >= 3
        if v % d == 0:
            return 0
        d += 2
    return 1


def lambda_literal(double u):
    return _lambda_literal(u)


def lambda_optimized(double u):
    return _lambda_optimized(u)


def lambda_range(long lo, long hi, bint optimized):
    """Indicator values for the integers lo..hi inclusive."""
    cdef long size = hi - lo + 1 if hi >= lo else 0
    out = np.zeros(size, dtype=np.int8)
    cdef cnp.int8_t[::1] view = out
    cdef long i
    with nogil:
        for i in range(size):
            if optimized:
                view[i] = _lambda_optimized(<double>(lo + i))
            else:
                view[i] = _lambda_literal(<double>(lo + i))
    return out


def eta_sums(const double[::1] sigma, const double[::1] tau, const double[::1] weights,
             bint compensated):
    """Sum_{n=1}^{N} weights[n-1] * n**(-s) for each s = sigma[k] + i tau[k].

    Summation runs in ascending n. With ``compensated`` each component uses
    Kahan summation.
    """
    cdef Py_ssize_t npts = sigma.shape[0]
    cdef Py_ssize_t nterms = weights.shape[0]
    re_out = np.empty(npts, dtype=np.float64)
    im_out = np.empty(npts, dtype=np.float64)
    cdef double[::1] re_v = re_out
    cdef double[::1] im_v = im_out
    cdef Py_ssize_t k, j
    cdef double ln_n, mag, phase, w, tr, ti, sr, si, cr, ci, y, t
    with nogil:
        for k in range(npts):
            sr = 0.0
            si = 0.0
            cr = 0.0
            ci = 0.0
            for j in range(nterms):
                w = weights[j]
                if w == 0.0:
                    continue
                ln_n = log(<double>(j + 1))
                mag = w * exp(-sigma[k] * ln_n)
                phase = tau[k] * ln_n
                tr = mag * cos(phase)
                ti = -mag * sin(phase)
                if compensated:
                    y = tr - cr
                    t = sr + y
                    cr = (t - sr) - y
                    sr = t
                    y = ti - ci
                    t = si + y
                    ci = (t - si) - y
                    si = t
                else:
                    sr = sr + tr
                    si = si + ti
            re_v[k] = sr
            im_v[k] = si
    return re_out, im_out
