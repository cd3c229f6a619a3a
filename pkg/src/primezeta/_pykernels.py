"""Pure-Python/numpy fallback for the compiled kernels in ``_ckernels.pyx``."""
import math

import numpy as np


def _sgn(a):
    return (a > 0) - (a < 0)


def _omega0(u):
    s0 = _sgn(u)
    s1 = _sgn(u - 1.0)
    return s0 * s0 * s1 * s1 * (1 - _sgn(u - math.floor(u)))


def lambda_literal(u):
    u = float(u)
    prod = float(_omega0(u))
    h1 = 1 + math.floor(u / 2.0)
    if h1 < 2:
        return int(prod)
    m = np.arange(2, h1 + 1, dtype=np.float64)
    odd_m = 2.0 * m - 1.0
    h2 = 1 + np.floor((u + odd_m) / (2.0 * odd_m))
    counts = np.maximum(h2 - 1, 0).astype(np.int64)
    total = int(counts.sum())
    if total == 0:
        return int(prod)
    # flatten the ragged (m, n) index set: n runs 2..h2(u, m) for each m
    m_rep = np.repeat(m, counts)
    odd_rep = np.repeat(odd_m, counts)
    starts = np.repeat(np.cumsum(counts) - counts, counts)
    n = 2.0 + (np.arange(total) - starts)
    f1 = np.sign(u - 2.0 * m_rep) ** 2
    f2 = np.sign(u - odd_rep * (2.0 * n - 1.0)) ** 2
    return int(prod * np.prod(f1 * f2))


def lambda_optimized(u):
    u = float(u)
    if _omega0(u) == 0:
        return 0
    v = int(u)
    if v % 2 == 0:
        return 1 if v == 2 else 0
    root = math.isqrt(v)
    for d in range(3, root + 1, 2):
        if v % d == 0:
            return 0
    return 1


def lambda_range(lo, hi, optimized):
    """Indicator values for the integers lo..hi inclusive."""
    fn = lambda_optimized if optimized else lambda_literal
    size = max(hi - lo + 1, 0)
    out = np.zeros(size, dtype=np.int8)
    for i in range(size):
        out[i] = fn(lo + i)
    return out


def eta_sums(sigma, tau, weights, compensated):
    """Sum_{n=1}^{N} weights[n-1] * n**(-s), vectorized over points, ascending in n."""
    sigma = np.ascontiguousarray(sigma, dtype=np.float64)
    tau = np.ascontiguousarray(tau, dtype=np.float64)
    weights = np.ascontiguousarray(weights, dtype=np.float64)
    sr = np.zeros_like(sigma)
    si = np.zeros_like(sigma)
    cr = np.zeros_like(sigma)
    ci = np.zeros_like(sigma)
    for j, w in enumerate(weights):
        if w == 0.0:
            continue
        ln_n = math.log(j + 1)
        mag = w * np.exp(-sigma * ln_n)
        phase = tau * ln_n
        tr = mag * np.cos(phase)
        ti = -mag * np.sin(phase)
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
    return sr, si
