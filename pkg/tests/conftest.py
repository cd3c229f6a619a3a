"""Independent oracles shared by the test modules."""
import math

import mpmath
import numpy as np
import pytest

from primezeta import _backend


def sieve(n):
    """Boolean primality table for 0..n (Eratosthenes)."""
    is_p = np.ones(n + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if is_p[p]:
            is_p[p * p :: p] = False
    return is_p


def li_oracle(x):
    """Offset logarithmic integral from 2, via mpmath."""
    return float(mpmath.li(x) - mpmath.li(2))


def eta_zeta_oracle(sigma, tau, n_max):
    """Truncated eta-series zeta, summed in mpmath at 30 digits."""
    with mpmath.workdps(30):
        s = mpmath.mpc(sigma, tau)
        acc = mpmath.fsum((-1) ** (n - 1) * mpmath.power(n, -s) for n in range(1, n_max + 1))
        return complex(acc / (1 - mpmath.power(2, 1 - s)))


def psi_oracle(x):
    """Chebyshev psi from the sieve: sum of ln p over prime powers <= x."""
    x = math.floor(x)
    total = 0.0
    for p in np.flatnonzero(sieve(x)):
        pk = int(p)
        while pk <= x:
            total += math.log(p)
            pk *= int(p)
    return total


@pytest.fixture(params=sorted(_backend.BACKENDS))
def kernels(request):
    return _backend.get(request.param)
