"""Truncated Dirichlet sum and Euler products for real sigma > 1."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import prime_core
from .errors import DomainError


@dataclass(frozen=True)
class EulerConfig:
    sigma: float
    H: int
    q_max: int

    @classmethod
    def build(cls, sigma, H):
        _check(sigma, H)
        return cls(float(sigma), int(H), prime_core.nth_prime(H))


def _check(sigma, H=1):
    if not sigma > 1:
        raise DomainError(f"the real series needs sigma > 1, got {sigma}")
    if H < 1:
        raise DomainError(f"H must be >= 1, got {H}")


def xi_sum(sigma, N: int):
    """sum_{n=1}^{N} n**-sigma (correctly rounded via fsum)."""
    _check(sigma, N)
    n = np.arange(1, N + 1, dtype=np.float64)
    return math.fsum(n ** (-float(sigma)))


def xi_product_primes(sigma, H: int):
    """prod_{j=1}^{H} P(j)**sigma / (P(j)**sigma - 1), multiplied left to right."""
    _check(sigma, H)
    prod = 1.0
    for j in range(1, H + 1):
        ps = float(prime_core.nth_prime(j)) ** sigma
        prod *= ps / (ps - 1.0)
    return prod


def xi_eulap(sigma, H: int, mode=prime_core.Mode.OPTIMIZED):
    """Product over every integer q = 2..P(H); primes contribute Euler factors, the rest 1.

    Each factor is decided from the discriminator and generator alone: for
    Lambda(q) = 1 it is Psi(q)**sigma / (Psi(q)**sigma - 1), otherwise 1.
    """
    _check(sigma, H)
    q_max = prime_core.nth_prime(H)
    flags = prime_core.discriminate_range(2, q_max, mode)
    prod = 1.0
    for q, lam in zip(range(2, q_max + 1), flags):
        if lam:
            ps = float(q * int(lam)) ** sigma
            prod *= ps / (ps - 1.0)
    return prod
