"""Closed-form prime discrimination, generation and counting.

The discriminator is built only from floor and sign::

    Lambda(u) = Omega0(u) * prod_{m=2}^{h1(u)} prod_{n=2}^{h2(u,m)} Omega1(u,m) * Omega2(u,m,n)

with ``Omega0`` rejecting 0, 1 and non-integers, ``Omega1`` vanishing at even
``u = 2m`` and ``Omega2`` vanishing at odd products ``(2m-1)(2n-1)``.
Empty products are 1 and ``sign(0) = 0``.
"""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _backend
from .errors import DomainError


class Mode(str, Enum):
    LITERAL = "literal"
    OPTIMIZED = "optimized"


def _mode(mode) -> Mode:
    try:
        return Mode(mode)
    except ValueError:
        raise DomainError(f"unknown evaluation mode {mode!r}") from None


def _check_real(u):
    if u < 0:
        raise DomainError(f"u must be non-negative, got {u!r}")


@dataclass(frozen=True)
class PrimeIndicator:
    value: int
    mode: Mode

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value == 1


@dataclass(frozen=True)
class CountResult:
    count: int
    u_in: int
    u: int

    def __int__(self):
        return self.count


@dataclass(frozen=True)
class AuxComponents:
    """Auxiliary values for one (u, m, n); ``eta`` is sign(u - (2m-1)(2n-1))."""

    delta: float
    h1: int
    h2: int
    eta: int
    omega0: int
    omega1: int
    omega2: int


def sign_diff(a, b) -> int:
    """eta(a, b) = sign(a - b), with sign(0) = 0."""
    d = a - b
    return (d > 0) - (d < 0)


def frac(u):
    return u - math.floor(u)


def h1(u) -> int:
    return 1 + math.floor(u / 2)


def h2(u, m) -> int:
    return 1 + math.floor((u + 2 * m - 1) / (2 * (2 * m - 1)))


def omega0(u) -> int:
    return sign_diff(abs(u), 0) ** 2 * sign_diff(abs(u), 1) ** 2 * (1 - sign_diff(frac(u), 0))


def omega1(u, m) -> int:
    return sign_diff(abs(u), 2 * m) ** 2


def omega2(u, m, n) -> int:
    return sign_diff(abs(u), (2 * m - 1) * (2 * n - 1)) ** 2


def aux_components(u, m: int, n: int) -> AuxComponents:
    _check_real(u)
    if m < 2 or n < 2:
        raise DomainError(f"m and n must be >= 2, got m={m}, n={n}")
    return AuxComponents(
        delta=frac(u),
        h1=h1(u),
        h2=h2(u, m),
        eta=sign_diff(abs(u), (2 * m - 1) * (2 * n - 1)),
        omega0=omega0(u),
        omega1=omega1(u, m),
        omega2=omega2(u, m, n),
    )


def discriminate(u, mode=Mode.OPTIMIZED) -> PrimeIndicator:
    """Closed-form primality indicator: 1 for primes, 0 for everything else."""
    _check_real(u)
    mode = _mode(mode)
    k = _backend.kernels
    fn = k.lambda_literal if mode is Mode.LITERAL else k.lambda_optimized
    return PrimeIndicator(int(fn(float(u))), mode)


def discriminate_range(lo: int, hi: int, mode=Mode.OPTIMIZED) -> np.ndarray:
    """Lambda(j) for the integers j = lo..hi as an int8 array."""
    if lo < 0:
        raise DomainError(f"range must start at a non-negative integer, got {lo}")
    mode = _mode(mode)
    return _backend.kernels.lambda_range(int(lo), int(hi), mode is Mode.OPTIMIZED)


def generate(u, mode=Mode.OPTIMIZED):
    """Psi(u) = u * Lambda(u): u at primes, 0 elsewhere."""
    return u * discriminate(u, mode).value


def discrete_derivatives(u: int, mode=Mode.OPTIMIZED) -> tuple:
    if u < 0 or int(u) != u:
        raise DomainError(f"u must be a non-negative integer, got {u!r}")
    p0, p1, p2 = (generate(u + k, mode) for k in range(3))
    return p1 - p0, p2 - 2 * p1 + p0


def count(u: int, u_in: int = 2, mode=Mode.OPTIMIZED) -> CountResult:
    """Number of primes j with u_in <= j <= u, summed from the discriminator."""
    if u_in < 0:
        raise DomainError(f"u_in must be non-negative, got {u_in}")
    if u_in > u:
        raise DomainError(f"u_in ({u_in}) exceeds u ({u})")
    total = int(discriminate_range(u_in, u, mode).sum(dtype=np.int64))
    return CountResult(total, int(u_in), int(u))


class _PrimeStream:
    """Primes found so far by advancing the discriminator over the integers."""

    def __init__(self, chunk=4096):
        self.primes: list[int] = []
        self.scanned = 1  # every integer <= scanned has been classified
        self.chunk = chunk

    def _advance(self):
        lo = self.scanned + 1
        hi = lo + self.chunk - 1
        flags = discriminate_range(lo, hi)
        self.primes.extend(int(lo + i) for i in np.flatnonzero(flags))
        self.scanned = hi
        self.chunk = min(self.chunk * 2, 1 << 20)

    def nth(self, j):
        while len(self.primes) < j:
            self._advance()
        return self.primes[j - 1]

    def up_to(self, x):
        while self.scanned < x:
            self._advance()
        end = bisect.bisect_right(self.primes, x)
        return self.primes[:end]


_stream = _PrimeStream()


def nth_prime(j: int) -> int:
    """The j-th prime (P(1) = 2)."""
    if j < 1:
        raise DomainError(f"prime index must be >= 1, got {j}")
    return _stream.nth(int(j))


def primes_up_to(x) -> list[int]:
    """All primes <= x, in ascending order."""
    return list(_stream.up_to(math.floor(x)))


def progression_primes(a: int, q: int, limit: int, mode=Mode.OPTIMIZED) -> list[int]:
    """Primes in {a, q + a, 2q + a, ...} not exceeding ``limit``."""
    if a < 2 or a > q:
        raise DomainError(f"need 2 <= a <= q, got a={a}, q={q}")
    if limit < a:
        raise DomainError(f"limit ({limit}) must be >= a ({a})")
    return [t for t in range(a, limit + 1, q) if discriminate(t, mode)]


def oracle_is_prime(u: int) -> int:
    """Trial division up to isqrt(u). Test oracle, independent of the closed form."""
    if u < 2:
        return 0
    if u % 2 == 0:
        return int(u == 2)
    for d in range(3, math.isqrt(u) + 1, 2):
        if u % d == 0:
            return 0
    return 1
