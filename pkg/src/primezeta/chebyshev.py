"""Chebyshev's second function psi(x) = sum over prime powers p**k <= x of ln p."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import prime_core
from .errors import DomainError
from .prime_estimates import SCHOENFELD_PSI, BoundReport

FLOOR_GUARD = 1e-12
PSI_THRESHOLD = 73.2


@dataclass(frozen=True)
class PsiValue:
    x: float
    value: float
    variant: str


def guarded_floor(q):
    """floor(q), except quotients within FLOOR_GUARD of an integer snap to it."""
    r = round(q)
    if abs(q - r) < FLOOR_GUARD:
        return r
    return math.floor(q)


def _check(x):
    if x < 2:
        raise DomainError(f"psi needs x >= 2, got {x}")


def psi_exact(x) -> PsiValue:
    """sum_{j=1}^{C(x,2)} floor(ln x / ln P(j)) * ln P(j)."""
    _check(x)
    lx = math.log(x)
    n_primes = prime_core.count(math.floor(x), 2).count
    total = 0.0
    for j in range(1, n_primes + 1):
        lp = math.log(prime_core.nth_prime(j))
        total += guarded_floor(lx / lp) * lp
    return PsiValue(float(x), total, "exact")


def psi_approx(x, mode=prime_core.Mode.OPTIMIZED) -> PsiValue:
    """Table-free form: sum over every q = 2..floor(x), primes selected by Lambda(q).

    The log argument Psi(q) + e * (1 - Lambda(q)) equals q at primes and e at
    composites, where the trailing Lambda(q) factor then zeroes the term.
    """
    _check(x)
    lx = math.log(x)
    q_hi = math.floor(x)
    lam = prime_core.discriminate_range(2, q_hi, mode)
    total = 0.0
    for q, flag in zip(range(2, q_hi + 1), lam):
        flag = int(flag)
        arg = q * flag + math.e * (1 - flag)
        la = math.log(arg)
        total += guarded_floor(lx / la) * la * flag
    return PsiValue(float(x), total, "approx")


def psi_bruteforce(x) -> float:
    """Sum ln p over every prime power p**k <= x, by trial division. Test oracle."""
    total = 0.0
    for n in range(2, math.floor(x) + 1):
        p = next(d for d in range(2, n + 1) if n % d == 0)
        m = n
        while m % p == 0:
            m //= p
        if m == 1:
            total += math.log(p)
    return total


def psi_bound_rhs(x):
    """sqrt(x) * (ln x)**2 / (8 pi)."""
    return math.sqrt(x) * math.log(x) ** 2 / (8.0 * math.pi)


def check_psi_bound(x_lo, x_hi, step=1.0, variant="approx"):
    """|psi(x) - x| against sqrt(x) ln(x)**2 / (8 pi) at x_lo, x_lo + step, ..., <= x_hi."""
    if x_lo < 2 or x_hi < x_lo or step <= 0:
        raise DomainError("need 2 <= x_lo <= x_hi and step > 0")
    fn = psi_approx if variant == "approx" else psi_exact
    n = int(math.floor((x_hi - x_lo) / step + 1e-9))
    reports = []
    for x in np.round(x_lo + step * np.arange(n + 1), 12):
        x = float(x)
        lhs = abs(fn(x).value - x)
        rhs = psi_bound_rhs(x)
        reports.append(BoundReport(x, lhs, rhs, lhs < rhs, SCHOENFELD_PSI, variant))
    return reports
