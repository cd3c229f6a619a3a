"""Logarithmic-integral estimates and the pi(x) - Li(x) sharp-bound checks."""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import prime_core
from .errors import DomainError

SCHOENFELD_PI = "schoenfeld_pi"
TRUDGIAN = "trudgian"
SCHOENFELD_PSI = "schoenfeld_psi"

# sqrt(x) * ln(x) / (8 pi) is the published form; sqrt(x ln x) / (8 pi) is the alternative reading
VARIANT_PRODUCT = "sqrt_x_ln_x"
VARIANT_RADICAL = "sqrt_x_times_ln_x"

_THRESHOLDS = {SCHOENFELD_PI: 2657, TRUDGIAN: 2}


@dataclass(frozen=True)
class BoundReport:
    x: float
    lhs: float
    rhs: float
    holds: bool
    bound_name: str
    variant: str = ""


def _simpson(f, a, fa, b, fb):
    m = 0.5 * (a + b)
    fm = f(m)
    return m, fm, (b - a) / 6.0 * (fa + 4.0 * fm + fb)


def adaptive_simpson(f, a, b, tolerance=1e-8, max_depth=50):
    """Integrate ``f`` over [a, b] to an absolute ``tolerance``.

    Iterative adaptive Simpson with the usual |S2 - S1| <= 15 eps acceptance
    and Richardson correction.
    """
    if b == a:
        return 0.0
    fa, fb = f(a), f(b)
    m, fm, whole = _simpson(f, a, fa, b, fb)
    stack = [(a, fa, m, fm, b, fb, whole, tolerance, 0)]
    total = 0.0
    while stack:
        a, fa, m, fm, b, fb, whole, eps, depth = stack.pop()
        lm, flm, left = _simpson(f, a, fa, m, fm)
        rm, frm, right = _simpson(f, m, fm, b, fb)
        delta = left + right - whole
        if depth >= max_depth or abs(delta) <= 15.0 * eps:
            total += left + right + delta / 15.0
        else:
            stack.append((m, fm, rm, frm, b, fb, right, eps / 2.0, depth + 1))
            stack.append((a, fa, lm, flm, m, fm, left, eps / 2.0, depth + 1))
    return total


def _inv_log(t):
    return 1.0 / math.log(t)


def li_gauss(x, tolerance=1e-8):
    """Offset logarithmic integral: the integral of dt / ln t from 2 to x."""
    if x < 2:
        raise DomainError(f"Li(x) needs x >= 2, got {x}")
    if tolerance <= 0:
        raise DomainError("tolerance must be positive")
    return adaptive_simpson(_inv_log, 2.0, float(x), tolerance)


def li_asymptotic(x):
    """First-order estimate x / ln x."""
    if x <= 1:
        raise DomainError(f"x / ln x needs x > 1, got {x}")
    return x / math.log(x)


def pnt_ratio(x: int, mode=prime_core.Mode.OPTIMIZED):
    """C(x, 2) / (x / ln x)."""
    if x < 3:
        raise DomainError(f"pnt_ratio needs x >= 3, got {x}")
    return prime_core.count(x, 2, mode).count / li_asymptotic(x)


def schoenfeld_pi_rhs(x, variant=VARIANT_PRODUCT):
    if variant == VARIANT_PRODUCT:
        return math.sqrt(x) * math.log(x) / (8.0 * math.pi)
    if variant == VARIANT_RADICAL:
        return math.sqrt(x * math.log(x)) / (8.0 * math.pi)
    raise DomainError(f"unknown bound variant {variant!r}")


def trudgian_rhs(x):
    lx = math.log(x)
    return 0.2795 * x / lx**0.75 * math.exp(-math.sqrt(lx / 6.455))


def check_pi_bound(x_lo: int, x_hi: int, step: int = 1, bound_name=SCHOENFELD_PI,
                   variant=VARIANT_PRODUCT, tolerance=1e-8, mode=prime_core.Mode.OPTIMIZED):
    """Compare |C(x, 2) - Li(x)| against a sharp bound at x = x_lo, x_lo + step, ..., <= x_hi.

    Li and C are accumulated incrementally between sample points.
    """
    if bound_name not in _THRESHOLDS:
        raise DomainError(f"unknown bound {bound_name!r}")
    if x_lo < _THRESHOLDS[bound_name]:
        raise DomainError(f"{bound_name} is only asserted for x >= {_THRESHOLDS[bound_name]}, got {x_lo}")
    if step < 1 or x_hi < x_lo:
        raise DomainError("need step >= 1 and x_hi >= x_lo")
    if bound_name == SCHOENFELD_PI:
        schoenfeld_pi_rhs(x_lo, variant)  # validates the variant name
    else:
        variant = ""

    reports = []
    li = li_gauss(x_lo, tolerance)
    c = prime_core.count(x_lo, 2, mode).count
    prev = x_lo
    for x in range(x_lo, x_hi + 1, step):
        if x != prev:
            li += adaptive_simpson(_inv_log, float(prev), float(x), tolerance)
            c += int(prime_core.discriminate_range(prev + 1, x, mode).sum())
            prev = x
        rhs = schoenfeld_pi_rhs(x, variant) if bound_name == SCHOENFELD_PI else trudgian_rhs(x)
        lhs = abs(c - li)
        reports.append(BoundReport(x, lhs, rhs, lhs < rhs, bound_name, variant))
    return reports
