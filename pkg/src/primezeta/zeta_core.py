"""Truncated Dirichlet-eta evaluation of zeta on the critical strip.

    zeta(s) ~ 1/(1 - 2**(1-s)) * sum_{n=1}^{n_max} (-1)**(n-1) * n**(-s)

The same sum split over primes and composites (by the closed-form
discriminator) gives ``zeta_p`` and ``zeta_c``; their sum ``zeta_app`` is an
exact partition of the terms of ``zeta_ex``.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _backend, prime_core
from .errors import DomainError, OverflowGuard, PoleError

POLE_EPS = 1e-9
RECIPROCAL_FLOOR = 1e-300
KINDS = ("ex", "p", "c", "app")


@dataclass(frozen=True)
class ComplexPoint:
    sigma: float
    tau: float
    n_max: int = 100

    def __post_init__(self):
        if not self.sigma > 0:
            raise DomainError(f"sigma must be > 0 for the eta series, got {self.sigma}")
        if self.n_max < 1:
            raise DomainError(f"n_max must be >= 1, got {self.n_max}")

    @property
    def s(self) -> complex:
        return complex(self.sigma, self.tau)


@dataclass(frozen=True)
class ZetaValue:
    re: float
    im: float

    @property
    def modulus_sq(self):
        return self.re * self.re + self.im * self.im

    def __complex__(self):
        return complex(self.re, self.im)


@lru_cache(maxsize=32)
def _weights(kind: str, n_max: int, mode: str) -> np.ndarray:
    n = np.arange(1, n_max + 1, dtype=np.int64)
    if kind == "ex":
        w = np.where(n % 2 == 1, 1.0, -1.0)
        w.setflags(write=False)
        return w
    lam = prime_core.discriminate_range(1, n_max, mode).astype(np.int64)
    if kind == "p":
        keep, expo = lam, n * lam - 1
    elif kind == "c":
        keep, expo = 1 - lam, n * (1 - lam) - 1
    else:
        raise ValueError(kind)
    # (-1)**k for possibly negative k; only matters where keep == 1
    sign = np.where(expo % 2 == 0, 1.0, -1.0)
    w = keep * sign
    w.setflags(write=False)
    return w


def eta_prefactor(sigma, tau) -> np.ndarray:
    """1 / (1 - 2**(1-s)), vectorized; raises PoleError near its poles."""
    sigma = np.asarray(sigma, dtype=np.float64)
    tau = np.asarray(tau, dtype=np.float64)
    two = np.exp2(1.0 - sigma) * np.exp(-1j * tau * math.log(2.0))
    den = 1.0 - two
    near = np.abs(den) <= POLE_EPS
    if np.any(near):
        bad = np.flatnonzero(near.ravel())[0]
        s_bad = np.broadcast_to(sigma, den.shape).ravel()[bad]
        t_bad = np.broadcast_to(tau, den.shape).ravel()[bad]
        raise PoleError(
            f"eta prefactor pole: |1 - 2^(1-s)| <= {POLE_EPS:g} at s = {s_bad:g} + {t_bad:g}i"
        )
    return 1.0 / den


def evaluate(sigma, tau, n_max=100, kind="ex", *, mode=prime_core.Mode.OPTIMIZED,
             compensated=False, workers=1, backend=None) -> np.ndarray:
    """Vectorized evaluation of one member of the zeta family; returns complex values.

    ``sigma`` and ``tau`` broadcast against each other.
    """
    if kind not in KINDS:
        raise DomainError(f"unknown zeta kind {kind!r}")
    sig, ta = np.broadcast_arrays(np.asarray(sigma, dtype=np.float64),
                                  np.asarray(tau, dtype=np.float64))
    if np.any(sig <= 0):
        raise DomainError("sigma must be > 0 for the eta series")
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    if kind == "app":
        return (evaluate(sig, ta, n_max, "p", mode=mode, compensated=compensated,
                         workers=workers, backend=backend)
                + evaluate(sig, ta, n_max, "c", mode=mode, compensated=compensated,
                           workers=workers, backend=backend))
    pref = eta_prefactor(sig, ta)
    w = _weights(kind, int(n_max), prime_core.Mode(mode).value)
    k = _backend.get(backend)
    flat_s = np.ascontiguousarray(sig.ravel())
    flat_t = np.ascontiguousarray(ta.ravel())
    if workers > 1 and flat_s.size > 1:
        chunks = np.array_split(np.arange(flat_s.size), workers)
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(
                lambda idx: k.eta_sums(flat_s[idx], flat_t[idx], w, compensated), chunks))
        re = np.concatenate([p[0] for p in parts])
        im = np.concatenate([p[1] for p in parts])
    else:
        re, im = k.eta_sums(flat_s, flat_t, w, compensated)
    return pref * (re + 1j * im).reshape(sig.shape)


def _point(p: ComplexPoint, kind, **kw) -> ZetaValue:
    z = complex(evaluate(p.sigma, p.tau, p.n_max, kind, **kw))
    return ZetaValue(z.real, z.imag)


def zeta_ex(p: ComplexPoint, **kw) -> ZetaValue:
    return _point(p, "ex", **kw)


def zeta_p(p: ComplexPoint, **kw) -> ZetaValue:
    """Prime-indexed terms only."""
    return _point(p, "p", **kw)


def zeta_c(p: ComplexPoint, **kw) -> ZetaValue:
    """Terms at n = 1 and composite n."""
    return _point(p, "c", **kw)


def zeta_app(p: ComplexPoint, **kw) -> ZetaValue:
    a = zeta_p(p, **kw)
    b = zeta_c(p, **kw)
    return ZetaValue(a.re + b.re, a.im + b.im)


def modulus_squared(p: ComplexPoint, which="ex", **kw) -> float:
    if which == "ex":
        return zeta_ex(p, **kw).modulus_sq
    if which == "app":
        return zeta_app(p, **kw).modulus_sq
    raise DomainError(f"which must be 'ex' or 'app', got {which!r}")


def modulus(p: ComplexPoint, **kw) -> float:
    """M = |zeta_ex|, the non-squared modulus."""
    return math.sqrt(modulus_squared(p, "ex", **kw))


def modulus_grid(sigma, tau, n_max=100, **kw) -> np.ndarray:
    return np.abs(evaluate(sigma, tau, n_max, "ex", **kw))


def reciprocal_modulus(p: ComplexPoint, which="ex", **kw) -> float:
    """1 / M**2 with an explicit floor guard."""
    m2 = modulus_squared(p, which, **kw)
    if m2 <= RECIPROCAL_FLOOR:
        raise OverflowGuard(f"modulus squared {m2:g} is below the floor {RECIPROCAL_FLOOR:g}")
    return 1.0 / m2
