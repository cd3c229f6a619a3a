"""Closed-form prime functions, truncated zeta approximants and action-based zero location."""
from . import _backend
from .errors import (DomainError, NoMinimumError, OverflowGuard, PoleError, PrimeZetaError,
                     QuadratureError)
from .prime_core import (Mode, count, discriminate, discriminate_range, generate, nth_prime,
                         oracle_is_prime)
from .zeta_core import ComplexPoint, ZetaValue

KERNELS = _backend.NAME

__all__ = [
    "ComplexPoint", "DomainError", "KERNELS", "Mode", "NoMinimumError", "OverflowGuard",
    "PoleError", "PrimeZetaError", "QuadratureError", "ZetaValue", "count", "discriminate",
    "discriminate_range", "generate", "nth_prime", "oracle_is_prime",
]
