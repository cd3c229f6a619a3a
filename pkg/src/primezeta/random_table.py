"""Random odd-integer tables classified by the prime generator.

Each set draws K = 1 + trunc(rnd(100)), u_1 = 2 trunc(rnd(K/2)) + 1 and then
u_{n+1} = 2 (u_n + trunc(rnd(u_n / K))) + 1, where rnd(a) is uniform on [0, a).

rnd is driven by SplitMix64 (Steele, Lea & Flood 2014): the state advances by
0x9E3779B97F4A7C15 and is mixed with the 30/27/31 xor-shift-multiply finalizer;
a double is formed from the top 53 bits. Per-set generators are seeded with
successive outputs of a master SplitMix64 seeded with ``seed``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import prime_core
from .errors import DomainError

_MASK = (1 << 64) - 1
ROWS_PER_SET = 16


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53

    def rnd(self, a) -> float:
        return a * self.random()


@dataclass(frozen=True)
class TableRow:
    n: int
    u_n: int
    psi_u: int
    set_index: int = 1
    K: int = 0


def generate_set(rnd, set_index=1, rows=ROWS_PER_SET, mode=prime_core.Mode.OPTIMIZED):
    """One set of ``rows`` integers from a draw function ``rnd(a) -> [0, a)``."""
    K = 1 + math.floor(rnd(100))
    u = 2 * math.floor(rnd(K / 2)) + 1
    out = []
    for n in range(1, rows + 1):
        out.append(TableRow(n, u, int(prime_core.generate(u, mode)), set_index, K))
        u = 2 * (u + math.floor(rnd(u / K))) + 1
    return out


def generate_table(seed: int, sets: int = 4, rnd=None, mode=prime_core.Mode.OPTIMIZED):
    """``sets`` lists of TableRow; deterministic in ``seed`` unless ``rnd`` is injected."""
    if sets < 1:
        raise DomainError("sets must be >= 1")
    master = SplitMix64(seed)
    table = []
    for k in range(1, sets + 1):
        draw = rnd if rnd is not None else SplitMix64(master.next_u64()).rnd
        table.append(generate_set(draw, k, mode=mode))
    return table
