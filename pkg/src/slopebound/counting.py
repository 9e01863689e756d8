"""Counting height-weighted tuples and the divisor multiset they induce.

N_h counts tuples n in N_0^s with sum n_i * ht_i = h over the height
multiset of a root system. The truncation divisor sequence lists the
prime-power exponents (r - h), each repeated g * N_h times for h < r.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .rootsystems import RootSystem

__all__ = ["TooLarge", "CountTable", "ElemDivSeq", "count_nh", "count_nh_bruteforce", "truncation_divisors"]

BRUTEFORCE_GUARD = 10**8


class TooLarge(ValueError):
    """Raised when a brute-force enumeration would exceed the guard."""


@dataclass(frozen=True)
class CountTable:
    """Values N_0..N_H for one root system."""

    system: RootSystem
    values: tuple[int, ...]

    @property
    def horizon(self) -> int:
        return len(self.values) - 1

    def __post_init__(self) -> None:
        if not self.values or self.values[0] != 1:
            raise ValueError("N_0 must be 1")
        if any(v < 0 for v in self.values):
            raise ValueError("counts must be non-negative")


@dataclass(frozen=True)
class ElemDivSeq:
    """Non-increasing sequence of positive prime-power exponents.

    The empty sequence is the trivial group. The prime is optional: the
    exponent multiset is meaningful independently of which prime it refers to.
    """

    exponents: tuple[int, ...]
    prime: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", tuple(self.exponents))
        if any(e <= 0 for e in self.exponents):
            raise ValueError("exponents must be strictly positive")
        if any(a < b for a, b in zip(self.exponents, self.exponents[1:])):
            raise ValueError("exponents must be non-increasing")

    def __len__(self) -> int:
        return len(self.exponents)

    def padded(self, t: int) -> tuple[int, ...]:
        """The exponents extended by zeros up to length t (t >= len)."""
        if t < len(self.exponents):
            raise ValueError(f"cannot pad length {len(self.exponents)} down to {t}")
        return self.exponents + (0,) * (t - len(self.exponents))


def count_nh(system: RootSystem, H: int) -> CountTable:
    """Exact table N_0..N_H by coin-counting DP over the height multiset."""
    if H < 0:
        raise ValueError("H must be non-negative")
    values = [0] * (H + 1)
    values[0] = 1
    for ht in system.heights:
        for h in range(ht, H + 1):
            values[h] += values[h - ht]
    return CountTable(system=system, values=tuple(values))


def count_nh_bruteforce(system: RootSystem, H: int) -> CountTable:
    """Independent oracle for count_nh by direct tuple enumeration.

    Enumerates every tuple with n_i <= H // ht_i (a coordinate beyond that
    bound cannot occur in a solution with sum <= H) and tallies exact sums.
    """
    if H < 0:
        raise ValueError("H must be non-negative")
    if (H + 1) ** system.s > BRUTEFORCE_GUARD:
        raise TooLarge(f"(H+1)^s = {(H + 1) ** system.s} exceeds {BRUTEFORCE_GUARD}")
    heights = system.heights
    values = [0] * (H + 1)
    for tup in product(*(range(H // ht + 1) for ht in heights)):
        total = sum(n * ht for n, ht in zip(tup, heights))
        if total <= H:
            values[total] += 1
    return CountTable(system=system, values=tuple(values))


def truncation_divisors(system: RootSystem, g: int, r: int) -> ElemDivSeq:
    """Exponent sequence (r repeated g*N_0 times, r-1 repeated g*N_1 times, ..., 1 repeated g*N_{r-1} times)."""
    if g < 1 or r < 1:
        raise ValueError("g and r must be positive")
    table = count_nh(system, r - 1)
    exponents: list[int] = []
    for h in range(r):
        exponents.extend([r - h] * (g * table.values[h]))
    return ElemDivSeq(exponents=tuple(exponents))
