"""k-subsets of [n] as machine-word bitsets, colex ranking, exact binomials.

Element ``i`` of the ground set ``[n] = {1, ..., n}`` is stored as bit ``i - 1``.
With this encoding colex order on k-subsets coincides with numeric order of
the bitmasks, which is what every sorted container in the package relies on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator

MAX_N = 64


def binom(n: int, k: int) -> int:
    """Exact C(n, k); zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class GroundParams:
    n: int
    k: int

    def __post_init__(self):
        if not (1 <= self.k <= self.n):
            raise ValueError(f"need 1 <= k <= n, got n={self.n}, k={self.k}")
        if self.n > MAX_N:
            raise ValueError(f"n={self.n} exceeds the {MAX_N}-bit encoding width")

    @property
    def size(self) -> int:
        return binom(self.n, self.k)


@dataclass(frozen=True, order=True)
class FamilyMember:
    bits: int
    params: GroundParams = field(compare=False)

    def __post_init__(self):
        if self.bits.bit_count() != self.params.k:
            raise ValueError(f"member must have {self.params.k} elements: {self.elements}")
        if self.bits >> self.params.n:
            raise ValueError(f"member {self.elements} has an element above n={self.params.n}")

    @classmethod
    def of(cls, params: GroundParams, elements: Iterable[int]) -> "FamilyMember":
        bits = 0
        for e in elements:
            if not 1 <= e <= params.n:
                raise ValueError(f"element {e} outside [1, {params.n}]")
            if bits >> (e - 1) & 1:
                raise ValueError(f"repeated element {e}")
            bits |= 1 << (e - 1)
        return cls(bits, params)

    @property
    def elements(self) -> tuple[int, ...]:
        return bits_to_elements(self.bits)

    def __contains__(self, element: int) -> bool:
        return element >= 1 and bool(self.bits >> (element - 1) & 1)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return "{" + ",".join(map(str, self.elements)) + "}"


def bits_to_elements(bits: int) -> tuple[int, ...]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length())
        bits ^= low
    return tuple(out)


def elements_to_bits(elements: Iterable[int]) -> int:
    bits = 0
    for e in elements:
        bits |= 1 << (e - 1)
    return bits


def colex_rank(member: FamilyMember) -> int:
    # sum of C(c_i, i) over the 0-based elements c_1 < ... < c_k
    r = 0
    for i, e in enumerate(member.elements, start=1):
        r += binom(e - 1, i)
    return r


def colex_unrank(r: int, params: GroundParams) -> FamilyMember:
    if not 0 <= r < params.size:
        raise ValueError(f"rank {r} out of range [0, {params.size})")
    bits = 0
    c = params.n - 1
    for i in range(params.k, 0, -1):
        while binom(c, i) > r:
            c -= 1
        r -= binom(c, i)
        bits |= 1 << c
        c -= 1
    return FamilyMember(bits, params)


def enumerate_all(params: GroundParams) -> Iterator[FamilyMember]:
    """Yield every k-subset of [n] in colex order (Gosper's hack)."""
    n, k = params.n, params.k
    x = (1 << k) - 1
    limit = 1 << n
    while x < limit:
        yield FamilyMember(x, params)
        low = x & -x
        ripple = x + low
        x = (((ripple ^ x) >> 2) // low) | ripple
