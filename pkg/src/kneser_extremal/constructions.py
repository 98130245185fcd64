"""Generators for the named extremal families."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from .kneser import Family, induce
from .pattern import PatternGraph, SpecialSet, eta, free_of_special
from .setcore import FamilyMember, GroundParams, elements_to_bits, enumerate_all


def _check_element(params: GroundParams, i: int):
    if not 1 <= i <= params.n:
        raise ValueError(f"element {i} outside [1, {params.n}]")


def star(params: GroundParams, i: int) -> Family:
    _check_element(params, i)
    bit = 1 << (i - 1)
    return Family(params, tuple(m for m in enumerate_all(params) if m.bits & bit))


def constellation(params: GroundParams, L: Iterable[int]) -> Family:
    L = sorted(set(L))
    if not L:
        raise ValueError("constellation needs a nonempty L")
    for i in L:
        _check_element(params, i)
    lmask = elements_to_bits(L)
    return Family(params, tuple(m for m in enumerate_all(params) if m.bits & lmask))


def hilton_milner(params: GroundParams) -> Family:
    """Center 1 with blocker {2,...,k+1}."""
    n, k = params.n, params.k
    if n <= 2 * k:
        raise ValueError(f"Hilton-Milner family needs n > 2k (n={n}, k={k})")
    blocker = elements_to_bits(range(2, k + 2))
    members = [m for m in enumerate_all(params) if m.bits & 1 and m.bits & blocker]
    members.append(FamilyMember(blocker, params))
    return Family.from_members(params, members)


def star_plus(params: GroundParams, i: int, extras: Sequence[FamilyMember]) -> Family:
    """Star S_i together with members avoiding i."""
    _check_element(params, i)
    bit = 1 << (i - 1)
    for e in extras:
        if e.bits & bit:
            raise ValueError(f"extra member {e} contains the center {i}")
    if len({e.bits for e in extras}) != len(extras):
        raise ValueError("extra members must be distinct")
    return Family.from_members(params, [*star(params, i).members, *extras])


@dataclass(frozen=True)
class Thm1Validity:
    valid: bool
    q: int
    eta: int
    offending_special: Optional[SpecialSet]


def thm1_extremal(
    params: GroundParams, L: Iterable[int], extras: Sequence[FamilyMember], g: PatternGraph
) -> tuple[Family, Thm1Validity]:
    """C(L) plus eta-1 outside members; valid when the extras avoid every special subgraph."""
    L = sorted(set(L))
    stats = eta(g)
    if len(L) != stats.q - 1:
        raise ValueError(f"|L| must be chi(G)-1 = {stats.q - 1}, got {len(L)}")
    if len(extras) != stats.eta - 1:
        raise ValueError(f"need eta(G)-1 = {stats.eta - 1} extra members, got {len(extras)}")
    for i in L:
        _check_element(params, i)
    lmask = elements_to_bits(L)
    for e in extras:
        if e.bits & lmask:
            raise ValueError(f"extra member {e} meets L")
    base = constellation(params, L).members if L else ()
    fam = Family.from_members(params, [*base, *extras])
    offending = free_of_special(induce(Family.from_members(params, extras)), g)
    return fam, Thm1Validity(offending is None, stats.q, stats.eta, offending)


def valid_thm1_extras(params: GroundParams, L: Iterable[int], g: PatternGraph) -> Iterator[tuple[FamilyMember, ...]]:
    """Every admissible extras tuple for C(L); exhaustive, tiny instances only."""
    L = sorted(set(L))
    lmask = elements_to_bits(L)
    outside = [m for m in enumerate_all(params) if not m.bits & lmask]
    need = eta(g).eta - 1
    for extras in combinations(outside, need):
        _, report = thm1_extremal(params, L, extras, g)
        if report.valid:
            yield extras
