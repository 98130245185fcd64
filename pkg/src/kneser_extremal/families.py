"""Property checks on families and the distance-from-intersecting statistic ell."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .kneser import Family, InducedGraph, induce
from .mis import maximum_independent_set
from .pattern import complete_bipartite, find_embedding

ELL_CAP = 2000


@dataclass(frozen=True)
class ViolationWitness:
    left: tuple[int, ...]
    right: tuple[int, ...]


@dataclass(frozen=True)
class EllReport:
    size: int
    alpha: int
    ell: int
    astar_indices: tuple[int, ...]
    witness_star_center: Optional[int]
    nodes: int = 0


def _graph(family: Family | InducedGraph) -> InducedGraph:
    return family if isinstance(family, InducedGraph) else induce(family)


def find_disjoint_pair(family: Family | InducedGraph) -> Optional[ViolationWitness]:
    g = _graph(family)
    if not g.edges:
        return None
    i, j = g.edges[0]
    return ViolationWitness((i,), (j,))


def is_intersecting(family: Family | InducedGraph) -> bool:
    return find_disjoint_pair(family) is None


def is_star(family: Family) -> Optional[int]:
    """Least element common to every member; 1 for the empty family by convention."""
    if not len(family):
        return 1
    common = (1 << family.params.n) - 1
    for m in family.members:
        common &= m.bits
    if not common:
        return None
    return (common & -common).bit_length()


def union_violation(family: Family | InducedGraph, s: int, t: int) -> Optional[ViolationWitness]:
    """Members A_1..A_s, B_1..B_t with disjoint unions, i.e. a K_{s,t} in the Kneser graph."""
    if not 1 <= s <= t:
        raise ValueError(f"need 1 <= s <= t, got s={s}, t={t}")
    g = _graph(family)
    emb = find_embedding(g.adj, g.all_mask, complete_bipartite(s, t))
    if emb is None:
        return None
    return ViolationWitness(tuple(sorted(emb[:s])), tuple(sorted(emb[s:])))


def is_union_intersecting(family: Family | InducedGraph, s: int, t: int) -> bool:
    return union_violation(family, s, t) is None


def ell(family: Family, cap: int = ELL_CAP) -> EllReport:
    """Exact ell(A) = |A| - alpha(KG[A]) with the lexicographically least A*."""
    if len(family) > cap:
        raise ValueError(
            f"family has {len(family)} members, above the exact-search cap {cap}; use bounds instead"
        )
    g = induce(family)
    alpha, astar, nodes = maximum_independent_set(g.adj)
    center = is_star(family.subfamily(astar)) if astar else None
    return EllReport(len(family), alpha, len(family) - alpha, astar, center, nodes)


@dataclass(frozen=True)
class LargeUnionReport:
    """Large (s,t)-union intersecting families should be within s-1 members of intersecting.

    The guarantee only holds for n beyond an unspecified threshold, so this is
    a report rather than a pass/fail check: ``premise`` says whether the family
    is union intersecting and at least (s + beta) * M(n, k) large, and
    ``conclusion`` whether ell <= s - 1.
    """

    union_intersecting: bool
    size: int
    size_needed: float
    ell: int
    premise: bool
    conclusion: bool


def large_union_report(family: Family, s: int, t: int, beta: float) -> LargeUnionReport:
    from .bounds import hm_m

    if family.params.k < 3 or beta <= 0:
        raise ValueError("need k >= 3 and beta > 0")
    ui = is_union_intersecting(family, s, t)
    need = (s + beta) * hm_m(family.params.n, family.params.k)
    e = ell(family).ell
    return LargeUnionReport(ui, len(family), need, e, ui and len(family) >= need, e <= s - 1)
