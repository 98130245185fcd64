"""Exact maximum pattern-free families in KG(n, k).

Two independent routes:

* ``max_pattern_free``: depth-first branch and bound over members in colex
  order (include before exclude). Undecided members that would complete a copy
  of the pattern together with the chosen ones are discarded as soon as a
  member is added, so the chosen family is pattern-free at every node. The
  bound splits the candidates into Kneser cliques (pairwise disjoint members);
  a clique with m or more chosen members would contain K_m and hence the
  pattern, so each clique contributes at most m - 1.
* ``exhaustive_oracle``: marks every m-subset of members that spans a copy of
  the pattern (checked by trying all vertex bijections on plain Python sets)
  and propagates over the full subset lattice with numpy. No search, no bound.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Optional

import numpy as np

from .kneser import Family, induce
from .mis import clique_cover
from .pattern import PatternGraph, contains_pattern, eta, find_embedding, special_sets
from .setcore import GroundParams, binom, elements_to_bits

BNB_CAP = 3000
ORACLE_CAP = 24
ENUM_CAP = 10**5
ORACLE_MAX_PATTERN = 7


class InstanceTooLarge(ValueError):
    pass


@dataclass
class SearchCertificate:
    params: GroundParams
    pattern: str
    optimum: int
    witness: Family
    mode: str
    nodes_explored: int = 0
    all_extrema: Optional[list[Family]] = None
    extrema_overflow: bool = False
    host_size: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def extrema_count(self) -> Optional[int]:
        return None if self.all_extrema is None else len(self.all_extrema)

    def to_json(self) -> dict:
        doc = {
            "n": self.params.n,
            "k": self.params.k,
            "pattern": self.pattern,
            "mode": self.mode,
            "host_size": self.host_size,
            "optimum": self.optimum,
            "witness": self.witness.to_sets(),
            "nodes_explored": self.nodes_explored,
            "notes": self.notes,
        }
        if self.all_extrema is not None:
            doc["extrema_count"] = len(self.all_extrema)
            doc["extrema_overflow"] = self.extrema_overflow
            doc["all_extrema"] = [f.to_sets() for f in self.all_extrema]
        return doc


def _lowbits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def anchor_representatives(g: PatternGraph) -> list[int]:
    """One vertex per automorphism orbit (all vertices when g is too big to enumerate)."""
    if g.m > 8:
        return list(range(g.m))
    autos = [
        p for p in permutations(range(g.m))
        if all((min(p[u], p[v]), max(p[u], p[v])) in g.edges for u, v in g.edges)
    ]
    reps, seen = [], set()
    for u in range(g.m):
        if u not in seen:
            reps.append(u)
            seen.update(p[u] for p in autos)
    return reps


def max_pattern_free(
    params: GroundParams,
    g: PatternGraph,
    enumerate_all: bool = False,
    host: Optional[Family] = None,
    mode: str = "branch_and_bound",
    enum_cap: int = ENUM_CAP,
    threads: int = 1,
) -> SearchCertificate:
    """Largest subfamily of ``host`` (default: all k-sets) whose Kneser graph avoids g."""
    if mode == "exhaustive_oracle":
        return exhaustive_oracle(params, g, host=host)
    if mode != "branch_and_bound":
        raise ValueError(f"unknown mode {mode!r}")
    host = host if host is not None else Family.full(params)
    if len(host) > BNB_CAP:
        raise InstanceTooLarge(f"{len(host)} members exceeds the branch-and-bound cap {BNB_CAP}")
    graph = induce(host)
    adj = graph.adj
    m = g.m
    per_clique = m - 1
    reps = anchor_representatives(g)

    def completes(chosen: int, c: int) -> bool:
        pool = chosen | (1 << c)
        return any(
            g.degree(u) <= (adj[c] & pool).bit_count()
            and find_embedding(adj, pool, g, anchor=(u, c)) is not None
            for u in reps
        )

    def bound(size: int, cand: int) -> int:
        if per_clique <= 0:
            return size
        return size + sum(min(cls.bit_count(), per_clique) for cls in clique_cover(adj, cand))

    # greedy lower bound
    chosen = 0
    for v in range(graph.order):
        if not completes(chosen, v):
            chosen |= 1 << v
    best = chosen.bit_count()
    best_sets: list[int] = [] if enumerate_all else [chosen]
    overflow = False
    nodes = 0

    def dfs(chosen: int, size: int, cand: int):
        nonlocal best, nodes, overflow
        nodes += 1
        b = bound(size, cand)
        if b < best or (b == best and not enumerate_all):
            return
        if not cand:
            if size > best:
                best = size
                best_sets.clear()
                overflow = False
            if enumerate_all:
                if len(best_sets) < enum_cap:
                    best_sets.append(chosen)
                else:
                    overflow = True
            else:
                best_sets[:] = [chosen]
            return
        low = cand & -cand
        rest = cand ^ low
        grown = chosen | low
        keep = 0
        for c in _lowbits(rest):
            if not completes(grown, c):
                keep |= 1 << c
        dfs(grown, size + 1, keep)
        dfs(chosen, size, rest)

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * graph.order + 1000))
    try:
        dfs(0, 0, graph.all_mask)
    finally:
        sys.setrecursionlimit(limit)

    families = [host.subfamily(_lowbits(s)) for s in best_sets]
    witness = families[0]
    cert = SearchCertificate(
        params, str(g), best, witness, "branch_and_bound", nodes,
        families if enumerate_all else None, overflow, len(host),
    )
    if threads > 1:
        cert.notes.append("deterministic sequential search; thread count ignored")
    return cert


# -- exhaustive oracle --------------------------------------------------------

def _spans_pattern(sets: list[frozenset], g: PatternGraph) -> bool:
    """Does the Kneser graph on exactly these m sets contain g? Tries every bijection."""
    for perm in permutations(range(len(sets))):
        if all(not (sets[perm[u]] & sets[perm[v]]) for u, v in g.edges):
            return True
    return False


def _lattice(host: Family):
    N = len(host)
    if N > ORACLE_CAP:
        raise InstanceTooLarge(f"{N} members exceeds the exhaustive cap {ORACLE_CAP}")
    pop = np.zeros(1 << N, dtype=np.uint8)
    for v in range(N):
        pop.reshape(-1, 2, 1 << v)[:, 1, :] += 1
    return N, pop


def _close_downward(free: np.ndarray, N: int):
    # free[S] := AND of free[T] over all T subset of S
    for v in range(N):
        view = free.reshape(-1, 2, 1 << v)
        view[:, 1, :] &= view[:, 0, :]


def _masks_to_family(host: Family, masks) -> list[Family]:
    return [host.subfamily(_lowbits(int(s))) for s in masks]


def exhaustive_oracle(
    params: GroundParams, g: PatternGraph, host: Optional[Family] = None, enum_cap: int = ENUM_CAP
) -> SearchCertificate:
    host = host if host is not None else Family.full(params)
    N, pop = _lattice(host)
    if g.m > ORACLE_MAX_PATTERN:
        raise InstanceTooLarge(f"oracle tries all bijections; pattern order {g.m} > {ORACLE_MAX_PATTERN}")
    sets = [frozenset(m.elements) for m in host.members]
    free = np.ones(1 << N, dtype=bool)
    for combo in combinations(range(N), g.m):
        if _spans_pattern([sets[i] for i in combo], g):
            free[sum(1 << i for i in combo)] = False
    _close_downward(free, N)
    sizes = np.where(free, pop, 0)
    best = int(sizes.max())
    optima = np.flatnonzero(free & (pop == best))
    overflow = len(optima) > enum_cap
    fams = _masks_to_family(host, optima[:enum_cap])
    return SearchCertificate(
        params, str(g), best, fams[0], "exhaustive_oracle", 1 << N, fams, overflow, N,
    )


# -- nontrivial intersecting families ----------------------------------------

def max_intersecting_nontrivial(
    params: GroundParams, mode: str = "branch_and_bound", host: Optional[Family] = None
) -> SearchCertificate:
    """Largest intersecting family contained in no star."""
    host = host if host is not None else Family.full(params)
    if mode == "exhaustive_oracle":
        return _nontrivial_oracle(params, host)
    if len(host) > BNB_CAP:
        raise InstanceTooLarge(f"{len(host)} members exceeds the branch-and-bound cap {BNB_CAP}")
    graph = induce(host)
    adj = graph.adj
    bits = [m.bits for m in host.members]
    n = params.n
    avoid = []
    for e in range(n):
        row = 0
        for i, b in enumerate(bits):
            if not b >> e & 1:
                row |= 1 << i
        avoid.append(row)
    best = 0
    best_set = 0
    nodes = 0

    def dfs(chosen: int, size: int, cand: int, common: int):
        nonlocal best, best_set, nodes
        nodes += 1
        if size + len(clique_cover(adj, cand)) <= best:
            return
        # every element still common to all chosen members must be avoided by a later one
        for e in _lowbits(common):
            if not cand & avoid[e]:
                return
        if not cand:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        rest = cand ^ low
        newc = common & bits[v]
        if not newc and size + 1 > best:
            best, best_set = size + 1, chosen | low
        dfs(chosen | low, size + 1, rest & ~adj[v], newc)
        dfs(chosen, size, rest, common)

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * graph.order + 1000))
    try:
        dfs(0, 0, graph.all_mask, (1 << n) - 1)
    finally:
        sys.setrecursionlimit(limit)
    witness = host.subfamily(_lowbits(best_set))
    return SearchCertificate(params, "K2 (nontrivial)", best, witness, "branch_and_bound", nodes, host_size=len(host))


def _nontrivial_oracle(params: GroundParams, host: Family) -> SearchCertificate:
    N, pop = _lattice(host)
    sets = [frozenset(m.elements) for m in host.members]
    free = np.ones(1 << N, dtype=bool)
    for i, j in combinations(range(N), 2):
        if not sets[i] & sets[j]:
            free[(1 << i) | (1 << j)] = False
    _close_downward(free, N)
    common = np.full(1 << N, (1 << params.n) - 1, dtype=np.uint64)
    for v, m in enumerate(host.members):
        view = common.reshape(-1, 2, 1 << v)
        view[:, 1, :] = view[:, 0, :] & np.uint64(m.bits)
    ok = free & (common == 0)
    if not ok.any():
        # no intersecting subfamily escapes every star; report the empty family
        empty = Family(params, ())
        return SearchCertificate(params, "K2 (nontrivial)", 0, empty, "exhaustive_oracle", 1 << N, [], False, N)
    sizes = np.where(ok, pop, 0)
    best = int(sizes.max())
    optima = np.flatnonzero(ok & (pop == best))
    fams = _masks_to_family(host, optima)
    return SearchCertificate(params, "K2 (nontrivial)", best, fams[0], "exhaustive_oracle", 1 << N, fams, False, N)


# -- equality structure -------------------------------------------------------

def verify_thm1_structure(family: Family, g: PatternGraph):
    """First (q-1)-set L (lexicographic) with |A minus C(L)| = eta-1 and outside part free of
    every special subgraph of g; returns (L, extras) or None."""
    from .bounds import thm1_bound

    params = family.params
    rep = thm1_bound(params.n, params.k, g)
    if len(family) != rep.bound:
        raise ValueError(f"family size {len(family)} differs from the bound {rep.bound}")
    stats = eta(g)
    specials = [sp.subgraph for sp in special_sets(g, minimal_only=True)]
    for L in combinations(range(1, params.n + 1), stats.q - 1):
        lmask = elements_to_bits(L)
        extras = [m for m in family.members if not m.bits & lmask]
        if len(extras) != stats.eta - 1:
            continue
        eg = induce(Family(params, tuple(extras)))
        if all(contains_pattern(eg, h) is None for h in specials):
            return L, tuple(extras)
    return None


def is_constellation(family: Family, size: int) -> Optional[tuple[int, ...]]:
    """The L with family == C(L) and |L| = size, if any."""
    params = family.params
    for L in combinations(range(1, params.n + 1), size):
        lmask = elements_to_bits(L)
        if len(family) == binom(params.n, params.k) - binom(params.n - size, params.k) and all(
            m.bits & lmask for m in family.members
        ):
            return L
    return None
