"""Exact maximum independent set on bitset adjacency.

Independent sets of G are cliques of the complement, so this is the bitset
max-clique scheme (greedy colour sort as bound) run on the complement: colour
classes become cliques of G and the number of classes bounds alpha.
"""

from __future__ import annotations

from typing import Sequence


def _lowbits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def clique_cover(adj: Sequence[int], pool: int) -> list[int]:
    """Greedy partition of ``pool`` into cliques of G, lowest index first."""
    classes = []
    rest = pool
    while rest:
        cls = 0
        q = rest
        while q:
            low = q & -q
            v = low.bit_length() - 1
            cls |= low
            q &= adj[v]
        classes.append(cls)
        rest &= ~cls
    return classes


def _cover_sort(adj, pool):
    """Vertices of pool with their cover-class number (1-based), classes ascending."""
    verts, bounds = [], []
    rest = pool
    c = 0
    while rest:
        c += 1
        q = rest
        while q:
            bit = q & -q
            v = bit.bit_length() - 1
            verts.append(v)
            bounds.append(c)
            rest &= ~bit
            q &= adj[v] & ~bit
    return verts, bounds


def independence_number(adj: Sequence[int], pool: int | None = None) -> tuple[int, int]:
    """Return ``(alpha, nodes)`` for G[pool]."""
    n = len(adj)
    if pool is None:
        pool = (1 << n) - 1
    if not pool:
        return 0, 0
    # relabel vertices by non-decreasing degree: low-degree vertices are the
    # likely members of big independent sets and get branched on last
    verts = sorted(_lowbits(pool), key=lambda v: ((adj[v] & pool).bit_count(), v))
    pos = {v: i for i, v in enumerate(verts)}
    m = len(verts)
    radj = [0] * m
    for i, v in enumerate(verts):
        row = 0
        for w in _lowbits(adj[v] & pool):
            row |= 1 << pos[w]
        radj[i] = row
    full = (1 << m) - 1
    non_nbr = [full & ~radj[i] & ~(1 << i) for i in range(m)]

    best = 0
    nodes = 0

    def expand(size, P):
        nonlocal best, nodes
        nodes += 1
        verts_, bounds_ = _cover_sort(radj, P)
        for idx in range(len(verts_) - 1, -1, -1):
            if size + bounds_[idx] <= best:
                return
            v = verts_[idx]
            newP = P & non_nbr[v]
            if newP:
                expand(size + 1, newP)
            elif size + 1 > best:
                best = size + 1
            P &= ~(1 << v)

    expand(0, full)
    return best, nodes


def lex_least_mis(adj: Sequence[int], pool: int, alpha: int) -> tuple[int, ...]:
    """Lexicographically least (sorted index tuple) independent set of size alpha.

    Include-first DFS over indices in increasing order visits equal-size sets
    in lexicographic order, so the first hit is the least one.
    """
    chosen: list[int] = []

    def dfs(P, size):
        if size == alpha:
            return True
        if size + len(clique_cover(adj, P)) < alpha:
            return False
        low = P & -P
        v = low.bit_length() - 1
        chosen.append(v)
        if dfs(P & ~adj[v] & ~low, size + 1):
            return True
        chosen.pop()
        return dfs(P & ~low, size)

    if alpha == 0:
        return ()
    if not dfs(pool, 0):
        raise ValueError(f"no independent set of size {alpha}")
    return tuple(chosen)


def maximum_independent_set(adj: Sequence[int], pool: int | None = None) -> tuple[int, tuple[int, ...], int]:
    """``(alpha, lexicographically least maximum independent set, nodes)``."""
    if pool is None:
        pool = (1 << len(adj)) - 1
    alpha, nodes = independence_number(adj, pool)
    return alpha, lex_least_mis(adj, pool, alpha), nodes
