"""Forbidden pattern graphs: chromatic number, eta, special sets, containment."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .kneser import FormatError, InducedGraph

MAX_ORDER = 12


@dataclass(frozen=True)
class PatternGraph:
    """Simple graph on vertices ``0..m-1``; edges stored as sorted pairs."""

    m: int
    edges: frozenset[tuple[int, int]]
    name: str = ""

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("pattern needs at least one vertex")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < v < self.m):
                raise ValueError(f"bad edge {(u, v)} for order {self.m}")

    @classmethod
    def from_edges(cls, m: int, edges: Iterable[tuple[int, int]], name: str = "") -> "PatternGraph":
        es = frozenset((min(u, v), max(u, v)) for u, v in edges)
        return cls(m, es, name)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        rows = [0] * self.m
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def induced(self, vertices: Sequence[int]) -> "PatternGraph":
        vs = sorted(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        es = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        label = f"{self.name or 'G'}[{','.join(str(v + 1) for v in vs)}]"
        return PatternGraph.from_edges(len(vs), es, label)

    def __str__(self):
        return self.name or f"G(m={self.m}, |E|={len(self.edges)})"


def complete(m: int) -> PatternGraph:
    return PatternGraph.from_edges(m, combinations(range(m), 2), f"K{m}")


def complete_bipartite(s: int, t: int) -> PatternGraph:
    es = [(i, s + j) for i in range(s) for j in range(t)]
    return PatternGraph.from_edges(s + t, es, f"K_{{{s},{t}}}")


def path(m: int) -> PatternGraph:
    return PatternGraph.from_edges(m, [(i, i + 1) for i in range(m - 1)], f"P{m}")


def cycle(m: int) -> PatternGraph:
    if m < 3:
        raise ValueError("cycles need at least 3 vertices")
    return PatternGraph.from_edges(m, [(i, (i + 1) % m) for i in range(m)], f"C{m}")


def edgeless(m: int) -> PatternGraph:
    return PatternGraph.from_edges(m, [], f"E{m}")


_NAMED = [
    (re.compile(r"K_?\{?(\d+)\s*,\s*(\d+)\}?$"), lambda a, b: complete_bipartite(int(a), int(b))),
    (re.compile(r"K_?\{?(\d+)\}?$"), lambda a: complete(int(a))),
    (re.compile(r"P_?\{?(\d+)\}?$"), lambda a: path(int(a))),
    (re.compile(r"C_?\{?(\d+)\}?$"), lambda a: cycle(int(a))),
    (re.compile(r"E_?\{?(\d+)\}?$"), lambda a: edgeless(int(a))),
]


def parse_pattern_name(source: str) -> PatternGraph:
    """Named shorthand: K3, K_{2,3}, K2,3, C5, P4, E3."""
    s = source.strip()
    for rx, make in _NAMED:
        mt = rx.match(s)
        if mt:
            return make(*mt.groups())
    raise ValueError(f"unknown pattern name {source!r}")


def parse_pattern_file(text: str) -> PatternGraph:
    rows = [(no, ln.split()) for no, ln in enumerate(text.splitlines(), start=1) if ln.strip()]
    if not rows:
        raise FormatError("line 1: empty pattern file, expected vertex count")
    no, head = rows[0]
    try:
        (m,) = (int(x) for x in head)
    except ValueError:
        raise FormatError(f"line {no}: expected a single vertex count") from None
    if not 1 <= m:
        raise FormatError(f"line {no}: vertex count must be positive")
    edges = []
    for no, toks in rows[1:]:
        try:
            u, v = (int(x) for x in toks)
        except ValueError:
            raise FormatError(f"line {no}: expected 'u v'") from None
        if not (1 <= u <= m and 1 <= v <= m) or u == v:
            raise FormatError(f"line {no}: bad edge {u} {v}")
        edges.append((u - 1, v - 1))
    return PatternGraph.from_edges(m, edges)


def load_pattern(source: str) -> PatternGraph:
    """A named shorthand, or a path to a pattern file."""
    try:
        return parse_pattern_name(source)
    except ValueError:
        p = Path(source)
        if p.is_file():
            g = parse_pattern_file(p.read_text())
            return PatternGraph(g.m, g.edges, p.stem)
        raise


# -- colouring ----------------------------------------------------------------

def _check_order(g: PatternGraph):
    if g.m > MAX_ORDER:
        raise ValueError(f"pattern order {g.m} exceeds {MAX_ORDER}")


def _clique_number(adj: Sequence[int], mask: int) -> int:
    best = 0

    def grow(size, cand):
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            grow(size + 1, cand & adj[v])

    grow(0, mask)
    return best


def _colour(adj: Sequence[int], mask: int, q: int) -> Optional[list[int]]:
    """Proper colouring of G[mask] with at most q colours as class bitmasks, or None."""
    classes = [0] * q
    verts = sorted(_bits(mask), key=lambda v: -(adj[v] & mask).bit_count())

    def place(i, used):
        if i == len(verts):
            return True
        v = verts[i]
        # symmetry: a fresh colour is only tried once
        for c in range(min(used + 1, q)):
            if not classes[c] & adj[v]:
                classes[c] |= 1 << v
                if place(i + 1, max(used, c + 1)):
                    return True
                classes[c] ^= 1 << v
        return False

    return classes if place(0, 0) else None


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@lru_cache(maxsize=None)
def _chi_masked(adj: tuple[int, ...], mask: int) -> int:
    if not mask:
        return 0
    q = max(1, _clique_number(adj, mask))
    while _colour(adj, mask, q) is None:
        q += 1
    return q


def chromatic_number(g: PatternGraph) -> int:
    _check_order(g)
    return _chi_masked(g.adj, (1 << g.m) - 1)


@dataclass(frozen=True)
class ColoringStats:
    q: int
    eta: int
    classes: tuple[tuple[int, ...], ...]  # witness colouring, smallest class first


def eta(g: PatternGraph) -> ColoringStats:
    """Smallest colour class over all proper chi(G)-colourings, with a witness.

    A class of a chi(G)-colouring is an independent set I with chi(G - I) = chi(G) - 1,
    and every such I extends to one; so eta is the least size of such an I.
    """
    _check_order(g)
    full = (1 << g.m) - 1
    q = _chi_masked(g.adj, full)
    for size in range(1, g.m + 1):
        for I in combinations(range(g.m), size):
            imask = sum(1 << v for v in I)
            if any(g.adj[v] & imask for v in I):
                continue
            rest = full & ~imask
            if _chi_masked(g.adj, rest) <= q - 1:
                others = _colour(g.adj, rest, q - 1) if rest else []
                classes = [tuple(I)] + [tuple(_bits(c)) for c in others if c]
                return ColoringStats(q, size, tuple(classes))
    raise AssertionError("unreachable: a chi-colouring always exists")


@dataclass(frozen=True)
class SpecialSet:
    vertices: tuple[int, ...]
    subgraph: PatternGraph


def special_sets(g: PatternGraph, minimal_only: bool = True) -> list[SpecialSet]:
    """Vertex sets S with chi(G - S) = chi(G) - 1, ordered by (size, vertices)."""
    _check_order(g)
    full = (1 << g.m) - 1
    q = _chi_masked(g.adj, full)
    found: list[int] = []
    for size in range(1, g.m + 1):
        for S in combinations(range(g.m), size):
            smask = sum(1 << v for v in S)
            if minimal_only and any(f & smask == f for f in found):
                continue
            if _chi_masked(g.adj, full & ~smask) == q - 1:
                found.append(smask)
    return [SpecialSet(tuple(_bits(s)), g.induced(_bits(s))) for s in found]


# -- containment --------------------------------------------------------------

def find_embedding(
    host_adj: Sequence[int],
    pool: int,
    g: PatternGraph,
    anchor: Optional[tuple[int, int]] = None,
) -> Optional[tuple[int, ...]]:
    """Injective, edge-preserving map V(g) -> host vertices inside ``pool``.

    Without an anchor, pattern vertices are placed in order 0..m-1 trying host
    vertices in increasing order, so the first map found is the lexicographically
    least. ``anchor=(u, v)`` forces pattern vertex u onto host vertex v.
    """
    m = g.m
    if pool.bit_count() < m:
        return None
    if anchor is None:
        order = list(range(m))
    else:
        order = _connected_order(g, anchor[0])
    pdeg = [g.degree(u) for u in range(m)]
    image = [-1] * m
    placed_nbrs = [[w for w in order[:i] if g.adj[u] >> w & 1] for i, u in enumerate(order)]

    def extend(i, used):
        if i == m:
            return True
        u = order[i]
        if anchor is not None and i == 0:
            cands = (1 << anchor[1]) & pool
        else:
            cands = pool & ~used
            for w in placed_nbrs[i]:
                cands &= host_adj[image[w]]
        need = pdeg[u]
        while cands:
            low = cands & -cands
            v = low.bit_length() - 1
            cands ^= low
            if need and (host_adj[v] & pool).bit_count() < need:
                continue
            image[u] = v
            if extend(i + 1, used | low):
                return True
        image[u] = -1
        return False

    return tuple(image) if extend(0, 0) else None


def _connected_order(g: PatternGraph, start: int) -> list[int]:
    # BFS from the anchor so later vertices always have a placed neighbour when possible
    order: list[int] = []
    seen: set[int] = set()
    for root in [start, *range(g.m)]:
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for v in _bits(g.adj[u]):
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return order


def contains_pattern(graph: InducedGraph, g: PatternGraph) -> Optional[tuple[int, ...]]:
    """Lexicographically least subgraph (non-induced) embedding of g, or None."""
    return find_embedding(graph.adj, graph.all_mask, g)


def free_of_special(graph: InducedGraph, g: PatternGraph) -> Optional[SpecialSet]:
    """None if the graph avoids every special subgraph of g, else the first one found."""
    for sp in special_sets(g, minimal_only=True):
        if contains_pattern(graph, sp.subgraph) is not None:
            return sp
    return None
