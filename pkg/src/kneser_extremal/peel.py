"""Constructive peeling of a family into skew-pair chains, with an independent verifier.

Each round builds a chain on the current family: take the colex-least edge
(A_1, B_1), delete N(A_1), take the colex-least edge of what is left, and so on
until the remainder is edgeless. The chain A-vertices then dominate every
non-isolated part of the round, so their neighbourhoods C cover at least
ell(round family) members, and the highest-degree chain A-vertex is removed.
Mirroring the chain gives a skew cross-intersecting sequence of 2m pairs,
which caps m at C(2k-1, k-1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .families import ell as ell_report
from .kneser import Family, InducedGraph, induce
from .mis import independence_number
from .setcore import FamilyMember, GroundParams, binom


def _lowbits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mirror(pairs: Sequence[tuple]) -> list[tuple]:
    """Extend (A_1,B_1)..(A_m,B_m) by (B_m,A_m)..(B_1,A_1)."""
    return list(pairs) + [(b, a) for a, b in reversed(pairs)]


@dataclass(frozen=True)
class SkewCheck:
    valid: bool
    h: int
    limit: int
    within_limit: bool
    failure: Optional[str] = None

    def __bool__(self):
        return self.valid


def verify_skew(pairs: Sequence[tuple[FamilyMember, FamilyMember]], k: int, l: int) -> SkewCheck:
    """A_i & B_i empty, A_i & B_j nonempty for i < j; also reports h <= C(k+l, k)."""
    for a, b in pairs:
        if a.bits.bit_count() != k or b.bits.bit_count() != l:
            raise ValueError(f"pair ({a}, {b}) does not have sizes ({k}, {l})")
    h = len(pairs)
    limit = binom(k + l, k)
    failure = None
    for j, (a, b) in enumerate(pairs):
        if a.bits & b.bits:
            failure = f"A_{j + 1} meets B_{j + 1}"
            break
        for i in range(j):
            if not pairs[i][0].bits & b.bits:
                failure = f"A_{i + 1} misses B_{j + 1}"
                break
        if failure:
            break
    return SkewCheck(failure is None, h, limit, h <= limit, failure)


@dataclass(frozen=True)
class PeelRound:
    chain: tuple[tuple[int, int], ...]  # (A_j, B_j) as member indices
    C: tuple[int, ...]
    chosen: int
    degree: int

    @property
    def m(self) -> int:
        return len(self.chain)


@dataclass(frozen=True)
class PeelTranscript:
    params: GroundParams
    rounds: tuple[PeelRound, ...]
    residual: tuple[int, ...]
    family: Optional[Family] = field(default=None, compare=False, repr=False)

    @property
    def p(self) -> int:
        return len(self.rounds)

    def chain_members(self, r: int, family: Family) -> list[tuple[FamilyMember, FamilyMember]]:
        return [(family[a], family[b]) for a, b in self.rounds[r].chain]

    def to_json(self) -> dict:
        fam = self.family
        return {
            "n": self.params.n,
            "k": self.params.k,
            "rounds": [
                {
                    "chain": [[list(fam[a].elements), list(fam[b].elements)] for a, b in rd.chain],
                    "m": rd.m,
                    "C": list(rd.C),
                    "chosen": rd.chosen,
                    "degree": rd.degree,
                }
                for rd in self.rounds
            ],
            "p": self.p,
            "residual": list(self.residual),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


class TranscriptError(ValueError):
    pass


def transcript_from_json(doc: dict, family: Family) -> PeelTranscript:
    """Rebuild a transcript against ``family``; chain members are looked up by content."""
    params = GroundParams(int(doc["n"]), int(doc["k"]))
    idx = family.index_of
    rounds = []
    for r, rd in enumerate(doc["rounds"]):
        chain = []
        for pair in rd["chain"]:
            ids = []
            for elems in pair:
                m = FamilyMember.of(params, elems)
                if m.bits not in idx:
                    raise TranscriptError(f"round {r + 1}: chain member {m} not in family")
                ids.append(idx[m.bits])
            chain.append(tuple(ids))
        if int(rd.get("m", len(chain))) != len(chain):
            raise TranscriptError(f"round {r + 1}: m={rd['m']} but chain has {len(chain)} pairs")
        rounds.append(PeelRound(tuple(chain), tuple(rd["C"]), int(rd["chosen"]), int(rd["degree"])))
    if "p" in doc and int(doc["p"]) != len(rounds):
        raise TranscriptError(f"p={doc['p']} but {len(rounds)} rounds listed")
    return PeelTranscript(params, tuple(rounds), tuple(doc["residual"]), family)


def _build_chain(adj: Sequence[int], current: int) -> tuple[list[tuple[int, int]], int]:
    """One chain on G[current]; returns (pairs, mask of all neighbours of chain A-vertices)."""
    chain = []
    B = current
    covered = 0
    while True:
        edge = None
        for a in _lowbits(B):
            nb = adj[a] & B
            if nb:
                edge = (a, (nb & -nb).bit_length() - 1)
                break
        if edge is None:
            break
        a = edge[0]
        chain.append(edge)
        covered |= adj[a] & current
        B &= ~adj[a]
    return chain, covered


def peel_decompose(family: Family, graph: InducedGraph | None = None) -> PeelTranscript:
    g = graph or induce(family)
    adj = g.adj
    current = g.all_mask
    rounds = []
    while any(adj[v] & current for v in _lowbits(current)):
        chain, covered = _build_chain(adj, current)
        best_v, best_d = -1, -1
        for a, _ in chain:
            d = (adj[a] & current).bit_count()
            if d > best_d or (d == best_d and a < best_v):
                best_v, best_d = a, d
        rounds.append(PeelRound(tuple(chain), tuple(_lowbits(covered)), best_v, best_d))
        current &= ~(1 << best_v)
    return PeelTranscript(family.params, tuple(rounds), tuple(_lowbits(current)), family)


def verify_transcript(t: PeelTranscript, family: Family, exact_round_ell: bool = False) -> tuple[bool, Optional[str]]:
    """Re-check a transcript from scratch; returns (ok, name of first failed check).

    The per-round bound |C_i| >= ell(round family) is certified by checking that
    the round family minus C_i is intersecting; ``exact_round_ell`` additionally
    computes ell for every round.
    """
    if t.params != family.params:
        return False, "params"
    k = family.params.k
    nfam = len(family)
    bits = [m.bits for m in family.members]
    chain_cap = binom(2 * k - 1, k - 1)

    def disjoint(i, j):
        return not bits[i] & bits[j]

    current = set(range(nfam))
    edges_total = sum(1 for i in range(nfam) for j in range(i + 1, nfam) if disjoint(i, j))

    def has_edge(vs):
        vs = sorted(vs)
        return any(disjoint(a, b) for x, a in enumerate(vs) for b in vs[x + 1:])

    degree_sum = 0
    for r, rd in enumerate(t.rounds, start=1):
        if not has_edge(current):
            return False, "round on edgeless family"
        m = len(rd.chain)
        if m == 0:
            return False, "empty chain"
        if any(v not in current for pair in rd.chain for v in pair):
            return False, "chain member removed earlier"
        if m > chain_cap:
            return False, "chain length"
        pairs = [(family[a], family[b]) for a, b in rd.chain]
        skew = verify_skew(mirror(pairs), k, k)
        if not skew.valid:
            return False, "skew condition"
        if not skew.within_limit:
            return False, "chain length"
        A = [a for a, _ in rd.chain]
        nbrs = {v for v in current for a in A if disjoint(v, a)}
        if has_edge(current - nbrs):
            return False, "chain maximality"
        if set(rd.C) != nbrs:
            return False, "neighbor set"
        if exact_round_ell:
            sub = family.subfamily(current)
            if len(rd.C) < ell_report(sub).ell:
                return False, "C below ell"
        if rd.chosen not in A:
            return False, "chosen vertex"
        deg = sum(1 for v in current if disjoint(v, rd.chosen))
        if rd.degree != deg:
            return False, "chosen degree"
        if any(sum(1 for v in current if disjoint(v, a)) > deg for a in A):
            return False, "chosen maximality"
        if deg * m < len(rd.C):
            return False, "degree average"
        degree_sum += deg
        current.discard(rd.chosen)
    if set(t.residual) != current:
        return False, "residual"
    if has_edge(current):
        return False, "residual intersecting"
    if degree_sum > edges_total:
        return False, "degree sum"
    rep = ell_report(family)
    if t.p < rep.ell:
        return False, "round count"
    r = binom(2 * k, k)
    if edges_total * r < rep.ell * rep.ell:
        return False, "edge lower bound"
    return True, None


@dataclass(frozen=True)
class HMChain:
    chain: tuple[tuple[int, int], ...]
    C: tuple[int, ...]
    max_degree: int
    chain_cap: int
    degree_condition: bool  # max degree <= t-1
    c_within_bound: Optional[bool]  # |C| <= (t-1)m, only meaningful under degree_condition
    remainder_intersecting: bool

    @property
    def m(self) -> int:
        return len(self.chain)

    @property
    def m_within_bound(self) -> bool:
        return self.m <= self.chain_cap


def hm_chain(family: Family, t: int) -> HMChain:
    """Single chain on the whole family, as used for (1,t)-union intersecting families."""
    g = induce(family)
    chain, covered = _build_chain(g.adj, g.all_mask)
    maxdeg = max((g.degree(i) for i in range(g.order)), default=0)
    m = len(chain)
    cond = maxdeg <= t - 1
    c_ok = covered.bit_count() <= (t - 1) * m if cond else None
    rest = g.all_mask & ~covered
    remainder_ok = not any(g.adj[v] & rest for v in _lowbits(rest))
    k = family.params.k
    return HMChain(tuple(chain), tuple(_lowbits(covered)), maxdeg, binom(2 * k - 1, k - 1), cond, c_ok, remainder_ok)


def round_ells(t: PeelTranscript, family: Family) -> list[int]:
    """ell of each round's family, computed exactly (diagnostics only)."""
    g = induce(family)
    current = g.all_mask
    out = []
    for rd in t.rounds:
        alpha, _ = independence_number(g.adj, current)
        out.append(current.bit_count() - alpha)
        current &= ~(1 << rd.chosen)
    return out
