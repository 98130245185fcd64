"""Families of k-sets and the Kneser subgraphs they induce."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

from .setcore import FamilyMember, GroundParams, enumerate_all


class FormatError(ValueError):
    """Malformed input file; the message carries the offending line number."""


@dataclass(frozen=True)
class Family:
    params: GroundParams
    members: tuple[FamilyMember, ...]

    def __post_init__(self):
        prev = -1
        for m in self.members:
            if m.params != self.params:
                raise ValueError(f"member {m} has params {m.params}, family has {self.params}")
            if m.bits <= prev:
                raise ValueError("members must be strictly increasing in colex order")
            prev = m.bits

    @classmethod
    def from_members(cls, params: GroundParams, members: Iterable[FamilyMember]) -> "Family":
        ms = sorted(members)
        for a, b in zip(ms, ms[1:]):
            if a.bits == b.bits:
                raise ValueError(f"duplicate member {a}")
        return cls(params, tuple(ms))

    @classmethod
    def from_sets(cls, params: GroundParams, sets: Iterable[Iterable[int]]) -> "Family":
        return cls.from_members(params, (FamilyMember.of(params, s) for s in sets))

    @classmethod
    def full(cls, params: GroundParams) -> "Family":
        return cls(params, tuple(enumerate_all(params)))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]

    @cached_property
    def index_of(self) -> dict[int, int]:
        return {m.bits: i for i, m in enumerate(self.members)}

    def subfamily(self, indices: Iterable[int]) -> "Family":
        return Family(self.params, tuple(self.members[i] for i in sorted(set(indices))))

    def to_sets(self) -> list[list[int]]:
        return [list(m.elements) for m in self.members]


def adjacent(a: FamilyMember, b: FamilyMember) -> bool:
    if a.params != b.params:
        raise ValueError(f"params mismatch: {a.params} vs {b.params}")
    return not (a.bits & b.bits)


@dataclass(frozen=True)
class InducedGraph:
    """KG_{n,k}[family]; ``adj[i]`` is a bitset over member indices."""

    family: Family
    edges: tuple[tuple[int, int], ...]
    adj: tuple[int, ...] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.adj)

    @property
    def all_mask(self) -> int:
        return (1 << len(self.adj)) - 1

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def induce(family: Family) -> InducedGraph:
    bits = [m.bits for m in family.members]
    n = len(bits)
    adj = [0] * n
    edges = []
    for i in range(n):
        bi = bits[i]
        row = 0
        for j in range(i + 1, n):
            if not bi & bits[j]:
                row |= 1 << j
                adj[j] |= 1 << i
                edges.append((i, j))
        adj[i] |= row
    return InducedGraph(family, tuple(edges), tuple(adj))


def degree_in_family(family: Family, idx: int) -> int:
    if not 0 <= idx < len(family):
        raise IndexError(f"member index {idx} out of range for family of size {len(family)}")
    b = family.members[idx].bits
    return sum(1 for m in family.members if not m.bits & b)


# -- family file format -------------------------------------------------------
# line 1: "n k"; each further line: one member, strictly increasing elements.

def parse_family(text: str) -> Family:
    lines = text.splitlines()
    rows = [(no, ln.split()) for no, ln in enumerate(lines, start=1) if ln.strip()]
    if not rows:
        raise FormatError("line 1: empty family file, expected header 'n k'")
    no, head = rows[0]
    try:
        n, k = (int(x) for x in head)
        params = GroundParams(n, k)
    except ValueError as exc:
        raise FormatError(f"line {no}: bad header {' '.join(head)!r}: {exc}") from None
    seen: dict[int, int] = {}
    members = []
    for no, toks in rows[1:]:
        try:
            elems = [int(x) for x in toks]
        except ValueError:
            raise FormatError(f"line {no}: non-integer token in {' '.join(toks)!r}") from None
        if any(b <= a for a, b in zip(elems, elems[1:])):
            raise FormatError(f"line {no}: elements must be strictly increasing")
        try:
            m = FamilyMember.of(params, elems)
        except ValueError as exc:
            raise FormatError(f"line {no}: {exc}") from None
        if m.bits in seen:
            raise FormatError(f"line {no}: duplicate of line {seen[m.bits]}")
        seen[m.bits] = no
        members.append(m)
    return Family.from_members(params, members)


def format_family(family: Family) -> str:
    out = [f"{family.params.n} {family.params.k}"]
    out += [" ".join(map(str, m.elements)) for m in family.members]
    return "\n".join(out) + "\n"


def read_family(path: str | Path) -> Family:
    return parse_family(Path(path).read_text())


def write_family(family: Family, path: str | Path) -> None:
    Path(path).write_text(format_family(family))


def members_from_indices(family: Family, indices: Sequence[int]) -> list[FamilyMember]:
    return [family.members[i] for i in indices]
