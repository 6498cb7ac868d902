"""Three-vertex hypergraphs encoded as bitmasks.

A hyperedge is a subset of V = {A, B, C} stored as a 3-bit mask with
A -> bit 2, B -> bit 1, C -> bit 0.  A hypergraph is a set of hyperedges
stored as an 8-bit mask: bit m is set iff the hyperedge with vertex mask m
is present.  The empty hyperedge (mask 0) is a legitimate edge.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

VERTICES = ("A", "B", "C")
VERTEX_BIT = {"A": 2, "B": 1, "C": 0}

EMPTY_TOKEN = "{}"
FULL_EDGE = 0b111

EdgeLike = Union[int, str, Iterable[str]]


class HypergraphParseError(ValueError):
    """Raised for malformed hypergraph text; ``token`` names the offender."""

    def __init__(self, message: str, token: str):
        super().__init__(message)
        self.token = token


class LUClass(str, enum.Enum):
    G0 = "G0"
    G1 = "G1"
    G2 = "G2"
    G3 = "G3"
    G4 = "G4"
    G5 = "G5"

    def __str__(self) -> str:
        return self.value


def vertex_index(q: str) -> int:
    """Position of a vertex in the A < B < C order."""
    try:
        return VERTICES.index(q)
    except ValueError:
        raise ValueError(f"unknown vertex {q!r}") from None


def edge_mask(e: EdgeLike) -> int:
    """Coerce a hyperedge given as mask, token string or letter collection."""
    if isinstance(e, bool):
        raise TypeError("hyperedge cannot be a bool")
    if isinstance(e, int):
        if not 0 <= e <= FULL_EDGE:
            raise ValueError(f"hyperedge mask out of range: {e}")
        return e
    if isinstance(e, str):
        return _parse_token(e)
    mask = 0
    for v in e:
        if v not in VERTEX_BIT:
            raise ValueError(f"unknown vertex {v!r}")
        mask |= 1 << VERTEX_BIT[v]
    return mask


def edge_letters(mask: int) -> str:
    """Canonical token for a hyperedge mask, ``"{}"`` for the empty edge."""
    letters = "".join(v for v in VERTICES if mask >> VERTEX_BIT[v] & 1)
    return letters or EMPTY_TOKEN


def edge_size(mask: int) -> int:
    return bin(mask).count("1")


def _edge_sort_key(mask: int) -> tuple[int, str]:
    return edge_size(mask), edge_letters(mask)


def _parse_token(token: str) -> int:
    if token == EMPTY_TOKEN:
        return 0
    if not token:
        raise HypergraphParseError("empty edge token", token)
    mask = 0
    for ch in token:
        if ch not in VERTEX_BIT:
            raise HypergraphParseError(
                f"bad edge token {token!r}: unknown vertex {ch!r}", token)
        bit = 1 << VERTEX_BIT[ch]
        if mask & bit:
            raise HypergraphParseError(
                f"bad edge token {token!r}: repeated vertex {ch!r}", token)
        mask |= bit
    return mask


@dataclass(frozen=True, order=True)
class Hypergraph:
    """Hypergraph on {A, B, C}; ``mask`` is the 8-bit edge-set encoding."""

    mask: int = 0

    def __post_init__(self):
        if not isinstance(self.mask, int) or not 0 <= self.mask <= 0xFF:
            raise ValueError(f"hypergraph mask out of range: {self.mask!r}")

    @classmethod
    def from_edges(cls, edges: Iterable[EdgeLike]) -> "Hypergraph":
        """Build from hyperedges; duplicates are rejected, not merged."""
        mask = 0
        for e in edges:
            bit = 1 << edge_mask(e)
            if mask & bit:
                raise ValueError(f"duplicate hyperedge {edge_letters(edge_mask(e))}")
            mask |= bit
        return cls(mask)

    @property
    def edges(self) -> frozenset[int]:
        return frozenset(m for m in range(8) if self.mask >> m & 1)

    def sorted_edges(self) -> list[int]:
        return sorted(self.edges, key=_edge_sort_key)

    def __contains__(self, e: EdgeLike) -> bool:
        return bool(self.mask >> edge_mask(e) & 1)

    def __len__(self) -> int:
        return edge_size(self.mask)

    def __add__(self, other: Iterable[EdgeLike]) -> "Hypergraph":
        return edge_sum(self, other)

    def __str__(self) -> str:
        return format_hypergraph(self)


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the canonical text form, e.g. ``"CB;ABC;{}"``.

    Tokens are separated by ``;``.  Letter order inside a token and token
    order are irrelevant; the empty string is the edgeless hypergraph.
    """
    if text == "":
        return Hypergraph(0)
    mask = 0
    for token in text.split(";"):
        m = _parse_token(token)
        if mask >> m & 1:
            raise HypergraphParseError(
                f"duplicate edge token {token!r}", token)
        mask |= 1 << m
    return Hypergraph(mask)


def format_hypergraph(g: Hypergraph) -> str:
    """Canonical text: edges by (cardinality, alphabetical), ``;``-joined."""
    return ";".join(edge_letters(m) for m in g.sorted_edges())


def edge_sum(g: Hypergraph, F: Iterable[EdgeLike]) -> Hypergraph:
    """``g + F``: symmetric difference of the edge sets."""
    if isinstance(F, Hypergraph):
        return Hypergraph(g.mask ^ F.mask)
    fmask = 0
    for e in F:
        fmask |= 1 << edge_mask(e)
    return Hypergraph(g.mask ^ fmask)


def enumerate_all() -> Iterator[Hypergraph]:
    """All 256 hypergraphs in increasing mask order."""
    for mask in range(256):
        yield Hypergraph(mask)


_PAIR_CLASS = {
    edge_mask("BC"): LUClass.G1,
    edge_mask("AC"): LUClass.G2,
    edge_mask("AB"): LUClass.G3,
}


def lu_class_of(g: Hypergraph) -> LUClass:
    """LU class from the edge structure alone.

    Edges of size 0 or 1 never change the class; the full edge ABC forces
    G5; otherwise the number of two-vertex edges decides.
    """
    if g.mask >> FULL_EDGE & 1:
        return LUClass.G5
    pairs = [m for m in g.edges if edge_size(m) == 2]
    if not pairs:
        return LUClass.G0
    if len(pairs) == 1:
        return _PAIR_CLASS[pairs[0]]
    return LUClass.G4


def is_graph(g: Hypergraph) -> bool:
    """True iff every edge has exactly two vertices."""
    return all(edge_size(m) == 2 for m in g.edges)
