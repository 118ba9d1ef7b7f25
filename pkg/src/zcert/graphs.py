"""Immutable simple undirected graphs with bitset adjacency and a graph6 codec.

Vertices are dense integers 0..n-1. Adjacency is stored as one Python int
bitmask per vertex, which keeps neighbourhood intersection, set difference
and degree computation down to single integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Invalid graph construction input."""


class Graph6Error(ValueError):
    """Malformed graph6 text."""


GRAPH6_HEADER = ">>graph6<<"
_G6_MAX_N = 62  # short form only


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[u]`` is the neighbour bitmask of u."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        n, adj = self.n, self.adj
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        if len(adj) != n:
            raise GraphError(f"adjacency length {len(adj)} != n={n}")
        full = (1 << n) - 1
        for u, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"adj[{u}] has bits outside 0..{n - 1}")
            if row >> u & 1:
                raise GraphError(f"self-loop at vertex {u}")
        # symmetry check after every construction
        for u, row in enumerate(adj):
            m = row
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                if not (adj[v] >> u) & 1:
                    raise GraphError(f"asymmetric edge ({u}, {v})")

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError("endpoint out of range")
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                yield (u, v)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from unordered vertex pairs; duplicate edges collapse."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {u}) not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of a vertex bitmask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def strip_graph6_header(text: str) -> str:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    return s


def parse_graph6(text: str) -> Graph:
    """Decode one short-form graph6 string (n <= 62)."""
    s = strip_graph6_header(text)
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range 63..126")
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error("long-form graph6 length header not supported")
    body = s[1:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise Graph6Error(
            f"bit field length {len(body)} chars, expected {need} for n={n}")
    adj = [0] * n
    pos = 0  # index into the upper-triangle bit sequence
    for ch in body:
        group = ord(ch) - 63
        for shift in range(5, -1, -1):
            if pos >= nbits:
                if group >> shift & 1:
                    raise Graph6Error("nonzero padding bits")
                continue
            if group >> shift & 1:
                u, v = _triangle_pair(pos)
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            pos += 1
    return Graph(n, tuple(adj))


def _triangle_pair(pos: int) -> tuple[int, int]:
    # graph6 orders upper-triangle cells column by column:
    # (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
    v = 1
    while v * (v - 1) // 2 + v <= pos:
        v += 1
    u = pos - v * (v - 1) // 2
    return u, v


def to_graph6(g: Graph) -> str:
    """Encode a graph in short-form graph6; round-trips with parse_graph6."""
    if g.n > _G6_MAX_N:
        raise Graph6Error(f"n={g.n} exceeds short-form graph6 limit {_G6_MAX_N}")
    out = [chr(g.n + 63)]
    group = 0
    filled = 0
    for v in range(1, g.n):
        for u in range(v):
            group = group << 1 | (g.adj[u] >> v & 1)
            filled += 1
            if filled == 6:
                out.append(chr(group + 63))
                group, filled = 0, 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)
