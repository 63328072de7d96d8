"""Immutable simple graphs on vertices 0..n-1 with bitset adjacency rows.

Vertex sets are plain Python ints used as bitmasks (bit v set means v is in
the set); public functions also accept any iterable of vertex ids.

Edge-list text format (the interchange format of the CLI)::

    n m
    u v        # m lines, 0 <= u < v < n

UTF-8, LF line endings, decimal integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from . import rng


class GraphFormatError(ValueError):
    """Base class for edge-list parse errors."""


class MalformedHeaderError(GraphFormatError):
    pass


class MalformedEdgeError(GraphFormatError):
    pass


class VertexRangeError(GraphFormatError):
    pass


class DuplicateEdgeError(GraphFormatError):
    pass


class SelfLoopError(GraphFormatError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Vertices of a bitmask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def to_mask(s: int | Iterable[int]) -> int:
    if isinstance(s, int):
        return s
    m = 0
    for v in s:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have n rows")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} has a neighbor outside 0..n-1")
            if row >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order."""
        for u, row in enumerate(self.adj):
            yield from ((u, v) for v in bits(row >> (u + 1) << (u + 1)))

    def complement(self) -> Graph:
        full = self.vertex_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))


@dataclass(frozen=True)
class GnpParams:
    n: int
    p: float
    seed: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("p must lie in [0, 1]")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def gnp_sample(params: GnpParams) -> Graph:
    """Sample G(n, p).

    Pairs are visited row-major, (0,1), (0,2), ..., (0,n-1), (1,2), ...; the
    i-th pair is an edge iff the i-th uniform of ``rng.uniforms(seed, .)``
    is below p.
    """
    n = params.n
    if n < 2:
        return Graph.empty(n)
    iu, ju = np.triu_indices(n, k=1)
    hit = rng.uniforms(params.seed, iu.size) < params.p
    mat = np.zeros((n, n), dtype=bool)
    mat[iu[hit], ju[hit]] = True
    mat |= mat.T
    packed = np.packbits(mat, axis=1, bitorder="little")
    return Graph(n, tuple(int.from_bytes(row.tobytes(), "little") for row in packed))


def induced_subgraph(g: Graph, s: int | Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``s``, relabeled in ascending order.

    Returns the subgraph and ``labels`` with ``labels[i]`` the original id of
    new vertex i.
    """
    mask = to_mask(s)
    if mask < 0 or mask >> g.n:
        raise IndexError("vertex set has a vertex outside 0..n-1")
    labels = tuple(bits(mask))
    pos = {v: i for i, v in enumerate(labels)}
    rows = []
    for v in labels:
        r = 0
        for u in bits(g.adj[v] & mask):
            r |= 1 << pos[u]
        rows.append(r)
    return Graph(len(labels), tuple(rows)), labels


def is_independent_set(g: Graph, s: int | Iterable[int]) -> bool:
    mask = to_mask(s)
    return all(not (g.adj[v] & mask) for v in bits(mask))


def is_induced_complete_bipartite(g: Graph, a: int | Iterable[int], b: int | Iterable[int]) -> bool:
    a, b = to_mask(a), to_mask(b)
    if not a or not b or a & b:
        return False
    if not is_independent_set(g, a) or not is_independent_set(g, b):
        return False
    return all(g.adj[v] & b == b for v in bits(a))


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _ints(line: str, lineno: int, err: type[GraphFormatError]) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise err(f"line {lineno}: expected two integers, got {line!r}")
    try:
        x, y = int(parts[0]), int(parts[1])
    except ValueError:
        raise err(f"line {lineno}: expected two integers, got {line!r}") from None
    return x, y


def parse_graph(text: str) -> Graph:
    lines = [ln for ln in text.split("\n") if ln.strip()]
    if not lines:
        raise MalformedHeaderError("empty input: missing 'n m' header")
    n, m = _ints(lines[0], 1, MalformedHeaderError)
    if n < 0 or m < 0:
        raise MalformedHeaderError("header values must be non-negative")
    body = lines[1:]
    if len(body) != m:
        raise MalformedHeaderError(f"header announces {m} edges but {len(body)} edge lines follow")
    rows = [0] * n
    for lineno, line in enumerate(body, start=2):
        u, v = _ints(line, lineno, MalformedEdgeError)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"line {lineno}: self-loop at {u}")
        if rows[u] >> v & 1:
            raise DuplicateEdgeError(f"line {lineno}: duplicate edge {min(u, v)} {max(u, v)}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))
