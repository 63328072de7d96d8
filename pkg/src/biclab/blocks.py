"""Complete bipartite blocks, decompositions, sparse covers and their
certificate text format.

Certificate format, one record per line::

    KIND any|nontrivial
    BLOCK a=<ids> b=<ids>
    COVER isolated=<ids> c4=<ids;ids;...>

``<ids>`` is a comma separated ascending list of vertex ids (possibly
empty).  A decomposition certificate is an optional ``KIND`` line followed
by its ``BLOCK`` lines; a sparse cover is a single ``COVER`` line.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .graph import Graph, bits, popcount, to_mask


@dataclass(frozen=True)
class BipartiteBlock:
    a: frozenset[int]
    b: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "a", frozenset(self.a))
        object.__setattr__(self, "b", frozenset(self.b))
        if not self.a or not self.b:
            raise ValueError("both classes must be nonempty")
        if self.a & self.b:
            raise ValueError("classes must be disjoint")

    @classmethod
    def from_masks(cls, a: int, b: int) -> BipartiteBlock:
        return cls(frozenset(bits(a)), frozenset(bits(b)))

    @property
    def a_mask(self) -> int:
        return to_mask(self.a)

    @property
    def b_mask(self) -> int:
        return to_mask(self.b)

    @property
    def n_edges(self) -> int:
        return len(self.a) * len(self.b)

    @property
    def is_star(self) -> bool:
        return min(len(self.a), len(self.b)) == 1

    @property
    def is_nontrivial(self) -> bool:
        return min(len(self.a), len(self.b)) >= 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in self.a:
            for v in self.b:
                yield (u, v) if u < v else (v, u)

    def __str__(self):
        return f"BLOCK a={_ids(self.a)} b={_ids(self.b)}"


@dataclass(frozen=True)
class Decomposition:
    blocks: tuple[BipartiteBlock, ...]
    nontrivial_only: bool = False

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def to_text(self) -> str:
        head = f"KIND {'nontrivial' if self.nontrivial_only else 'any'}\n"
        return head + "".join(f"{blk}\n" for blk in self.blocks)


@dataclass(frozen=True)
class SparseCover:
    isolated: frozenset[int]
    cycles: tuple[frozenset[int], ...]
    gamma: int = field(default=-1)

    def __post_init__(self):
        object.__setattr__(self, "isolated", frozenset(self.isolated))
        object.__setattr__(self, "cycles", tuple(sorted((frozenset(c) for c in self.cycles), key=sorted)))
        expected = len(self.isolated) + 3 * len(self.cycles)
        if self.gamma == -1:
            object.__setattr__(self, "gamma", expected)
        elif self.gamma != expected:
            raise ValueError("gamma must equal |isolated| + 3 * #cycles")

    @property
    def vertices(self) -> frozenset[int]:
        out = set(self.isolated)
        for c in self.cycles:
            out |= c
        return frozenset(out)

    def to_text(self) -> str:
        c4 = ";".join(_ids(c) for c in self.cycles)
        return f"COVER isolated={_ids(self.isolated)} c4={c4}\n"


def _ids(s: Iterable[int]) -> str:
    return ",".join(str(v) for v in sorted(s))


def _parse_ids(text: str) -> frozenset[int]:
    return frozenset(int(t) for t in text.split(",") if t)


def _field(token: str, name: str) -> str:
    key, sep, val = token.partition("=")
    if key != name or not sep:
        raise ValueError(f"expected '{name}=...', got {token!r}")
    return val


def parse_certificate(text: str) -> Decomposition | SparseCover:
    blocks = []
    nontrivial = False
    cover = None
    for line in text.splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "KIND" and len(parts) == 2 and parts[1] in ("any", "nontrivial"):
            nontrivial = parts[1] == "nontrivial"
        elif parts[0] == "BLOCK" and len(parts) == 3:
            blocks.append(BipartiteBlock(_parse_ids(_field(parts[1], "a")), _parse_ids(_field(parts[2], "b"))))
        elif parts[0] == "COVER" and len(parts) == 3:
            iso = _parse_ids(_field(parts[1], "isolated"))
            c4 = _field(parts[2], "c4")
            cover = SparseCover(iso, tuple(_parse_ids(c) for c in c4.split(";") if c))
        else:
            raise ValueError(f"unrecognized certificate line {line!r}")
    if cover is not None:
        if blocks:
            raise ValueError("certificate mixes BLOCK and COVER records")
        return cover
    return Decomposition(tuple(blocks), nontrivial)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    message: str = "ok"

    def __bool__(self):
        return self.ok


def validate_decomposition(g: Graph, d: Decomposition | Iterable[BipartiteBlock],
                           nontrivial_only: bool | None = None) -> ValidationReport:
    """Check block completeness, pairwise edge-disjointness, exact cover of
    E(g) and, for nontrivial-only decompositions, that no block is a star.
    Reports the first violation found."""
    if nontrivial_only is None:
        nontrivial_only = getattr(d, "nontrivial_only", False)
    covered = [0] * g.n
    for idx, blk in enumerate(d):
        a, b = blk.a_mask, blk.b_mask
        if (a | b) >> g.n:
            return ValidationReport(False, f"block {idx}: vertex outside 0..{g.n - 1}")
        if nontrivial_only and not blk.is_nontrivial:
            return ValidationReport(False, f"block {idx}: not nontrivial ({len(blk.a)}x{len(blk.b)})")
        for u in bits(a):
            missing = b & ~g.adj[u]
            if missing:
                v = next(bits(missing))
                return ValidationReport(False, f"block {idx}: pair {min(u, v)}-{max(u, v)} is not an edge")
            dup = covered[u] & b
            if dup:
                v = next(bits(dup))
                return ValidationReport(False, f"block {idx}: edge {min(u, v)}-{max(u, v)} already covered "
                                               f"(disjointness)")
            covered[u] |= b
            for v in bits(b):
                covered[v] |= 1 << u
    for u in range(g.n):
        missing = g.adj[u] & ~covered[u]
        if missing:
            v = next(bits(missing))
            return ValidationReport(False, f"edge {min(u, v)}-{max(u, v)} uncovered")
    return ValidationReport(True)


def validate_sparse_cover(g: Graph, cover: SparseCover) -> ValidationReport:
    seen = 0
    pieces = [to_mask([v]) for v in sorted(cover.isolated)] + [to_mask(c) for c in cover.cycles]
    for piece in pieces:
        if piece >> g.n:
            return ValidationReport(False, "vertex outside graph")
        if seen & piece:
            return ValidationReport(False, "pieces share a vertex")
        seen |= piece
    for c in cover.cycles:
        m = to_mask(c)
        if len(c) != 4 or any(popcount(g.adj[v] & m) != 2 for v in c):
            return ValidationReport(False, f"{sorted(c)} does not induce a 4-cycle")
    for piece in pieces:
        nb = 0
        for v in bits(piece):
            nb |= g.adj[v]
        if nb & seen & ~piece:
            return ValidationReport(False, "an edge joins two distinct pieces")
    if cover.gamma != len(cover.isolated) + 3 * len(cover.cycles):
        return ValidationReport(False, "gamma mismatch")
    return ValidationReport(True)
