"""Constructive decompositions behind the upper bounds tau <= n - alpha and
tau <= n - beta + 1, the sparse-cover construction, and block splitting."""

from __future__ import annotations

from typing import Iterable

from .blocks import BipartiteBlock, Decomposition, SparseCover, validate_sparse_cover
from .graph import Graph, bits, is_independent_set, is_induced_complete_bipartite, to_mask


class BuilderError(ValueError):
    pass


def _star_sweep(g: Graph, keep: int) -> list[BipartiteBlock]:
    """Stars at the vertices outside ``keep`` in ascending order.  The star
    at v takes every edge from v to a vertex not processed yet (vertices of
    ``keep`` are never processed); empty stars are dropped."""
    processed = 0
    stars = []
    for v in range(g.n):
        if keep >> v & 1:
            continue
        leaves = g.adj[v] & ~processed
        processed |= 1 << v
        if leaves:
            stars.append(BipartiteBlock.from_masks(1 << v, leaves))
    return stars


def star_decomposition(g: Graph, ind: int | Iterable[int]) -> Decomposition:
    ind = to_mask(ind)
    if not is_independent_set(g, ind):
        raise BuilderError("the given vertex set is not independent")
    return Decomposition(tuple(_star_sweep(g, ind)))


def beta_decomposition(g: Graph, h: BipartiteBlock) -> Decomposition:
    a, b = h.a_mask, h.b_mask
    if not is_induced_complete_bipartite(g, a, b):
        raise BuilderError("block is not an induced complete bipartite subgraph")
    return Decomposition(tuple(_star_sweep(g, a | b)) + (h,))


def sparse_cover_decomposition(g: Graph, cover: SparseCover) -> Decomposition:
    """Stars at the vertices outside the cover plus one K_{2,2} per 4-cycle;
    n - gamma blocks when the cover is maximum."""
    report = validate_sparse_cover(g, cover)
    if not report:
        raise BuilderError(f"invalid sparse cover: {report.message}")
    blocks = _star_sweep(g, to_mask(cover.vertices))
    for c in cover.cycles:
        cm = to_mask(c)
        v = min(c)
        side_b = g.adj[v] & cm
        blocks.append(BipartiteBlock.from_masks(cm & ~side_b, side_b))
    return Decomposition(tuple(blocks))


def _halves(cls: frozenset[int]) -> tuple[frozenset[int], frozenset[int]]:
    s = sorted(cls)
    cut = (len(s) + 1) // 2
    return frozenset(s[:cut]), frozenset(s[cut:])


def split_block(blk: BipartiteBlock, max_edges: int) -> list[BipartiteBlock]:
    """Halve the larger class (ties: class a) until every block has at most
    ``max_edges`` edges.  Output blocks are nontrivial and partition the
    edges of ``blk``; order is depth first, lower half first."""
    if not blk.is_nontrivial:
        raise BuilderError("split_block needs a nontrivial block")
    if max_edges < 4:
        raise BuilderError("max_edges must be at least 4")
    out = []
    stack = [blk]
    while stack:
        cur = stack.pop()
        if cur.n_edges <= max_edges:
            out.append(cur)
            continue
        if len(cur.a) >= len(cur.b):
            big, small, big_is_a = cur.a, cur.b, True
        else:
            big, small, big_is_a = cur.b, cur.a, False
        if len(big) < 4:
            raise BuilderError(f"cannot split a K_{len(cur.a)},{len(cur.b)} into nontrivial blocks "
                               f"of at most {max_edges} edges")
        lo, hi = _halves(big)
        parts = [BipartiteBlock(lo, small), BipartiteBlock(hi, small)] if big_is_a else \
            [BipartiteBlock(small, lo), BipartiteBlock(small, hi)]
        stack.extend(reversed(parts))
    return out
