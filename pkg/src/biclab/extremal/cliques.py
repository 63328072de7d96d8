"""Exact alpha and beta via a bitset maximum-clique search.

The clique search is the MCQ scheme of Tomita & Seki: greedy sequential
coloring of the candidate set gives both the branching order and the
bound.  alpha(G) is the clique number of the complement.  beta(G) reduces
to cliques in a compatibility graph, see :func:`beta`.
"""

from __future__ import annotations

from ..blocks import BipartiteBlock
from ..graph import Graph, bits, popcount
from .budget import Budget


def _color_sort(adj, cand: int) -> tuple[list[int], list[int]]:
    order, colors = [], []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        q = uncolored
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~adj[v] & ~low
            uncolored &= ~low
            order.append(v)
            colors.append(color)
    return order, colors


class _CliqueSearch:
    def __init__(self, adj, budget: Budget, best_size=0, best_mask=0):
        self.adj = adj
        self.budget = budget
        self.best_size = best_size
        self.best_mask = best_mask

    def expand(self, clique: int, size: int, cand: int):
        self.budget.tick()
        adj = self.adj
        order, colors = _color_sort(adj, cand)
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= self.best_size:
                return
            v = order[i]
            bit = 1 << v
            sub = cand & adj[v]
            if sub:
                self.expand(clique | bit, size + 1, sub)
            elif size + 1 > self.best_size:
                self.best_size = size + 1
                self.best_mask = clique | bit
            cand &= ~bit


def max_clique(adj, cand: int, budget: Budget | None = None, at_least: int = 0) -> tuple[int, int]:
    """Largest clique inside ``cand``; returns (size, mask).

    With ``at_least`` > 0 only cliques larger than ``at_least`` are searched
    for, and (0, 0) is returned when none exists.
    """
    s = _CliqueSearch(adj, budget or Budget(None, "max_clique"), best_size=at_least)
    if cand:
        s.expand(0, 0, cand)
    if s.best_mask == 0:
        return 0, 0
    return s.best_size, s.best_mask


def alpha(g: Graph, budget: int | None = None) -> tuple[int, int]:
    """Independence number and a maximum independent set (as a bitmask)."""
    if g.n == 0:
        return 0, 0
    comp = g.complement().adj
    size, mask = max_clique(comp, g.vertex_mask, Budget(budget, "alpha"))
    return size, mask


def beta(g: Graph, budget: int | None = None) -> tuple[int, BipartiteBlock | None]:
    """Largest induced complete bipartite subgraph with both classes nonempty.

    Anchor the smallest vertex v of the optimum in class a.  The remaining
    vertices come from W = {w > v}: class-a candidates are the non-neighbors
    of v, class-b candidates its neighbors.  Two candidates are compatible
    when they are non-adjacent (same class) or adjacent (opposite classes),
    so the rest of the biclique is a clique of the compatibility graph that
    contains at least one class-b vertex.  That vertex is branched on
    explicitly (u = first class-b vertex in ascending order).
    """
    n = g.n
    if g.edge_count == 0:
        return 0, None
    bud = Budget(budget, "beta")
    adj = g.adj
    full = g.vertex_mask
    # any edge is a K_{1,1}
    best = 2
    u0, v0 = next(g.edges())
    best_a, best_b = 1 << u0, 1 << v0
    for v in range(n):
        above = full & ~((1 << (v + 1)) - 1)
        side_b = adj[v] & above
        side_a = above & ~adj[v]
        if not side_b or 1 + popcount(side_a | side_b) <= best:
            continue
        compat = {}
        for w in bits(side_a | side_b):
            if side_a >> w & 1:
                compat[w] = (side_a & ~adj[w] | side_b & adj[w]) & ~(1 << w)
            else:
                compat[w] = (side_b & ~adj[w] | side_a & adj[w]) & ~(1 << w)
        cand = side_a | side_b
        for u in bits(side_b):
            rest = cand & compat[u]
            if 2 + popcount(rest) > best:
                size, clique = max_clique(compat, rest, bud, at_least=best - 2)
                if clique and size + 2 > best:
                    best = size + 2
                    members = clique | 1 << u
                    best_a = 1 << v | (members & side_a)
                    best_b = members & side_b
            cand &= ~(1 << u)
    return best, BipartiteBlock.from_masks(best_a, best_b)
