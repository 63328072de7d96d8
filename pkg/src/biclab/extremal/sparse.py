"""Induced 4-cycles, the very-sparse structural condition, and gamma_max.

gamma_max is a maximum-weight independent set problem: pieces are single
vertices (weight 1) and induced 4-cycles (weight 3), and two pieces
conflict when they share a vertex or an edge of G joins them.  An
independent set of pieces is exactly an induced subgraph whose components
are isolated vertices and 4-cycles.
"""

from __future__ import annotations

from itertools import combinations

from ..blocks import SparseCover
from ..graph import Graph, bits, popcount
from .budget import Budget, BudgetExceeded


def list_induced_c4(g: Graph) -> list[frozenset[int]]:
    """All 4-vertex sets inducing exactly a 4-cycle, sorted."""
    found = set()
    adj = g.adj
    for u in range(g.n):
        # u is the smallest vertex; its opposite corner w is a non-neighbor
        for w in bits(~adj[u] & g.vertex_mask & ~((1 << (u + 1)) - 1)):
            common = adj[u] & adj[w] & ~((1 << (u + 1)) - 1)
            for x, y in combinations(bits(common), 2):
                if not adj[x] >> y & 1:
                    found.add(frozenset((u, w, x, y)))
    return sorted(found, key=sorted)


def four_cycle_subgraphs(g: Graph) -> list[tuple[int, int, int, int]]:
    """Every 4-cycle subgraph (chords allowed) as (u, x, w, y), u-x-w-y-u,
    each listed once."""
    out = []
    adj = g.adj
    for u in range(g.n):
        higher = ~((1 << (u + 1)) - 1)
        for w in range(u + 1, g.n):
            common = adj[u] & adj[w] & higher
            for x, y in combinations(bits(common), 2):
                out.append((u, x, w, y))
    return out


def structural_condition(g: Graph) -> bool:
    """Every nontrivial complete bipartite subgraph of g is an induced C4 and
    these C4s are pairwise vertex-disjoint.

    A nontrivial complete bipartite subgraph contains a K_{2,2}, i.e. a
    4-cycle subgraph; so it suffices that every 4-cycle subgraph is chordless
    and the resulting vertex sets are disjoint (which also rules out
    K_{2,3}, whose 4-cycles share two vertices).
    """
    used = 0
    seen = set()
    adj = g.adj
    for u, x, w, y in four_cycle_subgraphs(g):
        if adj[u] >> w & 1 or adj[x] >> y & 1:
            return False
        key = frozenset((u, x, w, y))
        if key in seen:
            continue
        seen.add(key)
        m = 1 << u | 1 << x | 1 << w | 1 << y
        if used & m:
            return False
        used |= m
    return True


class _MWIS:
    """Exact maximum-weight independent set: component splitting, the
    'weight at least the neighborhood weight' reduction, and branching on a
    maximum-degree vertex with a weight-sum bound."""

    def __init__(self, adj, weight, budget: Budget):
        self.adj = adj
        self.weight = weight
        self.budget = budget

    def wsum(self, mask: int) -> int:
        w = self.weight
        return sum(w[v] for v in bits(mask))

    def solve(self, cand: int) -> tuple[int, int]:
        total_w, total_set = 0, 0
        for comp in self._components(cand):
            w, s = self._component(comp, 0)
            total_w += w
            total_set |= s
        return total_w, total_set

    def _components(self, cand: int):
        adj = self.adj
        while cand:
            low = cand & -cand
            comp = frontier = low
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= adj[v]
                frontier = nxt & cand & ~comp
                comp |= frontier
            cand &= ~comp
            yield comp

    def _component(self, cand: int, need: int) -> tuple[int, int]:
        """Best set in the connected ``cand``; may return a weight <= need
        (with an arbitrary set) when nothing beats ``need``."""
        self.budget.tick()
        adj, w = self.adj, self.weight
        taken, taken_w = 0, 0
        # forced picks
        changed = True
        while changed and cand:
            changed = False
            for v in bits(cand):
                if not cand >> v & 1:
                    continue
                nb = adj[v] & cand
                if w[v] >= self.wsum(nb):
                    taken |= 1 << v
                    taken_w += w[v]
                    cand &= ~(nb | 1 << v)
                    changed = True
        if not cand:
            return taken_w, taken
        comps = list(self._components(cand))
        if len(comps) > 1:
            best_w, best_s = taken_w, taken
            for comp in comps:
                cw, cs = self._component(comp, 0)
                best_w += cw
                best_s |= cs
            return best_w, best_s
        if taken_w + self.wsum(cand) <= need:
            return taken_w, taken
        v = max(bits(cand), key=lambda x: (popcount(adj[x] & cand), -x))
        bit = 1 << v
        inc_w, inc_s = 0, 0
        rest = cand & ~(adj[v] | bit)
        if rest:
            inc_w, inc_s = self.solve_bounded(rest, need - taken_w - w[v])
        inc_w += w[v]
        inc_s |= bit
        exc_w, exc_s = self.solve_bounded(cand & ~bit, max(need - taken_w, inc_w))
        if exc_w > inc_w:
            return taken_w + exc_w, taken | exc_s
        return taken_w + inc_w, taken | inc_s

    def solve_bounded(self, cand: int, need: int) -> tuple[int, int]:
        comps = list(self._components(cand))
        if len(comps) == 1:
            return self._component(cand, need)
        total_w, total_s = 0, 0
        for comp in comps:
            cw, cs = self._component(comp, 0)
            total_w += cw
            total_s |= cs
        return total_w, total_s


def max_weight_independent_set(adj, weight, budget: int | None = None) -> tuple[int, int]:
    solver = _MWIS(adj, weight, Budget(budget, "mwis"))
    return solver.solve((1 << len(adj)) - 1)


def gamma_max(g: Graph, budget: int | None = None) -> tuple[int, SparseCover]:
    cycles = list_induced_c4(g)
    pieces = [1 << v for v in range(g.n)] + [sum(1 << v for v in c) for c in cycles]
    weight = [1] * g.n + [3] * len(cycles)
    closed = []
    for pm in pieces:
        nb = pm
        for v in bits(pm):
            nb |= g.adj[v]
        closed.append(nb)
    conflict = []
    for i, pm in enumerate(pieces):
        row = 0
        for j, qm in enumerate(pieces):
            if i != j and closed[i] & qm:
                row |= 1 << j
        conflict.append(row)
    try:
        value, chosen = max_weight_independent_set(conflict, weight, budget)
    except BudgetExceeded as exc:
        raise BudgetExceeded("gamma_max", exc.nodes, None, None) from None
    isolated = frozenset(i for i in bits(chosen) if i < g.n)
    chosen_cycles = tuple(cycles[i - g.n] for i in bits(chosen) if i >= g.n)
    cover = SparseCover(isolated, chosen_cycles)
    assert cover.gamma == value
    return value, cover
