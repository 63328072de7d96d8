"""Exact biclique partition numbers tau(G) and tau'(G).

Search scheme
-------------
The uncovered edges always form a graph R.  tau(R) is additive over the
connected components of R and is an isomorphism invariant, so the search
works component by component and memoizes results under a canonical form
(:mod:`.canon`).  For a component, branch on its lexicographically smallest
edge e: some block of an optimal partition contains e, and every complete
bipartite subgraph of R through e (maximal or not) is tried, largest first.
Because e is always the smallest uncovered edge, every partition is reached
along exactly one path.

Bounds
------
* memoized exact values and proven lower bounds of components;
* for tau only: tau(R) >= tau(R - v) for every vertex v (restricting each
  block of a partition to V - v leaves a partition of R - v), evaluated
  recursively through the same memo;
* for tau': a component whose smallest edge lies in no nontrivial block
  has tau' = inf.

Results of a search are reported through ``search(rows, cap)``: the exact
value when it is below ``cap``, otherwise a proven lower bound >= cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..blocks import BipartiteBlock, Decomposition
from ..graph import Graph, bits, popcount
from .budget import Budget, BudgetExceeded
from .canon import canonical_form

INF = math.inf
CANON_MAX = 12
DEFAULT_BUDGET = 5_000_000


@dataclass
class TauCache:
    """Memo tables shared between searches of the same kind.

    Values are graph invariants, so sharing a cache never changes results;
    it does change how many nodes a later search spends.
    """

    exact: dict = field(default_factory=dict)
    lower: dict = field(default_factory=dict)
    keys: dict = field(default_factory=dict)


def _components(rows) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Connected components with at least one edge, as (local rows, labels)."""
    out = []
    seen = 0
    for s, r in enumerate(rows):
        if not r or seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        labels = tuple(bits(comp))
        pos = {v: i for i, v in enumerate(labels)}
        local = []
        for v in labels:
            x = 0
            for w in bits(rows[v]):
                x |= 1 << pos[w]
            local.append(x)
        out.append((tuple(local), labels))
    return out


def bicliques_through(rows, u: int, v: int, nontrivial: bool = False) -> list[tuple[int, int]]:
    """All complete bipartite subgraphs (a, b) of ``rows`` with u in a and
    v in b, as mask pairs, largest edge count first."""
    out = []
    w_all = (rows[u] | rows[v]) & ~(1 << u | 1 << v)
    order = list(bits(w_all))
    # stack entries: (a, b, size_a, size_b, cand_a, cand_b, next index)
    stack = [(1 << u, 1 << v, 1, 1, rows[v] & ~(1 << u), rows[u] & ~(1 << v), 0)]
    while stack:
        a, b, na, nb, ca, cb, i = stack.pop()
        if not nontrivial or (na >= 2 and nb >= 2):
            out.append((na * nb, a, b))
        for j in range(i, len(order)):
            w = order[j]
            bit = 1 << w
            if ca & bit:
                stack.append((a | bit, b, na + 1, nb, ca & ~bit, cb & rows[w], j + 1))
            if cb & bit:
                stack.append((a, b | bit, na, nb + 1, ca & rows[w], cb & ~bit, j + 1))
    out.sort(key=lambda t: -t[0])
    return [(a, b) for _, a, b in out]


def _remove_block(rows, a: int, b: int) -> list[int]:
    new = list(rows)
    for x in bits(a):
        new[x] &= ~b
    for y in bits(b):
        new[y] &= ~a
    return new


def _smallest_edge(rows) -> tuple[int, int]:
    for u, r in enumerate(rows):
        if r:
            return u, (r & -r).bit_length() - 1
    raise ValueError("graph has no edges")


class _Search:
    def __init__(self, nontrivial: bool, budget: Budget, cache: TauCache | None):
        self.nontrivial = nontrivial
        self.budget = budget
        self.cache = cache if cache is not None else TauCache()

    def key(self, rows: tuple[int, ...]):
        keys = self.cache.keys
        k = keys.get(rows)
        if k is None:
            k = canonical_form(rows, len(rows))[0] if len(rows) <= CANON_MAX else ("L", rows)
            keys[rows] = k
        return k

    def known_lb(self, rows) -> float:
        k = self.key(rows)
        if k in self.cache.exact:
            return self.cache.exact[k]
        return self.cache.lower.get(k, 1)

    def value(self, rows, cap: float) -> float:
        """tau (or tau') of an arbitrary graph, exact when below ``cap``."""
        comps = [c for c, _ in _components(rows)]
        if not comps:
            return 0
        vals = [self.known_lb(c) for c in comps]
        total = sum(vals)
        if total >= cap:
            return total
        for i, c in enumerate(comps):
            others = total - vals[i]
            vals[i] = self.search(c, cap - others)
            total = others + vals[i]
            if total >= cap:
                return total
        return total

    def search(self, rows: tuple[int, ...], cap: float) -> float:
        """tau of a connected graph with edges; exact if < cap, else a lower
        bound >= cap."""
        cache = self.cache
        k = self.key(rows)
        if k in cache.exact:
            return cache.exact[k]
        lb = cache.lower.get(k, 1)
        if lb >= cap:
            return lb
        self.budget.tick()
        m = len(rows)
        if not self.nontrivial and m > 3:
            for v in range(m):
                sub = [r & ~(1 << v) for r in rows]
                sub[v] = 0
                lb = max(lb, self.value(sub, cap))
                if lb >= cap:
                    cache.lower[k] = lb
                    return lb
        u, w = _smallest_edge(rows)
        best = cap
        found = False
        for a, b in bicliques_through(rows, u, w, self.nontrivial):
            sub = self.value(_remove_block(rows, a, b), best - 1)
            if sub + 1 < best:
                best = sub + 1
                found = True
                if best <= lb:
                    break
        if found:
            cache.exact[k] = best
            return best
        if cap == INF:
            # tau' only: no child admits a finite cover
            cache.exact[k] = INF
            return INF
        cache.lower[k] = max(lb, cap)
        return cache.lower[k]

    def certificate(self, rows) -> list[tuple[int, int]]:
        """Blocks of an optimal partition of ``rows`` (original labels)."""
        blocks = []
        for comp, labels in _components(rows):
            target = self.search(comp, INF)
            if target == INF:
                raise ValueError("no nontrivial cover exists")
            cur = list(comp)
            while target > 0:
                u, w = _smallest_edge(cur)
                for a, b in bicliques_through(cur, u, w, self.nontrivial):
                    nxt = _remove_block(cur, a, b)
                    if self.value(nxt, target) == target - 1:
                        break
                else:  # pragma: no cover - memo inconsistency
                    raise AssertionError("certificate reconstruction failed")
                blocks.append((_lift(a, labels), _lift(b, labels)))
                cur = nxt
                target -= 1
        return blocks


def _lift(mask: int, labels) -> int:
    out = 0
    for i in bits(mask):
        out |= 1 << labels[i]
    return out


def _bounds_on_failure(s: _Search, g: Graph):
    lower = 0
    for comp, _ in _components(g.adj):
        lower += s.known_lb(comp)
    return lower


def _greedy_star_bound(g: Graph) -> int:
    from ..builders import star_decomposition

    ind = 0
    for v in sorted(range(g.n), key=g.degree):
        if not g.adj[v] & ind:
            ind |= 1 << v
    return len(star_decomposition(g, ind))


def exact_tau(g: Graph, budget: int | None = DEFAULT_BUDGET,
              cache: TauCache | None = None) -> tuple[int, Decomposition]:
    """Minimum number of edge-disjoint complete bipartite subgraphs
    partitioning E(g), with a certificate."""
    s = _Search(False, Budget(budget, "exact_tau"), cache)
    try:
        value = s.value(g.adj, INF)
        blocks = s.certificate(g.adj)
    except BudgetExceeded as exc:
        raise BudgetExceeded("exact_tau", exc.nodes, _bounds_on_failure(s, g), _greedy_star_bound(g)) from None
    assert len(blocks) == value
    return int(value), Decomposition(tuple(BipartiteBlock.from_masks(a, b) for a, b in blocks))


def exact_tau_prime(g: Graph, budget: int | None = DEFAULT_BUDGET,
                    cache: TauCache | None = None) -> tuple[float, Decomposition | None]:
    """Like :func:`exact_tau` with nontrivial blocks only; ``(inf, None)``
    when no such partition exists."""
    s = _Search(True, Budget(budget, "exact_tau_prime"), cache)
    try:
        value = s.value(g.adj, INF)
        if value == INF:
            return INF, None
        blocks = s.certificate(g.adj)
    except BudgetExceeded as exc:
        raise BudgetExceeded("exact_tau_prime", exc.nodes, _bounds_on_failure(s, g), INF) from None
    return int(value), Decomposition(tuple(BipartiteBlock.from_masks(a, b) for a, b in blocks), True)


def lemma34_min(g: Graph, budget: int | None = DEFAULT_BUDGET,
                cache: TauCache | None = None) -> tuple[int, int]:
    """min over U of |V| - |U| + tau'(G[U]) by full subset enumeration.

    Returns the minimum and the first minimizing U (as a bitmask) in the
    order: larger U first, then ascending mask.
    """
    n = g.n
    s = _Search(True, Budget(budget, "lemma34_min"), cache)
    best, best_u = n, 0
    subsets = sorted(range(1 << n), key=lambda m: (-popcount(m), m))
    try:
        for u_mask in subsets:
            outside = n - popcount(u_mask)
            if outside >= best:
                continue
            rows = [g.adj[v] & u_mask if u_mask >> v & 1 else 0 for v in range(n)]
            val = s.value(rows, best - outside)
            if outside + val < best:
                best, best_u = int(outside + val), u_mask
    except BudgetExceeded as exc:
        raise BudgetExceeded("lemma34_min", exc.nodes, None, best) from None
    return best, best_u
