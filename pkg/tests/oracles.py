"""Brute-force ground truth, independent of the package's search code.

Everything here is exponential and only meant for n <= 12 (tau: n <= 6).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from biclab.graph import Graph


def _mask_bits(m):
    return [v for v in range(m.bit_length()) if m >> v & 1]


def alpha_bf(g: Graph) -> int:
    best = 0
    for s in range(1 << g.n):
        if all(not (g.adj[v] & s) for v in _mask_bits(s)):
            best = max(best, bin(s).count("1"))
    return best


def induced_bipartition(g: Graph, s: int):
    """(a, b) if g[s] is complete bipartite with both classes nonempty, else None."""
    vs = _mask_bits(s)
    if len(vs) < 2:
        return None
    v = vs[0]
    b = g.adj[v] & s
    a = s & ~b
    if not b:
        return None
    for x in _mask_bits(a):
        if g.adj[x] & a or (g.adj[x] & b) != b:
            return None
    for y in _mask_bits(b):
        if g.adj[y] & b:
            return None
    return a, b


def beta_bf(g: Graph) -> int:
    best = 0
    for s in range(1 << g.n):
        if bin(s).count("1") > best and induced_bipartition(g, s):
            best = bin(s).count("1")
    return best


def _edge_index(g: Graph):
    return {e: i for i, e in enumerate(g.edges())}


def all_bicliques(g: Graph, nontrivial=False) -> list[int]:
    """Edge masks of every complete bipartite subgraph (not nec. induced)."""
    idx = _edge_index(g)
    out = set()
    # label each vertex 0 (unused), 1 (class a), 2 (class b)
    for labels in range(3 ** g.n):
        a, b, x = [], [], labels
        for v in range(g.n):
            x, r = divmod(x, 3)
            if r == 1:
                a.append(v)
            elif r == 2:
                b.append(v)
        if not a or not b or a[0] > b[0]:
            continue
        if nontrivial and (len(a) < 2 or len(b) < 2):
            continue
        if all(g.adj[u] >> w & 1 for u in a for w in b):
            out.add(sum(1 << idx[min(u, w), max(u, w)] for u in a for w in b))
    return sorted(out)


def tau_bf(g: Graph, nontrivial=False) -> float:
    """Minimum partition of E(g) into bicliques, by DP over edge subsets."""
    m = g.edge_count
    full = (1 << m) - 1
    blocks = all_bicliques(g, nontrivial)

    @lru_cache(maxsize=None)
    def best(rest):
        if not rest:
            return 0
        low = rest & -rest
        opts = [1 + best(rest & ~bl) for bl in blocks if bl & low and bl & rest == bl]
        return min(opts, default=math.inf)

    return best(full)


def lemma34_bf(g: Graph) -> float:
    from biclab.graph import induced_subgraph
    return min(g.n - bin(u).count("1") + tau_bf(induced_subgraph(g, u)[0], True) for u in range(1 << g.n))


def induced_c4_bf(g: Graph) -> list[frozenset[int]]:
    out = []
    for q in combinations(range(g.n), 4):
        qm = sum(1 << v for v in q)
        if all(bin(g.adj[v] & qm).count("1") == 2 for v in q):
            out.append(frozenset(q))
    return sorted(out, key=sorted)


def gamma_bf(g: Graph) -> int:
    """max over induced subgraphs whose components are vertices or C4s of
    (#vertices - #C4 components)."""
    best = 0
    for s in range(1 << g.n):
        seen, val, ok = 0, 0, True
        for v in _mask_bits(s):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for x in _mask_bits(frontier):
                    nxt |= g.adj[x] & s
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            size = bin(comp).count("1")
            if size == 1:
                val += 1
            elif size == 4 and all(bin(g.adj[x] & comp).count("1") == 2 for x in _mask_bits(comp)):
                val += 3
            else:
                ok = False
                break
        if ok:
            best = max(best, val)
    return best


# exact rational versions of the counting formulas

def _half_pow(e: int) -> Fraction:
    return Fraction(1, 1 << e) if e >= 0 else Fraction(1 << -e)


def f_exact(n, k):
    return math.comb(n, k) * _half_pow(math.comb(k, 2))


def g_exact(n, k):
    return math.comb(n, k + 2) * (2 ** (k + 1) - 1) * _half_pow(math.comb(k + 2, 2))


def f_i_exact(n, k, i):
    return math.comb(n, k) * math.comb(k, i) * math.comb(n - k, k - i) * _half_pow(2 * math.comb(k, 2) - math.comb(i, 2))


def g_i_exact(n, k, i):
    return (g_exact(n, k) * math.comb(k + 2, i) * math.comb(n - k - 2, k + 2 - i) * 2 ** (k + 2 - i)
            * _half_pow(math.comb(k + 2, 2) - math.comb(i, 2)))


def h_i_exact(n, k, i):
    return (math.comb(n, k) * math.comb(k, i) * math.comb(n - k, k + 2 - i) * (2 ** (k + 2 - i) - 1)
            * _half_pow(math.comb(k, 2) + math.comb(k + 2, 2) - math.comb(i, 2)))


def log2_fraction(x: Fraction) -> float:
    return math.log2(x.numerator) - math.log2(x.denominator)
