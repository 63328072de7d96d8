"""Canonical labeling of small graphs by individualization-refinement.

Only used to key memo tables, so correctness means: two graphs get the same
key iff they are isomorphic.  Refinement is 1-dimensional color refinement
with colors ordered by signature, which is label independent.  Branching
individualizes vertices of the first non-singleton cell; twins (vertices
with equal open or closed neighborhoods) are interchangeable by a graph
automorphism that fixes everything already individualized, so only one
vertex per twin class is tried.
"""

from __future__ import annotations


def _refine(adj, cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple(bin(adj[v] & m).count("1") for m in masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(cell)
            else:
                out.extend([v for v in cell if sig[v] == k] for k in keys)
        if len(out) == len(cells):
            return out
        cells = out


def _twin_classes(adj, n: int) -> list[int]:
    rep = list(range(n))
    for u in range(n):
        if rep[u] != u:
            continue
        open_u = adj[u]
        closed_u = open_u | 1 << u
        for v in range(u + 1, n):
            if rep[v] == v and (adj[v] == open_u or adj[v] | 1 << v == closed_u):
                rep[v] = u
    return rep


def canonical_form(adj, n: int) -> tuple[tuple[int, ...], list[int]]:
    """Return (code, order): ``code`` is the adjacency of the canonically
    relabeled graph and ``order[i]`` the original vertex placed at position i."""
    twins = _twin_classes(adj, n)
    degree = [bin(adj[v]).count("1") for v in range(n)]
    start = [[v for v in range(n) if degree[v] == d] for d in sorted(set(degree))]
    best: list = [None, None]

    def relabel(order):
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for v in order:
            r = 0
            m = adj[v]
            while m:
                low = m & -m
                r |= 1 << pos[low.bit_length() - 1]
                m ^= low
            rows.append(r)
        return tuple(rows)

    def search(cells):
        cells = _refine(adj, cells)
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            order = [c[0] for c in cells]
            code = relabel(order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        tried = set()
        for v in cell:
            if twins[v] in tried:
                continue
            tried.add(twins[v])
            rest = [w for w in cell if w != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1:])

    search(start)
    return best[0], best[1]
