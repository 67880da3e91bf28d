"""Canonical forms for small graphs by individualization-refinement.

Cells of an ordered partition start as degree classes and are split by
neighbour counts into each cell until equitable. A non-singleton cell is
then individualized one vertex at a time; every discrete leaf yields a
vertex order and the largest upper-triangle adjacency code over all leaves
is the canonical code. Twin vertices (same neighbourhood apart from each
other) give identical subtrees, so only one per twin class is tried.
"""

from __future__ import annotations

from .graph import Graph


def _refine(masks: list[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        cell_masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {v: tuple(bin(masks[v] & cm).count("1") for cm in cell_masks) for v in c}
            for key in sorted(set(sig.values())):
                out.append(sorted(v for v in c if sig[v] == key))
        if len(out) == len(cells):
            return out
        cells = out


def _code(masks: list[int], order: list[int]) -> int:
    code = 0
    n = len(order)
    for i in range(n):
        mi = masks[order[i]]
        for j in range(i + 1, n):
            code = (code << 1) | ((mi >> order[j]) & 1)
    return code


def _twin_reps(masks: list[int], cell: list[int]) -> list[int]:
    reps: list[int] = []
    for v in cell:
        for u in reps:
            if masks[u] & ~(1 << v) == masks[v] & ~(1 << u):
                break
        else:
            reps.append(v)
    return reps


def canonical_code(G: Graph) -> tuple[int, int]:
    """``(n, code)``; equal iff the graphs are isomorphic."""
    masks = G.masks()
    n = G.n
    if n == 0:
        return (0, 0)
    by_deg: dict[int, list[int]] = {}
    for v in range(n):
        by_deg.setdefault(bin(masks[v]).count("1"), []).append(v)
    start = _refine(masks, [by_deg[d] for d in sorted(by_deg)])
    best = -1
    stack = [start]
    while stack:
        cells = stack.pop()
        i = next((k for k, c in enumerate(cells) if len(c) > 1), -1)
        if i < 0:
            best = max(best, _code(masks, [c[0] for c in cells]))
            continue
        cell = cells[i]
        for v in _twin_reps(masks, cell):
            rest = [u for u in cell if u != v]
            stack.append(_refine(masks, cells[:i] + [[v], rest] + cells[i + 1:]))
    return (n, best)


def canonical_graph(G: Graph) -> Graph:
    """Graph rebuilt from its canonical code (isomorphic to ``G``)."""
    n, code = canonical_code(G)
    edges = []
    bit = n * (n - 1) // 2 - 1
    for i in range(n):
        for j in range(i + 1, n):
            if (code >> bit) & 1:
                edges.append((i, j))
            bit -= 1
    return Graph.from_edges(n, edges)
