"""Degree-preserving edge switches and the normalizing transforms built on them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graph import (
    BicyclicCore,
    Edge,
    Graph,
    StructuralClass,
    degree_sequence,
    girth,
    norm_edge,
    structural_class,
    unique_cycle,
)

__all__ = [
    "PreconditionError",
    "SwitchError",
    "SwitchMove",
    "apply_switch",
    "bowtie_normalize",
    "girth_reduce_to_3",
    "long_cycle_disconnect",
    "move",
    "sandglass_to_theta",
    "theta_normalize",
]


class SwitchError(ValueError):
    """A move does not fit the graph; ``edge`` is the offending pair."""

    def __init__(self, msg: str, edge: Optional[Edge] = None):
        super().__init__(msg)
        self.edge = edge


class PreconditionError(ValueError):
    """A transform's structural hypothesis does not hold for the input."""


@dataclass(frozen=True)
class SwitchMove:
    removed: frozenset[Edge]
    added: frozenset[Edge]

    def __post_init__(self):
        rem = frozenset(norm_edge(*e) for e in self.removed)
        add = frozenset(norm_edge(*e) for e in self.added)
        object.__setattr__(self, "removed", rem)
        object.__setattr__(self, "added", add)
        for u, v in add:
            if u == v:
                raise SwitchError(f"added edge {(u, v)} is a loop", (u, v))
        if rem & add:
            raise SwitchError(f"edges both removed and added: {sorted(rem & add)}", min(rem & add))
        if len(rem) != len(add) or len(rem) < 2:
            raise SwitchError(f"need |removed| = |added| >= 2, got {len(rem)} and {len(add)}")
        if Counter(x for e in rem for x in e) != Counter(x for e in add for x in e):
            raise SwitchError("move changes some vertex degree")

    def inverse(self) -> "SwitchMove":
        return SwitchMove(self.added, self.removed)


def move(removed: Iterable[Edge], added: Iterable[Edge]) -> SwitchMove:
    return SwitchMove(frozenset(removed), frozenset(added))


def apply_switch(G: Graph, m: SwitchMove) -> Graph:
    for e in sorted(m.removed):
        if not G.has_edge(*e):
            raise SwitchError(f"removed edge {e} is not in the graph", e)
    for e in sorted(m.added):
        if G.has_edge(*e):
            raise SwitchError(f"added edge {e} is already in the graph", e)
    H = G.with_edges(added=m.added, removed=m.removed)
    assert degree_sequence(H) == degree_sequence(G)
    return H


def sandglass_to_theta(G: Graph, core: BicyclicCore) -> Graph:
    """Cross the two cycles: ``{x2x3, y2y3} -> {x2y2, x3y3}``.

    Yields a theta with path lengths ``3, r+s-3, t``.
    """
    if core.kind != "sandglass":
        raise PreconditionError(f"expected a sandglass core, got {core.kind}")
    x, y = core.cycles
    return apply_switch(G, move([(x[1], x[2]), (y[1], y[2])], [(x[1], y[1]), (x[2], y[2])]))


def bowtie_normalize(G: Graph, core: BicyclicCore) -> Graph:
    """``{x2x3, y2y3} -> {x2y2, y3x3}``, turning B(r, s) into B(3, r+s-3)."""
    if core.kind != "bowtie":
        raise PreconditionError(f"expected a bowtie core, got {core.kind}")
    x, y = core.cycles
    return apply_switch(G, move([(x[1], x[2]), (y[1], y[2])], [(x[1], y[1]), (y[2], x[2])]))


def _theta_step(G: Graph, paths: list[tuple[int, ...]]):
    """One switch towards Θ(1, 2, ·); returns ``(graph, new_paths)`` or None."""
    paths = sorted(paths, key=len)
    px, py, pz = paths
    if len(px) - 1 >= 2:
        # min >= 2: {x1x2, y_s y_(s+1)} -> {x1 y_(s+1), x2 y_s}
        u, v = px[0], px[-1]
        x2, ys = px[1], py[-2]
        H = apply_switch(G, move([(u, x2), (ys, v)], [(u, v), (x2, ys)]))
        merged = tuple(py[:-1]) + tuple(px[1:])
        return H, [(u, v), merged, pz]
    if len(py) - 1 >= 3:
        # r = 1, min(s, t) >= 3: {y2y3, z_t z_(t+1)} -> {y2 z_(t+1), y3 z_t}
        y2, y3 = py[1], py[2]
        zt, v = pz[-2], pz[-1]
        H = apply_switch(G, move([(y2, y3), (zt, v)], [(y2, v), (y3, zt)]))
        return H, [px, (py[0], y2, v), tuple(pz[:-1]) + tuple(py[2:])]
    return None


def theta_normalize(G: Graph, core: BicyclicCore, max_steps: int = 64) -> Graph:
    """Apply the two theta switches until the core is Θ(1, 2, r+s+t-3).

    Paths are re-sorted by length before every step, so each reachable
    input ends in the normal form.
    """
    if core.kind != "theta":
        raise PreconditionError(f"expected a theta core, got {core.kind}")
    paths = list(core.paths)
    for _ in range(max_steps):
        step = _theta_step(G, paths)
        if step is None:
            return G
        G, paths = step
    raise RuntimeError("theta normalization did not reach a fixed point")  # pragma: no cover


def girth_reduce_to_3(G: Graph) -> Graph:
    """Unicyclic ``G`` with ``n >= 6`` and girth 4 or 5: switch
    ``{x1y, x3x4} -> {x1x3, x4y}`` where ``y`` hangs off cycle vertex ``x1``."""
    if structural_class(G) is not StructuralClass.UNICYCLIC:
        raise PreconditionError("graph is not unicyclic")
    if G.n < 6:
        raise PreconditionError(f"need n >= 6, got {G.n}")
    g = girth(G)
    if not 4 <= g <= 5:
        raise PreconditionError(f"need girth 4 or 5, got {g}")
    cyc = unique_cycle(G)
    on_cycle = set(cyc)
    for i, x in enumerate(cyc):
        off = sorted(w for w in G.adj[x] if w not in on_cycle)
        if off:
            y = off[0]
            c = cyc[i:] + cyc[:i]
            x1, x3, x4 = c[0], c[2], c[3]
            return apply_switch(G, move([(x1, y), (x3, x4)], [(x1, x3), (x4, y)]))
    raise PreconditionError("no vertex outside the cycle is adjacent to it")


def long_cycle_disconnect(G: Graph, cycle: Optional[Sequence[int]] = None) -> Graph:
    """Pinch a cycle ``x1..xk`` (k >= 6): ``{x1x2, x4x5} -> {x1x5, x2x4}``.

    Only the degree sequence is guaranteed; whether the result is disconnected
    depends on the rest of the graph and is left to the caller to check.
    ``cycle`` defaults to the unique cycle of a unicyclic graph.
    """
    if cycle is None:
        cycle = unique_cycle(G)
    cycle = list(cycle)
    k = len(cycle)
    if k < 6:
        raise PreconditionError(f"cycle length {k} < 6")
    for i in range(k):
        if not G.has_edge(cycle[i], cycle[(i + 1) % k]):
            raise PreconditionError(f"{cycle} is not a cycle of the graph")
    x1, x2, x4, x5 = cycle[0], cycle[1], cycle[3], cycle[4]
    return apply_switch(G, move([(x1, x2), (x4, x5)], [(x1, x5), (x2, x4)]))
