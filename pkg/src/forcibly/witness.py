"""Disconnected realizations that refute forcibly tree/unicyclic/bicyclic.

Each gadget is a disjoint union of a small cyclic or star skeleton with a
K2 (or K_{1,2}) plus pendant vertices; the catalog is keyed by the degree
pattern it realizes so a sequence can pick its gadget automatically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .enumeration import DEFAULT_LIMIT, LimitExceeded, find_disconnected
from .graph import (
    ConstructionError,
    Graph,
    StructuralClass,
    components,
    degree_sequence,
    disjoint_union,
    distance,
    girth,
    is_connected,
    make_bowtie,
    make_path,
    make_star,
    make_theta,
    norm_edge,
    pendant_vertices,
    structural_class,
)
from .sequence import NotGraphicError, SequenceLike, as_sequence, havel_hakimi_realize, is_graphic, render_sequence
from .switching import PreconditionError, SwitchError, apply_switch, long_cycle_disconnect, move

__all__ = [
    "GADGETS",
    "WitnessResult",
    "WitnessUndecided",
    "build_gadget",
    "disconnected_witness",
    "match_gadget",
    "pendant_disconnect",
]


class WitnessUndecided(RuntimeError):
    """No construction applied and the sequence is too long to enumerate."""


@dataclass(frozen=True)
class WitnessResult:
    graph: Graph
    method: str

    @property
    def components(self) -> int:
        return len(components(self.graph))

    def __post_init__(self):
        if is_connected(self.graph):
            raise AssertionError(f"witness via {self.method} is connected")


def pendant_disconnect(G: Graph) -> Graph:
    """Pendants ``u, v`` at distance > 3 with neighbours ``u', v'``:
    ``{uu', vv'} -> {uv, u'v'}`` splits off the edge ``uv``."""
    pend = sorted(pendant_vertices(G))
    for i, u in enumerate(pend):
        for v in pend[i + 1:]:
            if distance(G, u, v) > 3:
                (pu,) = G.adj[u]
                (pv,) = G.adj[v]
                return apply_switch(G, move([(u, pu), (v, pv)], [(u, v), (pu, pv)]))
    raise PreconditionError("no pair of pendant vertices at distance > 3")


# --- gadgets -------------------------------------------------------------------

def _hang(G: Graph, counts: dict[int, int]) -> Graph:
    """Attach ``counts[v]`` new pendant vertices to each ``v``, ascending ids."""
    edges = list(G.edges)
    nxt = G.n
    for v in sorted(counts):
        for _ in range(counts[v]):
            edges.append((v, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


def _k2() -> Graph:
    return make_path(1)


def _need(ok: bool, name: str, params) -> None:
    if not ok:
        raise ConstructionError(f"gadget {name} does not accept {params}")


def _g1_uni(r, s, t, n):
    # kite: degree-3 ends 0, 1; degree-2 vertices 2, 3
    _need(r >= s >= 3 and t >= 2 and r + s + t == n + 2, "G1-uni", (r, s, t, n))
    return disjoint_union(_hang(make_theta(1, 2, 2), {0: r - 3, 1: s - 3, 2: t - 2}), _k2())


def _g2_uni(r, s, t, n):
    _need(n >= 7, "G2-uni", (r, s, t, n))
    return disjoint_union(_hang(make_bowtie(3, 3), {0: n - 7}), _k2())


def _g3_uni(r, s, t, n):
    # Θ(1,2,3): ends 0, 1; interior 2 (length-2 path) and 3, 4
    _need(r >= s >= 3 and t >= 2 and r + s + t == n + 1, "G3-uni", (r, s, t, n))
    return disjoint_union(_hang(make_theta(1, 2, 3), {0: r - 3, 1: s - 3, 2: t - 2}), _k2())


def _star_with_leaf_edges(k: int, extra: list[tuple[int, int]]) -> Graph:
    """K_{1,k} plus edges between leaves (leaves are 1..k)."""
    return make_star(k).with_edges(added=extra)


def _b_star_1(r, s, t, n):
    _need(n >= 7, "B-star-1", (r, s, t, n))
    return disjoint_union(_star_with_leaf_edges(n - 3, [(1, 2), (2, 3), (3, 4)]), _k2())


def _b_star_2(r, s, t, n):
    _need(n >= 8, "B-star-2", (r, s, t, n))
    return disjoint_union(_star_with_leaf_edges(n - 3, [(1, 2), (2, 3), (4, 5)]), _k2())


def _b_star_3(r, s, t, n):
    _need(n >= 8, "B-star-3", (r, s, t, n))
    return disjoint_union(_star_with_leaf_edges(n - 4, [(1, 2), (2, 3), (3, 4)]), make_star(2))


def _theta_plus(lens, r, s, t, name):
    _need(r >= s >= 4 and t >= 2, name, (r, s, t))
    # ends 0, 1 become degree 4; vertex 2 is a degree-2 interior vertex
    core = make_theta(*lens).with_edges(added=[(0, 1)])
    return disjoint_union(_hang(core, {0: r - 4, 1: s - 4, 2: t - 2}), _k2())


def _b_theta_1(r, s, t, n):
    _need(r + s + t == n + 3, "B-theta-1", (r, s, t, n))
    return _theta_plus((2, 2, 2), r, s, t, "B-theta-1")


def _b_theta_2(r, s, t, n):
    _need(r + s + t == n + 2, "B-theta-2", (r, s, t, n))
    return _theta_plus((2, 2, 3), r, s, t, "B-theta-2")


GADGETS: dict[str, Callable[..., Graph]] = {
    "G1-uni": _g1_uni,
    "G2-uni": _g2_uni,
    "G3-uni": _g3_uni,
    "B-star-1": _b_star_1,
    "B-star-2": _b_star_2,
    "B-star-3": _b_star_3,
    "B-theta-1": _b_theta_1,
    "B-theta-2": _b_theta_2,
}


def build_gadget(name: str, r: int = 0, s: int = 0, t: int = 0, n: int = 0) -> Graph:
    """Build a named gadget; see ``GADGETS`` for the catalog."""
    try:
        fn = GADGETS[name]
    except KeyError:
        raise ConstructionError(f"unknown gadget {name!r}") from None
    return fn(r, s, t, n)


def _ones(d, start):
    return all(x == 1 for x in d[start:])


def match_gadget(D: SequenceLike) -> Optional[tuple[str, tuple[int, int, int, int]]]:
    """Gadget name and ``(r, s, t, n)`` whose degree pattern equals ``D``."""
    d = as_sequence(D).degrees
    n = len(d)
    if n < 6:
        return None
    total = sum(d)
    r, s, t = d[0], d[1], d[2]
    params = (r, s, t, n)
    if total == 2 * n:
        if d[3] == 2 and _ones(d, 4) and s >= 3:
            return "G1-uni", params
        if d[3] == 2 and d[4] == 2 and _ones(d, 5):
            if s == 2 and n >= 7:
                return "G2-uni", params
            if s >= 3:
                return "G3-uni", params
    elif total == 2 * n + 2:
        if d[3] == 2 and d[4] == 2 and _ones(d, 5):
            if s == 3 and t == 3 and n >= 7:
                return "B-star-1", params
            if s >= 4:
                return "B-theta-1", params
        if n >= 8 and d[3] == d[4] == d[5] == 2 and _ones(d, 6):
            if s == 3 and t == 2:
                return "B-star-2", params
            if s == 3 and t == 3:
                return "B-star-3", params
            if s >= 4:
                return "B-theta-2", params
    return None


def _check(g: Graph, D, method: str) -> Optional[WitnessResult]:
    if degree_sequence(g) == D and not is_connected(g):
        return WitnessResult(g, method)
    return None


def disconnected_witness(D: SequenceLike, limit: int = DEFAULT_LIMIT) -> Optional[WitnessResult]:
    """A disconnected realization of ``D``, or None when every realization is
    connected. Tries the gadget catalog, then switches on the Havel–Hakimi
    realization, then exhaustive search.

    Raises WitnessUndecided when nothing constructive applies and ``n`` is
    over ``limit``.
    """
    D = as_sequence(D)
    if not is_graphic(D):
        raise NotGraphicError(f"({render_sequence(D)}) is not graphic")
    hit = match_gadget(D)
    if hit is not None:
        name, params = hit
        res = _check(build_gadget(name, *params), D, f"gadget:{name}")
        if res is not None:
            return res
    base = havel_hakimi_realize(D)
    if not is_connected(base):
        return WitnessResult(base, "realization")
    try:
        res = _check(pendant_disconnect(base), D, "pendant-switch")
        if res is not None:
            return res
    except PreconditionError:
        pass
    if structural_class(base) is StructuralClass.UNICYCLIC and girth(base) >= 6:
        try:
            res = _check(long_cycle_disconnect(base), D, "long-cycle-switch")
            if res is not None:
                return res
        except (PreconditionError, SwitchError):
            pass
    try:
        g = find_disconnected(D, limit)
    except LimitExceeded as exc:
        raise WitnessUndecided(f"({render_sequence(D)}): {exc}") from exc
    return None if g is None else WitnessResult(g, "enumeration")
