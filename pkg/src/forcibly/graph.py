"""Simple undirected graphs, structural metrics and named families."""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .sequence import DegreeSequence

__all__ = [
    "BicyclicCore",
    "ConstructionError",
    "Graph",
    "StructuralClass",
    "bicyclic_core",
    "components",
    "cycle_edges",
    "degree_sequence",
    "diameter",
    "disjoint_union",
    "distance",
    "girth",
    "is_connected",
    "is_double_star",
    "is_star",
    "make_bowtie",
    "make_complete_bipartite",
    "make_cycle",
    "make_double_star",
    "make_path",
    "make_sandglass",
    "make_star",
    "make_theta",
    "pendant_vertices",
    "peripheral_forest",
    "structural_class",
    "two_core",
    "unique_cycle",
]

INF = math.inf

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class ConstructionError(ValueError):
    """Bad parameters for a named-graph constructor."""


class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "_edges")

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        adj = tuple(frozenset(a) for a in adj)
        if len(adj) != n:
            raise ValueError(f"adjacency has {len(adj)} rows, expected {n}")
        for u, nbrs in enumerate(adj):
            if u in nbrs:
                raise ValueError(f"self-loop at {u}")
            for v in nbrs:
                if not 0 <= v < n:
                    raise ValueError(f"vertex {v} out of range")
                if u not in adj[v]:
                    raise ValueError(f"asymmetric adjacency {u}-{v}")
        self.n = n
        self.adj = adj
        self._edges = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge {norm_edge(u, v)}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "Graph":
        masks = [int(m) for m in masks]
        n = len(masks)
        return cls(n, [[v for v in range(n) if m >> v & 1] for m in masks])

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Sorted ``(u, v)`` pairs with ``u < v``."""
        if self._edges is None:
            self._edges = tuple(sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v))
        return self._edges

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def masks(self) -> list[int]:
        return [sum(1 << v for v in a) for a in self.adj]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex ``v`` becomes ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def add_vertices(self, k: int) -> "Graph":
        return Graph(self.n + k, list(self.adj) + [()] * k)

    def with_edges(self, added: Iterable[Edge] = (), removed: Iterable[Edge] = ()) -> "Graph":
        es = set(self.edges)
        es.difference_update(norm_edge(*e) for e in removed)
        return Graph.from_edges(self.n, list(es) + [norm_edge(*e) for e in added])

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    # edge-list text: "n" then "u v" per line
    def to_edgelist(self) -> str:
        lines = [str(self.n)] + [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edgelist(cls, text: str) -> "Graph":
        rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not rows or len(rows[0]) != 1:
            raise ValueError("edge list must start with the vertex count")
        n = int(rows[0][0])
        edges = []
        for row in rows[1:]:
            if len(row) != 2:
                raise ValueError(f"bad edge line {' '.join(row)!r}")
            edges.append(norm_edge(int(row[0]), int(row[1])))
        return cls.from_edges(n, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges: list[Edge] = []
    off = 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges)
        off += g.n
    return Graph.from_edges(off, edges)


# --- metrics ---------------------------------------------------------------

def degree_sequence(G: Graph) -> DegreeSequence:
    return DegreeSequence(tuple(G.degrees()))


def _bfs(G: Graph, src: int) -> list[float]:
    dist: list[float] = [INF] * G.n
    dist[src] = 0
    q = deque([src])
    while q:
        u = q.popleft()
        for w in G.adj[u]:
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def components(G: Graph) -> list[frozenset[int]]:
    seen = [False] * G.n
    out = []
    for s in range(G.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        i = 0
        while i < len(comp):
            for w in G.adj[comp[i]]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
            i += 1
        out.append(frozenset(comp))
    return out


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(components(G)) == 1


def distance(G: Graph, u: int, v: int) -> float:
    for x in (u, v):
        if not 0 <= x < G.n:
            raise IndexError(f"vertex {x} out of range for n={G.n}")
    return _bfs(G, u)[v]


def diameter(G: Graph) -> float:
    best: float = 0
    for s in range(G.n):
        best = max(best, max(_bfs(G, s)))
    return best


def girth(G: Graph) -> float:
    """Shortest cycle length by BFS from every vertex; ``inf`` for forests."""
    best = INF
    for s in range(G.n):
        dist = [-1] * G.n
        parent = [-1] * G.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            if 2 * dist[u] >= best:
                break
            for w in G.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def pendant_vertices(G: Graph) -> frozenset[int]:
    return frozenset(v for v in range(G.n) if len(G.adj[v]) == 1)


def bridges(G: Graph) -> frozenset[Edge]:
    """Tarjan low-link, iterative."""
    disc = [-1] * G.n
    low = [0] * G.n
    out = set()
    t = 0
    for root in range(G.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(sorted(G.adj[root])))]
        while stack:
            u, pu, it = stack[-1]
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, u, iter(sorted(G.adj[w]))))
                    break
                if w != pu:
                    low[u] = min(low[u], disc[w])
            else:
                stack.pop()
                if pu >= 0:
                    low[pu] = min(low[pu], low[u])
                    if low[u] > disc[pu]:
                        out.add(norm_edge(pu, u))
    return frozenset(out)


def cycle_edges(G: Graph) -> frozenset[Edge]:
    """Edges lying on at least one cycle, i.e. the non-bridges."""
    b = bridges(G)
    return frozenset(e for e in G.edges if e not in b)


def peripheral_forest(G: Graph) -> dict[int, frozenset[int]]:
    """Map each vertex to its component after deleting all cycle edges."""
    forest = G.with_edges(removed=cycle_edges(G))
    out = {}
    for comp in components(forest):
        for v in comp:
            out[v] = comp
    return out


def is_star(G: Graph) -> bool:
    """Tree of diameter at most 2 (K1 and K2 included)."""
    return G.n >= 1 and G.m == G.n - 1 and is_connected(G) and diameter(G) <= 2


def is_double_star(G: Graph) -> bool:
    return G.m == G.n - 1 and is_connected(G) and diameter(G) == 3


class StructuralClass(str, enum.Enum):
    FOREST = "forest"
    TREE = "tree"
    UNICYCLIC = "unicyclic"
    BICYCLIC = "bicyclic"
    OTHER = "other"


def structural_class(G: Graph) -> StructuralClass:
    conn = is_connected(G)
    if conn and G.n >= 1:
        if G.m == G.n - 1:
            return StructuralClass.TREE
        if G.m == G.n:
            return StructuralClass.UNICYCLIC
        if G.m == G.n + 1:
            return StructuralClass.BICYCLIC
        return StructuralClass.OTHER
    # acyclic iff every component is a tree
    if G.m == G.n - len(components(G)):
        return StructuralClass.FOREST
    return StructuralClass.OTHER


# --- constructors ------------------------------------------------------------

def make_cycle(k: int) -> Graph:
    if k < 3:
        raise ConstructionError(f"cycle needs k >= 3, got {k}")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def make_path(k: int) -> Graph:
    """P_k: ``k`` edges on ``k + 1`` vertices."""
    if k < 0:
        raise ConstructionError(f"path needs k >= 0, got {k}")
    return Graph.from_edges(k + 1, [(i, i + 1) for i in range(k)])


def make_star(k: int) -> Graph:
    """K_{1,k}: center 0, leaves 1..k."""
    if k < 0:
        raise ConstructionError(f"star needs k >= 0, got {k}")
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def make_double_star(a: int, b: int) -> Graph:
    """Adjacent centers 0 and 1 of degrees ``a`` and ``b``."""
    if a < 2 or b < 2:
        raise ConstructionError(f"double-star needs a, b >= 2, got {a}, {b}")
    edges = [(0, 1)]
    nxt = 2
    for c, d in ((0, a), (1, b)):
        for _ in range(d - 1):
            edges.append((c, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


def make_complete_bipartite(s: int, t: int) -> Graph:
    if s < 1 or t < 1:
        raise ConstructionError(f"K_(s,t) needs s, t >= 1, got {s}, {t}")
    return Graph.from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def make_theta(r: int, s: int, t: int) -> Graph:
    """Ends 0 and 1, then the interiors of the r-, s- and t-paths in order."""
    lens = (r, s, t)
    if min(lens) < 1 or sorted(lens)[1] < 2:
        raise ConstructionError(f"theta needs lengths >= 1 with at most one equal to 1, got {lens}")
    edges = []
    nxt = 2
    for length in lens:
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph.from_edges(nxt, edges)


def make_bowtie(r: int, s: int) -> Graph:
    """Hub 0; first cycle 0,1..r-1; second cycle 0,r..r+s-2."""
    if r < 3 or s < 3:
        raise ConstructionError(f"bowtie needs r, s >= 3, got {r}, {s}")
    first = [0] + list(range(1, r))
    second = [0] + list(range(r, r + s - 1))
    edges = []
    for cyc in (first, second):
        edges += [(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]
    return Graph.from_edges(r + s - 1, edges)


def make_sandglass(r: int, s: int, t: int) -> Graph:
    """Cycles 0..r-1 and r..r+s-1 joined by a t-edge path from 0 to r."""
    if r < 3 or s < 3 or t < 1:
        raise ConstructionError(f"sandglass needs r, s >= 3 and t >= 1, got {r}, {s}, {t}")
    edges = [(i, (i + 1) % r) for i in range(r)]
    edges += [(r + i, r + (i + 1) % s) for i in range(s)]
    path = [0] + list(range(r + s, r + s + t - 1)) + [r]
    edges += list(zip(path, path[1:]))
    return Graph.from_edges(r + s + t - 1, edges)


# --- cycle structure ---------------------------------------------------------

def two_core(G: Graph) -> frozenset[int]:
    """Vertices surviving repeated deletion of degree <= 1 vertices."""
    deg = G.degrees()
    alive = [True] * G.n
    q = deque(v for v in range(G.n) if deg[v] <= 1)
    while q:
        v = q.popleft()
        if not alive[v]:
            continue
        alive[v] = False
        for w in G.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    q.append(w)
    return frozenset(v for v in range(G.n) if alive[v])


def _trace(core_adj: dict[int, set[int]], start: int, first: int) -> list[int]:
    """Walk from ``start`` through ``first`` until the next branch vertex."""
    path = [start, first]
    while len(core_adj[path[-1]]) == 2:
        a, b = core_adj[path[-1]]
        nxt = a if a != path[-2] else b
        path.append(nxt)
    return path


def unique_cycle(G: Graph) -> list[int]:
    """Vertices of the single cycle of a unicyclic graph, in cyclic order,
    starting from the smallest vertex and stepping to its smaller neighbour."""
    core = two_core(G)
    if not core:
        raise ValueError("graph has no cycle")
    core_adj = {v: {w for w in G.adj[v] if w in core} for v in core}
    if any(len(a) != 2 for a in core_adj.values()):
        raise ValueError("graph has more than one cycle")
    start = min(core)
    cyc = [start]
    prev, cur = start, min(core_adj[start])
    while cur != start:
        cyc.append(cur)
        a, b = core_adj[cur]
        prev, cur = cur, (a if a != prev else b)
    if len(cyc) != len(core):
        raise ValueError("graph has more than one cycle")
    return cyc


@dataclass(frozen=True)
class BicyclicCore:
    """Skeleton of a bicyclic graph.

    ``sandglass``: ``params=(r, s, t)`` with ``r <= s``; ``cycles`` are the two
    cycles each starting at its attachment vertex and ``paths[0]`` joins them.
    ``bowtie``: ``params=(r, s)``, ``r <= s``; both cycles start at the hub.
    ``theta``: ``params=(r, s, t)`` ascending; ``paths`` run between the two
    branch vertices, in the same order as ``params``.
    """

    kind: str
    params: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...] = ()
    paths: tuple[tuple[int, ...], ...] = ()


def _orient_cycle(loop: list[int]) -> tuple[int, ...]:
    # loop = [b, ..., b]; step to the smaller neighbour of b first
    body = loop[:-1]
    if len(body) > 2 and body[-1] < body[1]:
        body = [body[0]] + body[1:][::-1]
    return tuple(body)


def bicyclic_core(G: Graph) -> BicyclicCore:
    """Classify the 2-core of a bicyclic graph as sandglass, bowtie or theta."""
    if structural_class(G) is not StructuralClass.BICYCLIC:
        raise ValueError("graph is not bicyclic")
    core = two_core(G)
    core_adj = {v: {w for w in G.adj[v] if w in core} for v in core}
    branch = sorted(v for v in core if len(core_adj[v]) >= 3)
    if len(branch) == 1:
        hub = branch[0]
        loops = []
        done: set[int] = set()
        for w in sorted(core_adj[hub]):
            if w in done:
                continue
            p = _trace(core_adj, hub, w)
            done.add(p[-2])
            loops.append(_orient_cycle(p))
        loops.sort(key=lambda c: (len(c), c))
        return BicyclicCore("bowtie", tuple(len(c) for c in loops), cycles=tuple(loops))
    if len(branch) != 2:  # pragma: no cover - impossible for bicyclic graphs
        raise ValueError(f"unexpected 2-core with branch vertices {branch}")
    a, b = branch
    walks = [_trace(core_adj, a, w) for w in sorted(core_adj[a])]
    joining = [p for p in walks if p[-1] == b]
    if len(joining) == 3:
        joining.sort(key=lambda p: (len(p), p))
        return BicyclicCore(
            "theta", tuple(len(p) - 1 for p in joining), paths=tuple(tuple(p) for p in joining)
        )
    # sandglass: one joining path, one loop at each branch vertex
    path = joining[0]
    loop_a = next(p for p in walks if p[-1] == a)
    loop_b = next(_trace(core_adj, b, w) for w in sorted(core_adj[b]) if w != path[-2])
    ca, cb = _orient_cycle(loop_a), _orient_cycle(loop_b)
    if (len(cb), cb) < (len(ca), ca):
        ca, cb, path = cb, ca, path[::-1]
    return BicyclicCore("sandglass", (len(ca), len(cb), len(path) - 1), cycles=(ca, cb), paths=(tuple(path),))
