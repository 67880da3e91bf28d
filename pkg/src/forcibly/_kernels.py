"""Backtracking kernels over labeled realizations.

A graph is held as an int64 array of adjacency bitmasks. The search places
one edge per frame: the pivot (highest residual degree, lowest index on
ties) takes its neighbours in increasing index order, so each labeled
realization is reached along exactly one branch. Between pivots the
residual sequence of the still-open vertices is tested with Erdős–Gallai;
no edge touches two open vertices at that point, so the test is exact.

The search is resumable: ``state`` carries ``[depth, phase, hits, edges]``
where phase 0 = fresh, 1 = resume by backtracking, 2 = exhausted.
"""

import numpy as np

from ._accel import jit

MODE_ALL = 0
MODE_DISCONNECTED = 1
MODE_COUNT = 2


@jit
def residual_graphic(res):
    m = 0
    total = 0
    for x in res:
        if x > 0:
            m += 1
            total += x
    if total % 2 == 1:
        return False
    if m == 0:
        return True
    d = np.empty(m, np.int64)
    j = 0
    for x in res:
        if x > 0:
            d[j] = x
            j += 1
    d = np.sort(d)[::-1]
    if d[0] > m - 1:
        return False
    lhs = 0
    for k in range(1, m + 1):
        lhs += d[k - 1]
        rhs = k * (k - 1)
        for i in range(k, m):
            rhs += min(d[i], k)
        if lhs > rhs:
            return False
    return True


@jit
def masks_connected(adj):
    n = adj.shape[0]
    if n <= 1:
        return True
    seen = np.int64(1)
    frontier = np.int64(1)
    while frontier != 0:
        nxt = np.int64(0)
        for v in range(n):
            if (frontier >> v) & 1:
                nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    full = (np.int64(1) << n) - 1
    return seen == full


@jit
def _next_candidate(res, adj, p, start, n):
    need = res[p]
    first = -1
    count = 0
    for c in range(start, n):
        if c != p and res[c] > 0 and not ((adj[p] >> c) & 1):
            if first < 0:
                first = c
            count += 1
            if count >= need:
                return first
    return -1


@jit
def _place(res, adj, p, c):
    res[p] -= 1
    res[c] -= 1
    adj[p] |= np.int64(1) << c
    adj[c] |= np.int64(1) << p


@jit
def _unplace(res, adj, p, c):
    res[p] += 1
    res[c] += 1
    adj[p] &= ~(np.int64(1) << c)
    adj[c] &= ~(np.int64(1) << p)


@jit
def advance(res, adj, piv, nb, state, out, mode):
    """Run until ``out`` is full or the tree is exhausted; return rows written."""
    n = res.shape[0]
    n_edges = state[3]
    cap = out.shape[0]
    written = 0
    depth = state[0]
    if state[1] == 2:
        return 0
    down = state[1] == 0
    while True:
        if down:
            if depth == n_edges:
                take = True
                if mode == MODE_DISCONNECTED:
                    take = not masks_connected(adj)
                if take:
                    state[2] += 1
                    if mode != MODE_COUNT:
                        for v in range(n):
                            out[written, v] = adj[v]
                        written += 1
                        if written == cap:
                            state[0] = depth
                            state[1] = 1
                            return written
                down = False
                continue
            if depth > 0 and res[piv[depth - 1]] > 0:
                p = piv[depth - 1]
                start = nb[depth - 1] + 1
            else:
                if not residual_graphic(res):
                    down = False
                    continue
                p = 0
                for v in range(1, n):
                    if res[v] > res[p]:
                        p = v
                start = 0
            c = _next_candidate(res, adj, p, start, n)
            if c < 0:
                down = False
                continue
            piv[depth] = p
            nb[depth] = c
            _place(res, adj, p, c)
            depth += 1
        else:
            if depth == 0:
                state[0] = 0
                state[1] = 2
                return written
            depth -= 1
            p = piv[depth]
            c = nb[depth]
            _unplace(res, adj, p, c)
            c2 = _next_candidate(res, adj, p, c + 1, n)
            if c2 >= 0:
                nb[depth] = c2
                _place(res, adj, p, c2)
                depth += 1
                down = True


class Search:
    """Host-side wrapper holding the resumable kernel state."""

    def __init__(self, degrees, mode=MODE_ALL, batch=4096):
        deg = np.asarray(degrees, dtype=np.int64)
        self.n = deg.shape[0]
        n_edges = int(deg.sum()) // 2
        self.res = deg.copy()
        self.adj = np.zeros(self.n, np.int64)
        self.piv = np.zeros(max(n_edges, 1), np.int64)
        self.nb = np.zeros(max(n_edges, 1), np.int64)
        self.state = np.array([0, 0, 0, n_edges], np.int64)
        self.mode = mode
        self.out = np.zeros((0 if mode == MODE_COUNT else batch, self.n), np.int64)

    @property
    def done(self) -> bool:
        return self.state[1] == 2

    @property
    def hits(self) -> int:
        return int(self.state[2])

    def step(self) -> np.ndarray:
        k = advance(self.res, self.adj, self.piv, self.nb, self.state, self.out, self.mode)
        return self.out[:k]
