"""Bitset-backed simple graphs and girth-cycle counting.

Vertices are integers 0..n-1.  Adjacency is stored as one Python int per
vertex (bit j of row u set iff u and v=j are adjacent), which keeps the
hot loops in C-level integer ops.  A graph is vertex-girth-regular with
parameters (v, k, g, lambda) when it is connected, k-regular, has girth g
and every vertex lies on exactly lambda cycles of length g.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

MAX_ORDER = 512


class DisconnectedGraphError(ValueError):
    """Raised when an operation needs a connected graph."""


@dataclass(frozen=True)
class VgrProfile:
    """Classification result for a vertex-girth-regular graph.

    lambda_edge is the common per-edge girth-cycle count when the graph
    is also edge-girth-regular, else None.
    """

    v: int
    k: int
    g: int
    lam: int
    is_egr: bool
    is_bipartite: bool
    lambda_edge: int | None = None


@dataclass(frozen=True)
class NotVgr:
    """Why a graph failed classification, with the first witness found."""

    reason: str
    witness: tuple

    def __bool__(self) -> bool:
        return False


def bits(mask: int):
    """Yield the indices of the set bits of mask, ascending."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges=()):
        if not 1 <= n <= MAX_ORDER:
            raise ValueError(f"order {n} outside 1..{MAX_ORDER}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(rows))

    @classmethod
    def from_rows(cls, rows) -> "Graph":
        """Wrap precomputed adjacency rows; rows must be symmetric."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", len(rows))
        object.__setattr__(g, "adj", tuple(rows))
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def neighbors(self, u: int):
        return bits(self.adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self):
        """Yield each edge once as (u, v) with u < v, sorted."""
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(m):
                yield (u, v)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self) -> int:
        return hash(self.adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    adj = g.adj
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= adj[u]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def is_bipartite(g: Graph) -> bool:
    adj = g.adj
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            u = queue.pop()
            cu = color[u]
            for w in bits(adj[u]):
                if color[w] < 0:
                    color[w] = 1 - cu
                    queue.append(w)
                elif color[w] == cu:
                    return False
    return True


def girth(g: Graph):
    """Length of a shortest cycle, or math.inf for a forest.

    One BFS per root; a non-tree edge seen at depth d from the root
    witnesses a cycle of length at most dist[x] + dist[w] + 1, and the
    minimum of those estimates over all roots is exact.
    """
    adj = g.adj
    n = g.n
    best = math.inf
    for r in range(n):
        dist = [-1] * n
        dist[r] = 0
        frontier = [r]
        while frontier:
            dx = dist[frontier[0]]
            if 2 * dx + 1 >= best:
                break
            nxt = []
            for x in frontier:
                for w in bits(adj[x]):
                    dw = dist[w]
                    if dw < 0:
                        dist[w] = dx + 1
                        nxt.append(w)
                    elif dw >= dx:
                        cand = dx + dw + 1
                        if cand < best:
                            best = cand
            frontier = nxt
    return best


def _layers(adj, u: int, depth: int):
    """BFS level masks [L0..Ldepth] from u; trailing levels may be 0."""
    seen = 1 << u
    frontier = 1 << u
    out = [frontier]
    for _ in range(depth):
        nxt = 0
        for x in bits(frontier):
            nxt |= adj[x]
        frontier = nxt & ~seen
        seen |= frontier
        out.append(frontier)
    return out


def count_girth_cycles_vertex(g: Graph, u: int, length: int) -> int:
    """Number of cycles of the given length through u.

    Only valid when girth(g) >= length: the count is then read off at the
    cycle midpoints (an antipodal edge for odd lengths, a pair of
    internally disjoint half-paths for even lengths), each girth cycle
    contributing exactly once.
    """
    adj = g.adj
    h = length // 2
    if length % 2:
        lay = _layers(adj, u, h)
        lh = lay[h]
        return sum((adj[x] & lh).bit_count() for x in bits(lh)) // 2
    lay = _layers(adj, u, h)
    cnt = {u: 1}
    for i in range(1, h + 1):
        prev = lay[i - 1]
        nc = {}
        for z in bits(lay[i]):
            nc[z] = sum(cnt[w] for w in bits(adj[z] & prev))
        cnt = nc
    return sum(c * (c - 1) // 2 for c in cnt.values())


def count_girth_cycles_edge(g: Graph, u: int, v: int, length: int) -> int:
    """Number of cycles of the given length through the edge uv.

    Same midpoint scheme as the vertex count, restricted to the branch of
    the BFS tree of u that starts with v.  Requires girth(g) >= length.
    """
    adj = g.adj
    if not adj[u] >> v & 1:
        raise ValueError(f"({u},{v}) is not an edge")
    h = length // 2
    lay = _layers(adj, u, h)
    if length % 2:
        branch = 1 << v
        for i in range(2, h + 1):
            nxt = 0
            for x in bits(branch):
                nxt |= adj[x]
            branch = nxt & lay[i]
        lh = lay[h]
        other = lh & ~branch
        return sum((adj[x] & other).bit_count() for x in bits(branch & lh))
    cnt = {u: 1}
    cv = {u: 0}
    for i in range(1, h + 1):
        prev = lay[i - 1]
        nc, ncv = {}, {}
        for z in bits(lay[i]):
            nc[z] = sum(cnt[w] for w in bits(adj[z] & prev))
            ncv[z] = sum(cv[w] for w in bits(adj[z] & prev))
            if i == 1 and z == v:
                ncv[z] = 1
        cnt, cv = nc, ncv
    return sum(cv[z] * (cnt[z] - cv[z]) for z in cnt)


def vertex_signature(g: Graph, u: int, length: int) -> tuple:
    """Per-incident-edge cycle counts at u, sorted non-increasing.

    The entries sum to twice the vertex count at u.
    """
    return tuple(
        sorted(
            (count_girth_cycles_edge(g, u, w, length) for w in g.neighbors(u)),
            reverse=True,
        )
    )


def total_girth_cycles(g: Graph) -> int:
    """Number of girth cycles in the whole graph (0 for a forest)."""
    gi = girth(g)
    if gi is math.inf:
        return 0
    s = sum(count_girth_cycles_vertex(g, u, gi) for u in range(g.n))
    assert s % gi == 0
    return s // gi


def classify(g: Graph):
    """Return a VgrProfile, or NotVgr with the first failing witness.

    Raises DisconnectedGraphError when g is not connected; regularity,
    finite girth and equal per-vertex cycle counts are reported as NotVgr.
    """
    if not is_connected(g):
        raise DisconnectedGraphError(f"graph on {g.n} vertices is disconnected")
    k = g.degree(0)
    for u in range(1, g.n):
        if g.degree(u) != k:
            return NotVgr("not-regular", (u, g.degree(u), k))
    gi = girth(g)
    if gi is math.inf:
        return NotVgr("acyclic", ())
    lam = count_girth_cycles_vertex(g, 0, gi)
    for u in range(1, g.n):
        c = count_girth_cycles_vertex(g, u, gi)
        if c != lam:
            return NotVgr("cycle-count-varies", (u, c, lam))
    lambda_edge = None
    is_egr = True
    for u, w in g.edges():
        c = count_girth_cycles_edge(g, u, w, gi)
        if lambda_edge is None:
            lambda_edge = c
        elif c != lambda_edge:
            is_egr = False
            lambda_edge = None
            break
    return VgrProfile(
        v=g.n,
        k=k,
        g=gi,
        lam=lam,
        is_egr=is_egr,
        is_bipartite=is_bipartite(g),
        lambda_edge=lambda_edge if is_egr else None,
    )
