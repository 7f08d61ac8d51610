"""Exhaustive generation of vertex-girth-regular graphs.

Branch and bound over edge additions.  The search starts from the
(k, g) Moore tree padded with isolated vertices and keeps, per state,
the set of candidate edges whose addition would not create a short
cycle, exceed degree k, or push a vertex past lambda girth cycles.
Each step picks one candidate edge and branches on adding it versus
declining it forever, so every k-regular girth-g completion on v
vertices is reached exactly once per labeled graph; accepted leaves are
reclassified from scratch and deduplicated up to isomorphism.

Search state is carried in parallel per-vertex lists: adjacency
bitmasks, girth-cycle counts, candidate bitmasks, plus the edge count
and cached distance balls.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from multiprocessing import get_context

from .bounds import (
    best_lower_bound,
    divisibility_refine,
    lambda_max,
    moore_bound,
    nonexistence_verdict,
)
from .canon import canonical_form, state_key
from .graph import DisconnectedGraphError, Graph, bits, classify


class ParameterImpossible(ValueError):
    """Parameters ruled out by a non-existence rule."""

    def __init__(self, k: int, g: int, lam: int, rule: str):
        super().__init__(f"no graphs with k={k} g={g} lambda={lam}: {rule}")
        self.rule = rule


class SearchTimeout(Exception):
    """Search hit its deadline; .graphs holds what was found so far."""

    graphs: list = []


@dataclass
class SearchOptions:
    """Toggles for the optional pruning rules and the execution mode.

    Disabling a prune never changes the set of generated graphs, only
    the time taken.  iso_max_edges limits isomorphism pruning to states
    with at most that many edges (None means no limit); deadline is a
    time.monotonic() timestamp after which the search aborts.
    """

    prune_deficit: bool = True
    prune_balance: bool = True
    prune_iso: bool = True
    iso_max_edges: int | None = None
    threads: int = 1
    split_depth: int | None = None
    deadline: float | None = None


@dataclass
class SearchStats:
    nodes: int = 0
    accepted: int = 0
    deficit_prunes: int = 0
    balance_prunes: int = 0
    iso_prunes: int = 0
    dead_ends: int = 0


def moore_tree(k: int, g: int) -> Graph:
    """BFS-numbered starting tree: every girth-g graph of degree <= k
    contains it, rooted at a vertex for odd g and at an edge for even g.
    """
    edges = []
    if g % 2:
        depth = (g - 1) // 2
        level = [0]
        nxt = 1
    else:
        depth = g // 2 - 1
        edges.append((0, 1))
        level = [0, 1]
        nxt = 2
    for d in range(depth):
        new_level = []
        for u in level:
            need = k if (g % 2 and d == 0) else k - 1
            for _ in range(need):
                edges.append((u, nxt))
                new_level.append(nxt)
                nxt += 1
        level = new_level
    return Graph(nxt, edges)


def _all_balls(adj, v: int, g: int, skip: int = 0):
    """balls[u][r] = bitmask of vertices within distance r of u, r < g.

    Rows for vertices in the skip mask are None; saturated vertices are
    never candidate endpoints, so their rows go unused.
    """
    out = []
    for u in range(v):
        if skip >> u & 1:
            out.append(None)
            continue
        seen = 1 << u
        frontier = seen
        row = [seen]
        for _ in range(g - 1):
            nxt = 0
            for x in bits(frontier):
                nxt |= adj[x]
            frontier = nxt & ~seen
            seen |= frontier
            row.append(seen)
        out.append(row)
    return out


def _pair_sig(v, adj, cand, cyc):
    """Cheap isomorphism-invariant hash of a search state.

    Two refinement rounds of neighbourhood sums over both relations.
    Collisions only cost a canonical-form comparison, never correctness.
    """
    h = [
        adj[u].bit_count() << 20 | cand[u].bit_count() << 10 | cyc[u]
        for u in range(v)
    ]
    alists = []
    clists = []
    for u in range(v):
        row = []
        m = adj[u]
        while m:
            b = m & -m
            row.append(b.bit_length() - 1)
            m ^= b
        alists.append(row)
        row = []
        m = cand[u]
        while m:
            b = m & -m
            row.append(b.bit_length() - 1)
            m ^= b
        clists.append(row)
    mask = (1 << 61) - 1
    for _ in range(2):
        nh = [0] * v
        for u in range(v):
            s1 = 0
            for w in alists[u]:
                s1 += h[w]
            s2 = 0
            for w in clists[u]:
                s2 += h[w]
            nh[u] = (h[u] * 0x9E3779B97F4A7C15 + s1 * 31 + s2 * 131) & mask
        h = nh
    return hash(tuple(sorted(h)))


def _pack_state(v, adj, cand):
    acc = 0
    for r in adj:
        acc = acc << v | r
    for r in cand:
        acc = acc << v | r
    return acc.to_bytes((2 * v * v + 7) // 8, "big")


def _unpack_state(v, blob):
    acc = int.from_bytes(blob, "big")
    mask = (1 << v) - 1
    rows = []
    for i in range(2 * v):
        rows.append(acc >> ((2 * v - 1 - i) * v) & mask)
    return rows[:v], rows[v:]


def _cycle_increments(adj, a, b, length, ball_b, cyc, lam):
    """Per-vertex counts of new girth cycles if edge ab were added.

    Enumerates simple a..b paths of exactly `length` edges (the graph has
    girth > length, so these are the only cycles the edge can close).
    Returns None as soon as some vertex would exceed lam cycles.
    """
    inc = {a: 0, b: 0}
    path = [a]
    not_b = ~(1 << b)
    ok = True

    def walk(x, visited, rem):
        nonlocal ok
        if rem == 1:
            if adj[x] >> b & 1:
                for y in path:
                    ny = inc.get(y, 0) + 1
                    if cyc[y] + ny > lam:
                        ok = False
                        return
                    inc[y] = ny
                nb = inc[b] + 1
                if cyc[b] + nb > lam:
                    ok = False
                    return
                inc[b] = nb
            return
        choices = adj[x] & ~visited & ball_b[rem - 1] & not_b
        for y in bits(choices):
            path.append(y)
            walk(y, visited | (1 << y), rem - 1)
            path.pop()
            if not ok:
                return

    walk(a, 1 << a, length)
    return inc if ok else None


def _filter_candidates(v, k, g, lam, adj, cyc, cand, balls):
    """Drop candidates that now violate a degree, girth or count limit."""
    full = 0
    for u in range(v):
        if adj[u].bit_count() >= k:
            full |= 1 << u
    out = [0] * v
    notfull = ~full
    for c in range(v):
        if full >> c & 1:
            continue
        m = (cand[c] & notfull) >> (c + 1) << (c + 1)
        if m == 0:
            continue
        bc = balls[c]
        kill = bc[g - 2]
        near = bc[g - 1]
        keep = 0
        for d in bits(m):
            if kill >> d & 1:
                continue
            if (
                near >> d & 1
                and _cycle_increments(adj, c, d, g - 1, balls[d], cyc, lam)
                is None
            ):
                continue
            keep |= 1 << d
        out[c] |= keep
        for d in bits(keep):
            out[d] |= 1 << c
    return out


def _balance_reject(v, k, lam, adj, cyc):
    """Cycle-count balance test at saturated vertices.

    A vertex of final degree k whose remaining cycle demand cannot be
    met through its neighbours' remaining counts can never extend to a
    valid graph, whatever edges are added elsewhere.
    """
    base = (k - 2) * lam
    for u in range(v):
        row = adj[u]
        if row.bit_count() != k:
            continue
        s = 0
        mx = 0
        for w in bits(row):
            cw = cyc[w]
            s += cw
            if cw > mx:
                mx = cw
        if base + 2 * cyc[u] - s < 0:
            return True
        if s - 2 * mx >= base and base + cyc[u] - s + mx < 0:
            return True
    return False


def _select(v, k, adj, cand):
    """Vertex whose candidate surplus over its missing degree is least."""
    sel = -1
    best = 1 << 30
    deficit = False
    for u in range(v):
        du = adj[u].bit_count()
        if du >= k:
            continue
        score = cand[u].bit_count() - (k - du)
        if score < 0:
            deficit = True
        if score < best:
            best = score
            sel = u
    return sel, deficit


class _Ctx:
    __slots__ = (
        "v",
        "k",
        "g",
        "lam",
        "target",
        "opts",
        "stats",
        "seen",
        "out",
        "out_keys",
        "deadline",
        "frontier",
        "split_depth",
        "iso_cap",
    )

    def __init__(self, v, k, g, lam, opts, stats):
        self.v = v
        self.k = k
        self.g = g
        self.lam = lam
        self.target = v * k // 2
        self.opts = opts
        self.stats = stats
        self.seen = {}
        self.out = []
        self.out_keys = set()
        self.deadline = opts.deadline
        self.frontier = None
        self.split_depth = opts.split_depth or 2 * k
        cap = opts.iso_max_edges
        self.iso_cap = self.target if cap is None else cap


def _accept(ctx, adj):
    ctx.stats.accepted += 1
    g_ = Graph.from_rows(tuple(adj))
    try:
        prof = classify(g_)
    except DisconnectedGraphError:
        return
    if not prof or prof.k != ctx.k or prof.g != ctx.g or prof.lam != ctx.lam:
        return
    key = canonical_form(g_)
    if key not in ctx.out_keys:
        ctx.out_keys.add(key)
        ctx.out.append((key, tuple(adj)))


def _child_add(ctx, adj, cyc, cand, nedges, balls, a, b):
    inc = _cycle_increments(adj, a, b, ctx.g - 1, balls[b], cyc, ctx.lam)
    adj2 = adj[:]
    adj2[a] |= 1 << b
    adj2[b] |= 1 << a
    cyc2 = cyc[:]
    for x, c in inc.items():
        cyc2[x] += c
    if ctx.opts.prune_balance and _balance_reject(ctx.v, ctx.k, ctx.lam, adj2, cyc2):
        ctx.stats.balance_prunes += 1
        return None
    k = ctx.k
    full = 0
    for u in range(ctx.v):
        if adj2[u].bit_count() >= k:
            full |= 1 << u
    balls2 = _all_balls(adj2, ctx.v, ctx.g, skip=full)
    cand2 = _filter_candidates(ctx.v, ctx.k, ctx.g, ctx.lam, adj2, cyc2, cand, balls2)
    nedges2 = nedges + 1
    if ctx.opts.prune_iso and nedges2 <= ctx.iso_cap:
        # canonical forms are computed lazily: only states whose cheap
        # invariant signature collides ever get canonicalized
        store = ctx.seen.setdefault(nedges2, {})
        sig = _pair_sig(ctx.v, adj2, cand2, cyc2)
        bucket = store.get(sig)
        if bucket is None:
            store[sig] = [[None, _pack_state(ctx.v, adj2, cand2)]]
        else:
            mykey = state_key(ctx.v, adj2, cand2)
            for entry in bucket:
                if entry[0] is None:
                    a_, c_ = _unpack_state(ctx.v, entry[1])
                    entry[0] = state_key(ctx.v, a_, c_)
                if entry[0] == mykey:
                    ctx.stats.iso_prunes += 1
                    return None
            bucket.append([mykey, b""])
    return adj2, cyc2, cand2, nedges2, balls2


def _search(ctx, adj, cyc, cand, nedges, balls, depth):
    stats = ctx.stats
    while True:
        stats.nodes += 1
        if (
            ctx.deadline is not None
            and stats.nodes & 255 == 0
            and time.monotonic() > ctx.deadline
        ):
            raise SearchTimeout()
        if nedges == ctx.target:
            _accept(ctx, adj)
            return
        if ctx.frontier is not None and depth >= ctx.split_depth:
            ctx.frontier.append((adj[:], cyc[:], cand[:], nedges))
            return
        sel, deficit = _select(ctx.v, ctx.k, adj, cand)
        if deficit and ctx.opts.prune_deficit:
            stats.deficit_prunes += 1
            return
        m = cand[sel]
        if m == 0:
            stats.dead_ends += 1
            return
        w = (m & -m).bit_length() - 1
        a, b = (sel, w) if sel < w else (w, sel)
        child = _child_add(ctx, adj, cyc, cand, nedges, balls, a, b)
        if child is not None:
            _search(ctx, *child, depth + 1)
        # decline branch: drop the edge for good and continue in place
        cand[sel] &= ~(1 << w)
        cand[w] &= ~(1 << sel)
        depth += 1


def _root(v, k, g, lam):
    tree = moore_tree(k, g)
    adj = list(tree.adj) + [0] * (v - tree.n)
    full_mask = (1 << v) - 1
    base = [full_mask & ~(1 << u) & ~adj[u] for u in range(v)]
    cyc = [0] * v
    balls = _all_balls(adj, v, g)
    cand = _filter_candidates(v, k, g, lam, adj, cyc, base, balls)
    return adj, cyc, cand, tree.edge_count(), balls


def _worker(args):
    v, k, g, lam, opt_tuple, snap, deadline = args
    prune_deficit, prune_balance, prune_iso, iso_max_edges = opt_tuple
    opts = SearchOptions(
        prune_deficit=prune_deficit,
        prune_balance=prune_balance,
        prune_iso=prune_iso,
        iso_max_edges=iso_max_edges,
        deadline=deadline,
    )
    ctx = _Ctx(v, k, g, lam, opts, SearchStats())
    adj, cyc, cand, nedges = snap
    full = 0
    for u in range(v):
        if adj[u].bit_count() >= k:
            full |= 1 << u
    balls = _all_balls(adj, v, g, skip=full)
    timed_out = False
    try:
        _search(ctx, adj, cyc, cand, nedges, balls, 0)
    except SearchTimeout:
        timed_out = True
    return ctx.out, timed_out


def _run(v, k, g, lam, opts, stats):
    ctx = _Ctx(v, k, g, lam, opts, stats)
    state = _root(v, k, g, lam)
    timed_out = False
    if opts.threads <= 1:
        try:
            _search(ctx, *state, 0)
        except SearchTimeout:
            timed_out = True
        return ctx.out, timed_out
    ctx.frontier = []
    try:
        _search(ctx, *state, 0)
    except SearchTimeout:
        return ctx.out, True
    opt_tuple = (
        opts.prune_deficit,
        opts.prune_balance,
        opts.prune_iso,
        opts.iso_max_edges,
    )
    jobs = [
        (v, k, g, lam, opt_tuple, snap, opts.deadline) for snap in ctx.frontier
    ]
    merged = {key: rows for key, rows in ctx.out}
    with get_context("fork").Pool(opts.threads) as pool:
        for out, w_timed in pool.imap_unordered(_worker, jobs):
            timed_out = timed_out or w_timed
            for key, rows in out:
                merged.setdefault(key, rows)
    return sorted(merged.items()), timed_out


def generate_all(v, k, g, lam, options=None, stats=None):
    """All vertex-girth-regular graphs with the given parameters.

    Returns the complete list, one representative per isomorphism class,
    sorted by canonical form.  Raises ParameterImpossible when a
    non-existence rule already excludes (k, g, lambda), and SearchTimeout
    (with partial results attached) when options.deadline passes.

    Orders that cannot work are answered without searching: v below the
    Moore bound, v*k odd, v*lam not a multiple of g, and, when lam is
    the per-vertex cycle capacity, any v other than the Moore bound
    itself (that capacity forces a Moore graph).
    """
    if not 1 <= v <= 512:
        raise ValueError(f"order {v} outside 1..512")
    rule = nonexistence_verdict(k, g, lam)
    if rule is not None:
        raise ParameterImpossible(k, g, lam, rule)
    opts = options if options is not None else SearchOptions()
    if stats is None:
        stats = SearchStats()
    if v * k % 2 or v * lam % g:
        return []
    if v < moore_bound(k, g):
        return []
    if lam == lambda_max(k, g) and v != moore_bound(k, g):
        return []
    out, timed_out = _run(v, k, g, lam, opts, stats)
    out = sorted(out)
    graphs = [Graph.from_rows(rows) for _, rows in out]
    if timed_out:
        err = SearchTimeout(f"search budget exhausted at order {v}")
        err.graphs = graphs
        raise err
    return graphs


@dataclass
class ExtremalResult:
    """Outcome of a minimal-order search for (k, g, lambda).

    status is one of "found", "impossible", "none-up-to" and
    "budget-exceeded".  Orders below verified_lb are proven to admit no
    graph; for "found", n == verified_lb is the minimum order and graphs
    holds every witness (complete=False if the deadline cut the last
    order short after the first witness appeared).
    """

    status: str
    k: int
    g: int
    lam: int
    n: int | None = None
    graphs: list = field(default_factory=list)
    verified_lb: int | None = None
    complete: bool = True
    rule: str | None = None


def find_extremal(k, g, lam, v_max=None, budget=None, options=None):
    """Smallest order admitting a vgr(v, k, g, lambda) graph.

    Walks the divisibility-feasible orders upward from the best lower
    bound, exhausting each order with generate_all.  budget is wall
    seconds for the whole call; v_max stops the scan.  When lambda is
    the cycle capacity only the Moore order can work, so an empty search
    there proves impossibility outright.
    """
    report = best_lower_bound(k, g, lam)
    if report.impossible:
        rule = next(name for name, fired in report.verdicts if fired)
        return ExtremalResult("impossible", k, g, lam, rule=rule)
    opts = options if options is not None else SearchOptions()
    if budget is not None:
        opts = replace(opts, deadline=time.monotonic() + budget)
    if report.moore_required:
        m = report.moore
        if report.best_lb > m or divisibility_refine(k, g, lam, m) != m:
            return ExtremalResult("impossible", k, g, lam, rule="capacity-order-clash")
        orders = [m] if v_max is None or m <= v_max else []
    else:
        if v_max is None and budget is None:
            raise ValueError("need v_max or budget for an open-ended scan")
        orders = None
    v = report.best_lb
    while True:
        if orders is not None:
            if not orders:
                break
            v = orders.pop(0)
        else:
            v = divisibility_refine(k, g, lam, v)
            if v_max is not None and v > v_max:
                break
        try:
            graphs = generate_all(v, k, g, lam, options=opts)
        except SearchTimeout as t:
            if t.graphs:
                return ExtremalResult(
                    "found", k, g, lam, n=v, graphs=t.graphs,
                    verified_lb=v, complete=False,
                )
            return ExtremalResult("budget-exceeded", k, g, lam, verified_lb=v)
        if graphs:
            return ExtremalResult(
                "found", k, g, lam, n=v, graphs=graphs, verified_lb=v
            )
        if orders is None:
            v += 1
    if report.moore_required:
        if orders is not None and v_max is not None and report.moore > v_max:
            return ExtremalResult(
                "none-up-to", k, g, lam, verified_lb=v_max + 1
            )
        return ExtremalResult("impossible", k, g, lam, rule="capacity-order-empty")
    return ExtremalResult("none-up-to", k, g, lam, verified_lb=v_max + 1)
