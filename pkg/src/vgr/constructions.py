"""Constructions that produce vertex-girth-regular graphs.

Each constructor whose output has a guaranteed classification asserts
that classification before returning, so a successful return is a
verified witness.
"""
from __future__ import annotations

import random

from .graph import DisconnectedGraphError, Graph, classify, girth


class PreconditionViolated(ValueError):
    """An input graph does not meet a construction's requirements."""


class NonIntegerLambda(ValueError):
    """Edge-to-vertex count conversion would not be an integer."""


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("need n >= 1")
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("need a, b >= 1")
    return Graph(a + b, ((u, a + w) for u in range(a) for w in range(b)))


def cycle_graph(n: int) -> Graph:
    """The cycle C_n, the unique vgr(n, 2, n, 1) graph."""
    if n < 3:
        raise ValueError("need n >= 3")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def egr_to_vgr_lambda(k: int, lambda_edge: int) -> int:
    """Per-vertex count of an edge-girth-regular graph.

    Every girth cycle through a vertex uses two of its edges, so a graph
    whose edges each lie on lambda_edge girth cycles has vertices on
    k * lambda_edge / 2 of them.
    """
    if k * lambda_edge % 2:
        raise NonIntegerLambda(f"k*lambda_edge = {k * lambda_edge} is odd")
    return k * lambda_edge // 2


def double_complete(k: int) -> Graph:
    """Two copies of K_k joined by a perfect matching.

    The smallest known family with girth 3 and per-vertex count
    (k-1)(k-2)/2, i.e. k-1 below the complete graph's count.
    """
    if k < 3:
        raise ValueError("need k >= 3")
    edges = []
    for u in range(k):
        for v in range(u + 1, k):
            edges.append((u, v))
            edges.append((k + u, k + v))
    edges.extend((u, k + u) for u in range(k))
    out = Graph(2 * k, edges)
    prof = classify(out)
    assert prof and (prof.k, prof.g, prof.lam) == (k, 3, (k - 1) * (k - 2) // 2)
    return out


def generalized_truncation(base: Graph, host: Graph, rng: random.Random | None = None) -> Graph:
    """Blow every host vertex up into a copy of base.

    base must classify as vgr(v, k, g, lam) and host must be v-regular
    with girth strictly greater than g/2.  Host edges are distributed
    bijectively over each copy's vertices (by neighbour rank, or shuffled
    per copy when rng is given), which adds one to every degree and
    preserves both the girth and the per-vertex cycle count, giving a
    vgr(v * host.n, k + 1, g, lam) graph.
    """
    prof = classify(base)
    if not prof:
        raise PreconditionViolated(f"base is not vertex-girth-regular: {prof}")
    v = prof.v
    for u in range(host.n):
        if host.degree(u) != v:
            raise PreconditionViolated(
                f"host vertex {u} has degree {host.degree(u)}, need {v}"
            )
    if 2 * girth(host) <= prof.g:
        raise PreconditionViolated(
            f"host girth {girth(host)} not above {prof.g}/2"
        )
    edges = []
    for u in range(host.n):
        off = u * v
        edges.extend((off + x, off + y) for x, y in base.edges())
    slot = []
    for u in range(host.n):
        local = list(range(v))
        if rng is not None:
            rng.shuffle(local)
        slot.append({w: local[i] for i, w in enumerate(host.neighbors(u))})
    for u, w in host.edges():
        edges.append((u * v + slot[u][w], w * v + slot[w][u]))
    out = Graph(v * host.n, edges)
    got = classify(out)
    if not got or (got.k, got.g, got.lam) != (prof.k + 1, prof.g, prof.lam):
        raise PreconditionViolated(f"truncation produced {got}")
    return out


def cartesian_product(a: Graph, b: Graph) -> Graph:
    """Cartesian product; vertex (u, x) maps to index u * b.n + x.

    When both factors are edge-girth-regular with girth 3 and the same
    per-edge count, the product provably is too (with degree the sum of
    the factors'), and that classification is asserted.
    """
    n = a.n * b.n
    if n > 512:
        raise ValueError(f"product order {n} above 512")
    edges = []
    for u, w in a.edges():
        edges.extend((u * b.n + x, w * b.n + x) for x in range(b.n))
    for x, y in b.edges():
        edges.extend((u * b.n + x, u * b.n + y) for u in range(a.n))
    out = Graph(n, edges)
    try:
        pa, pb = classify(a), classify(b)
    except DisconnectedGraphError:
        return out
    if (
        pa
        and pb
        and pa.is_egr
        and pb.is_egr
        and pa.g == pb.g == 3
        and pa.lambda_edge == pb.lambda_edge
    ):
        got = classify(out)
        assert (
            got
            and got.is_egr
            and (got.k, got.g, got.lambda_edge)
            == (pa.k + pb.k, 3, pa.lambda_edge)
        ), f"product profile {got}"
    return out
