"""Canonical forms for small graphs.

Equitable refinement (repeatedly split cells by neighbour counts into the
current cells) followed by individualization on the first smallest
non-singleton cell.  The canonical form is the lexicographically least
adjacency bitstring over the leaves of that search tree, so two graphs
get equal forms exactly when they are isomorphic.

A second, optional adjacency relation can be folded in; the search then
canonicalizes the pair of edge sets simultaneously.  The generator uses
this to key search states on (partial graph, declined edges).
"""
from __future__ import annotations

from .graph import Graph


def _refine(rows1, rows2, cells):
    """Split cells by adjacency counts into splitter cells until stable.

    Worklist refinement: every fresh cell is used once as a splitter,
    so the result is the coarsest stable ordered partition below the
    input, independent of the labeling.
    """
    work = []
    for c in cells:
        m = 0
        for v in c:
            m |= 1 << v
        work.append(m)
    while work:
        smask = work.pop()
        new_cells = []
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            groups: dict = {}
            for v in c:
                key = (rows1[v] & smask).bit_count() << 10 | (
                    rows2[v] & smask
                ).bit_count()
                got = groups.get(key)
                if got is None:
                    groups[key] = [v]
                else:
                    got.append(v)
            if len(groups) == 1:
                new_cells.append(c)
                continue
            for key in sorted(groups):
                part = groups[key]
                new_cells.append(part)
                m = 0
                for v in part:
                    m |= 1 << v
                work.append(m)
        cells = new_cells
    return cells


def _leaf_key(rows1, rows2, order, with_second):
    """Adjacency bits of the relabeled graph, packed into one int."""
    key = 0
    for idx in range(1, len(order)):
        r = rows1[order[idx]]
        row = 0
        for j in range(idx):
            row = row << 1 | (r >> order[j] & 1)
        key = key << idx | row
    if with_second:
        for idx in range(1, len(order)):
            r = rows2[order[idx]]
            row = 0
            for j in range(idx):
                row = row << 1 | (r >> order[j] & 1)
            key = key << idx | row
    return key


def _twin(rows1, rows2, v, w) -> bool:
    keep = ~((1 << v) | (1 << w))
    return (
        rows1[v] & keep == rows1[w] & keep and rows2[v] & keep == rows2[w] & keep
    )


def _search(rows1, rows2, cells, with_second, best):
    cells = _refine(rows1, rows2, cells)
    target = None
    for i, c in enumerate(cells):
        if len(c) > 1 and (target is None or len(c) < len(cells[target])):
            target = i
    if target is None:
        order = [c[0] for c in cells]
        key = _leaf_key(rows1, rows2, order, with_second)
        if best[0] is None or key < best[0]:
            best[0] = key
            best[1] = order
        return
    cell = cells[target]
    reps = []
    for v in cell:
        if any(_twin(rows1, rows2, v, r) for r in reps):
            continue
        reps.append(v)
        rest = [w for w in cell if w != v]
        branched = cells[:target] + [[v], rest] + cells[target + 1 :]
        _search(rows1, rows2, branched, with_second, best)


def _canonical(n, rows1, rows2=None, colors=None):
    """Return (form_header, key_int, key_bits, order) for the pair."""
    with_second = rows2 is not None
    if rows2 is None:
        rows2 = [0] * n
    if colors is None:
        cells = [list(range(n))]
        header = [n, 0]
    else:
        if len(colors) != n:
            raise ValueError("one color per vertex required")
        by_color: dict = {}
        for v, c in enumerate(colors):
            by_color.setdefault(c, []).append(v)
        cells = [by_color[c] for c in sorted(by_color)]
        header = [n, len(cells)]
        for c in sorted(by_color):
            header.extend((c, len(by_color[c])))
    best = [None, None]
    _search(rows1, rows2, cells, with_second, best)
    bits = n * (n - 1) // 2 * (2 if with_second else 1)
    return header, best[0], bits, best[1]


def _pack(header, key, bits) -> bytes:
    head = b"".join(x.to_bytes(4, "big", signed=True) for x in header)
    return head + key.to_bytes((bits + 7) // 8 or 1, "big")


def canonical_form(g: Graph, colors=None) -> bytes:
    """Canonical form of g; equal bytes iff isomorphic (color-preserving).

    Args:
        g: graph to canonicalize.
        colors: optional per-vertex integer colors; isomorphisms must
            then preserve color values.
    """
    header, key, bits, _ = _canonical(g.n, g.adj, None, colors)
    return _pack(header, key, bits)


def canonical_graph(g: Graph) -> Graph:
    """Relabel g into its canonical labeling."""
    _, _, _, order = _canonical(g.n, g.adj)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return Graph(g.n, ((pos[u], pos[v]) for u, v in g.edges()))


def state_key(n: int, rows1, rows2) -> bytes:
    """Canonical form of a two-relation state (used for search dedup)."""
    header, key, bits, _ = _canonical(n, rows1, rows2)
    return _pack(header, key, bits)


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n:
        return False
    if sorted(r.bit_count() for r in a.adj) != sorted(
        r.bit_count() for r in b.adj
    ):
        return False
    return canonical_form(a) == canonical_form(b)
