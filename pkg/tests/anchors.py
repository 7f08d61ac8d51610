"""Known graphs used as fixed points across the test suite."""

from vgr.graph import Graph


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def generalized_petersen(n: int, s: int) -> Graph:
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + s) % n))
    return Graph(2 * n, edges)


def heawood() -> Graph:
    # point i <-> line j when j - i is a quadratic residue offset
    edges = []
    for i in range(7):
        for d in (0, 1, 3):
            edges.append((i, 7 + (i + d) % 7))
    return Graph(14, edges)


def pappus() -> Graph:
    return lcf([5, 7, -7, 7, -7, -5], 3)


def lcf(pattern, repeats: int) -> Graph:
    n = len(pattern) * repeats
    edges = [(i, (i + 1) % n) for i in range(n)]
    for i in range(n):
        j = (i + pattern[i % len(pattern)]) % n
        if i < j:
            edges.append((i, j))
    return Graph(n, edges)


def prism() -> Graph:
    return circular_ladder(3)


def circular_ladder(n: int) -> Graph:
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((n + i, n + (i + 1) % n))
        edges.append((i, n + i))
    return Graph(2 * n, edges)


def cube() -> Graph:
    edges = []
    for u in range(8):
        for b in range(3):
            w = u ^ (1 << b)
            if u < w:
                edges.append((u, w))
    return Graph(8, edges)


def _rotational(n: int, cls: int, offsets) -> list:
    # vertices 1..n on a circle, one offset set per residue class mod cls
    edges = set()
    for i in range(1, n + 1):
        for d in offsets[i % cls]:
            j = (i + d - 1) % n + 1
            edges.add((min(i, j) - 1, max(i, j) - 1))
    return sorted(edges)


def quartic25() -> Graph:
    """25 vertices, girth 5, eight 5-cycles through every vertex."""
    offs = {
        1: (1, 17, 21, 24),
        2: (1, 4, 12, 24),
        3: (1, 8, 17, 24),
        4: (1, 13, 21, 24),
        0: (1, 4, 8, 24),
    }
    return Graph(25, _rotational(25, 5, offs))


def cubic42() -> Graph:
    """42 vertices, girth 8, eight 8-cycles through every vertex."""
    offs = {
        1: (1, 8, 41),
        2: (1, 21, 41),
        0: (1, 34, 41),
    }
    return Graph(42, _rotational(42, 3, offs))


def cubic48() -> Graph:
    """48 vertices, girth 8, nine 8-cycles through every vertex."""
    offs = {
        1: (1, 29, 47),
        2: (1, 19, 47),
        3: (1, 41, 47),
        0: (1, 7, 47),
    }
    return Graph(48, _rotational(48, 4, offs))
