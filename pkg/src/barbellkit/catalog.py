"""Exhaustive catalogs of small graphs up to isomorphism.

Graphs on ``n`` vertices are grown from graphs on ``n - 1`` vertices by adding
a vertex with every possible neighborhood, then deduplicated through
:func:`canonical_graph6`.  Any hereditary restriction (such as a maximum
degree) can be applied during growth because deleting a vertex preserves it.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, canonical_graph6, iter_bits, parse_graph6

__all__ = ["graphs_on", "graphs_up_to", "GRAPH_COUNTS"]

# Number of graphs on n unlabeled vertices (OEIS A000088), n = 0..8.
GRAPH_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346)


def _extend(G: Graph, nbrs: int) -> Graph:
    n = G.n
    adj = list(G.adj)
    for v in iter_bits(nbrs):
        adj[v] |= 1 << n
    adj.append(nbrs)
    return Graph(n + 1, tuple(adj))


@lru_cache(maxsize=None)
def _catalog(n: int, max_degree: int | None) -> tuple[str, ...]:
    if n == 0:
        return ("?",)
    seen = set()
    for code in _catalog(n - 1, max_degree):
        G = parse_graph6(code)
        degs = G.degrees()
        room = 0
        if max_degree is None:
            room = G.full
        else:
            room = sum(1 << v for v, d in enumerate(degs) if d < max_degree)
        sub = room
        while True:
            if max_degree is None or sub.bit_count() <= max_degree:
                seen.add(canonical_graph6(_extend(G, sub)))
            if sub == 0:
                break
            sub = (sub - 1) & room
    return tuple(sorted(seen))


def graphs_on(n: int, max_degree: int | None = None) -> list[Graph]:
    """All graphs on ``n`` vertices up to isomorphism, in canonical graph6 order."""
    return [parse_graph6(c) for c in _catalog(n, max_degree)]


def graphs_up_to(n_max: int, max_degree: int | None = None, n_min: int = 1) -> list[Graph]:
    out = []
    for n in range(n_min, n_max + 1):
        out.extend(graphs_on(n, max_degree))
    return out
