"""Immutable simple graphs backed by per-vertex adjacency bitsets.

Vertices are ``0..n-1`` internally.  Anything rendered for people (labels,
certificates, the CLI) uses 1-based names unless the graph carries its own
labels.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import GraphFormatError

__all__ = [
    "VertexSet",
    "Graph",
    "to_mask",
    "iter_bits",
    "neighborhood",
    "closed_neighborhood",
    "components",
    "is_connected",
    "diameter",
    "Structure",
    "structural_queries",
    "parse_graph6",
    "encode_graph6",
    "parse_edge_list",
    "format_edge_list",
    "read_graph",
    "canonical_form",
    "canonical_graph6",
    "complete",
    "path",
    "cycle",
    "star",
    "empty",
    "complete_bipartite",
    "petersen",
    "named_graph",
    "random_graph",
]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``range(universe)`` stored as an integer bitset."""

    bits: int
    universe: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.universe:
            raise ValueError(
                f"vertex set {self.bits:#b} has members outside 0..{self.universe - 1}"
            )

    @classmethod
    def of(cls, members: Iterable[int], universe: int) -> VertexSet:
        return cls(to_mask(members, universe), universe)

    @classmethod
    def full(cls, universe: int) -> VertexSet:
        return cls((1 << universe) - 1, universe)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.bits >> v & 1)

    def __bool__(self) -> bool:
        return self.bits != 0

    def _other(self, other: VertexSet | Iterable[int]) -> int:
        if isinstance(other, VertexSet):
            if other.universe != self.universe:
                raise ValueError("vertex sets index different graphs")
            return other.bits
        return to_mask(other, self.universe)

    def __and__(self, other):
        return VertexSet(self.bits & self._other(other), self.universe)

    def __or__(self, other):
        return VertexSet(self.bits | self._other(other), self.universe)

    def __sub__(self, other):
        return VertexSet(self.bits & ~self._other(other), self.universe)

    def complement(self) -> VertexSet:
        return VertexSet(((1 << self.universe) - 1) & ~self.bits, self.universe)

    def issubset(self, other) -> bool:
        return self.bits & ~self._other(other) == 0

    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def one_based(self) -> list[int]:
        return [v + 1 for v in self]

    def __repr__(self) -> str:
        return f"VertexSet({{{', '.join(str(v + 1) for v in self)}}})"


def to_mask(S: VertexSet | Iterable[int] | int, n: int) -> int:
    """Coerce a vertex set, an iterable of 0-based ids or a raw mask to a mask.

    Raises ``ValueError`` for members outside ``range(n)``.
    """
    if isinstance(S, VertexSet):
        mask = S.bits
    elif isinstance(S, int):
        mask = S
    else:
        mask = 0
        for v in S:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range for a graph on {n} vertices")
            mask |= 1 << v
    if mask < 0 or mask >> n:
        raise ValueError(f"vertex set has members outside 0..{n - 1}")
    return mask


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph.

    ``adj[v]`` is the neighbor bitset of vertex ``v``.  ``labels`` are display
    names only; they take no part in equality.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbor outside the vertex set")
            if nb >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for w in iter_bits(nb):
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("label count does not match vertex count")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels) if labels is not None else None)

    @classmethod
    def from_adjacency_matrix(cls, M) -> Graph:
        M = np.asarray(M)
        n = M.shape[0]
        return cls.from_edges(
            n, ((i, j) for i in range(n) for j in range(i + 1, n) if M[i, j])
        )

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v + 1)

    def render(self, S: VertexSet | Iterable[int]) -> list[str]:
        """Display labels of the members of ``S``."""
        return [self.label(v) for v in iter_bits(to_mask(S, self.n))]

    def induced(self, S: VertexSet | Iterable[int]) -> Graph:
        """Subgraph induced by ``S``; vertices keep their relative order."""
        keep = list(iter_bits(to_mask(S, self.n)))
        pos = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            nb = 0
            for w in iter_bits(self.adj[v]):
                if w in pos:
                    nb |= 1 << pos[w]
            adj.append(nb)
        labels = tuple(self.label(v) for v in keep) if self.labels is not None else None
        return Graph(len(keep), tuple(adj), labels)

    def relabel(self, order: Sequence[int]) -> Graph:
        """Graph whose vertex ``i`` is this graph's vertex ``order[i]``."""
        pos = {v: i for i, v in enumerate(order)}
        if sorted(pos) != list(range(self.n)):
            raise ValueError("order must be a permutation of the vertices")
        adj = []
        for v in order:
            nb = 0
            for w in iter_bits(self.adj[v]):
                nb |= 1 << pos[w]
            adj.append(nb)
        return Graph(self.n, tuple(adj))

    def adjacency_matrix(self, dtype=np.int64) -> np.ndarray:
        M = np.zeros((self.n, self.n), dtype=dtype)
        for u, v in self.edges():
            M[u, v] = M[v, u] = 1
        return M

    def with_labels(self, labels: Sequence[str] | None) -> Graph:
        return Graph(self.n, self.adj, tuple(labels) if labels is not None else None)

    def __str__(self) -> str:
        return encode_graph6(self)


# ---------------------------------------------------------------- queries


def neighborhood(G: Graph, S: VertexSet | Iterable[int]) -> VertexSet:
    """Open neighborhood: every vertex adjacent to some member of ``S``."""
    out = 0
    for v in iter_bits(to_mask(S, G.n)):
        out |= G.adj[v]
    return VertexSet(out, G.n)


def closed_neighborhood(G: Graph, S: VertexSet | Iterable[int]) -> VertexSet:
    mask = to_mask(S, G.n)
    return VertexSet(neighborhood(G, mask).bits | mask, G.n)


def _reach(G: Graph, start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= G.adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def component_masks(G: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``G[within]`` as masks, ordered by least member."""
    remaining = G.full if within is None else within
    allowed = remaining
    comps = []
    while remaining:
        v = (remaining & -remaining).bit_length() - 1
        c = _reach(G, v, allowed)
        comps.append(c)
        remaining &= ~c
    return comps


def components(G: Graph) -> list[VertexSet]:
    return [VertexSet(c, G.n) for c in component_masks(G)]


def is_connected(G: Graph) -> bool:
    return len(component_masks(G)) <= 1


def eccentricities(G: Graph) -> list[float]:
    ecc = []
    for s in range(G.n):
        seen = 1 << s
        frontier = seen
        d = 0
        while True:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= G.adj[v]
            nxt &= ~seen
            if not nxt:
                break
            seen |= nxt
            frontier = nxt
            d += 1
        ecc.append(d if seen == G.full else float("inf"))
    return ecc


def diameter(G: Graph) -> float:
    """Largest shortest-path distance; ``inf`` when disconnected.

    The empty graph has diameter 0 by convention.
    """
    if G.n == 0:
        return 0
    return max(eccentricities(G))


def distances_from(G: Graph, s: int) -> list[int | None]:
    dist: list[int | None] = [None] * G.n
    dist[s] = 0
    q = deque([s])
    while q:
        v = q.popleft()
        for w in iter_bits(G.adj[v]):
            if dist[w] is None:
                dist[w] = dist[v] + 1
                q.append(w)
    return dist


def blocks(G: Graph) -> tuple[list[tuple[int, int]], list[list[tuple[int, int]]], set[int]]:
    """Biconnected blocks (as edge lists) and cut vertices.

    Iterative Tarjan with an edge stack.  Returns ``(edges, blocks, cuts)``.
    """
    n = G.n
    disc = [-1] * n
    low = [0] * n
    t = 0
    found: list[list[tuple[int, int]]] = []
    cuts: set[int] = set()
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        root_children = 0
        stack = [(root, -1, iter(G.neighbors(root)))]
        estack: list[tuple[int, int]] = []
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if disc[w] == -1:
                    estack.append((v, w))
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(G.neighbors(w))))
                    if v == root:
                        root_children += 1
                    descended = True
                    break
                if w != parent and disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    if u != root:
                        cuts.add(u)
                    block = []
                    while True:
                        e = estack.pop()
                        block.append(e)
                        if e == (u, v):
                            break
                    found.append(block)
        if root_children >= 2:
            cuts.add(root)
    return G.edges(), found, cuts


@dataclass(frozen=True)
class Structure:
    max_degree: int
    is_connected: bool
    is_tree: bool
    is_unicyclic: bool
    is_cactus: bool
    cycle_count: int
    cut_vertices: tuple[int, ...]
    is_path: bool
    is_complete: bool
    has_isolated_vertex: bool
    pendant_vertices: tuple[int, ...]


def structural_queries(G: Graph) -> Structure:
    """Cheap structural facts used by the barbell shortcuts.

    ``cycle_count`` is the cyclomatic number ``m - n + c``.  A graph is a
    cactus when it is connected and no block has more edges than vertices.
    """
    n, m = G.n, G.m
    comps = len(component_masks(G))
    connected = comps <= 1
    degs = G.degrees()
    _, blks, cuts = blocks(G)
    cactus = connected and all(
        len(b) <= len({x for e in b for x in e}) for b in blks
    )
    return Structure(
        max_degree=max(degs, default=0),
        is_connected=connected,
        is_tree=connected and n >= 1 and m == n - 1,
        is_unicyclic=connected and n >= 3 and m == n,
        is_cactus=cactus,
        cycle_count=m - n + comps,
        cut_vertices=tuple(sorted(cuts)),
        is_path=connected and n >= 1 and m == n - 1 and max(degs, default=0) <= 2,
        is_complete=m == n * (n - 1) // 2,
        has_isolated_vertex=any(d == 0 for d in degs),
        pendant_vertices=tuple(v for v, d in enumerate(degs) if d == 1),
    )


# ---------------------------------------------------------------- graph6

_G6_HEADER = ">>graph6<<"


def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise GraphFormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("truncated graph6 length header")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        return n, 8
    if len(data) < 4:
        raise GraphFormatError("truncated graph6 length header")
    n = 0
    for c in data[1:4]:
        n = (n << 6) | (c - 63)
    return n, 4


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (the ``>>graph6<<`` header is optional)."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise GraphFormatError("non-ASCII character in graph6 string") from exc
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise GraphFormatError(f"character {chr(c)!r} at offset {i} outside graph6 range")
    n, off = _decode_size(data)
    if off > 1 and n <= 62:
        raise GraphFormatError("non-canonical graph6 length header")
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    body = data[off:]
    if len(body) != need:
        raise GraphFormatError(
            f"graph6 body has {len(body)} bytes, expected {need} for n={n}"
        )
    bits = 0
    for c in body:
        bits = (bits << 6) | (c - 63)
    pad = need * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise GraphFormatError("graph6 padding bits are nonzero")
    bits >>= pad
    adj = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(adj))


def encode_graph6(G: Graph) -> str:
    n = G.n
    out = [_encode_size(n)]
    acc = 0
    count = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (G.adj[i] >> j & 1)
            count += 1
            if count == 6:
                out.append(chr(acc + 63))
                acc = count = 0
    if count:
        out.append(chr((acc << (6 - count)) + 63))
    return "".join(out)


# ---------------------------------------------------------------- edge lists


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` pairs (1-based), one per line.

    A line holding a single integer declares the vertex count, which allows
    isolated vertices.  ``#`` starts a comment.
    """
    edges = []
    declared = None
    top = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphFormatError(f"expected integers, got {line!r}", lineno) from None
        if len(nums) == 1:
            if declared is not None:
                raise GraphFormatError("vertex count declared twice", lineno)
            declared = nums[0]
            if declared < 0:
                raise GraphFormatError("negative vertex count", lineno)
            continue
        if len(nums) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        u, v = nums
        if u < 1 or v < 1:
            raise GraphFormatError("vertices are 1-based", lineno)
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", lineno)
        edges.append((u - 1, v - 1, lineno))
        top = max(top, u, v)
    n = top if declared is None else declared
    if top > n:
        raise GraphFormatError(f"edge mentions vertex {top} but n={n}")
    adj = [0] * n
    for u, v, lineno in edges:
        if adj[u] >> v & 1:
            raise GraphFormatError(f"duplicate edge {u + 1} {v + 1}", lineno)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def format_edge_list(G: Graph) -> str:
    lines = [str(G.n)]
    lines += [f"{u + 1} {v + 1}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


_FAMILY = re.compile(r"^(?:([KCP])(\d+)|K(\d+),(\d+)|(petersen))$", re.IGNORECASE)


def named_graph(name: str) -> Graph | None:
    """``K5``, ``C6``, ``P4``, ``K1,3`` or ``petersen``; ``None`` otherwise."""
    mt = _FAMILY.match(name.strip())
    if not mt:
        return None
    kind, k, a, b, pet = mt.groups()
    if pet:
        return petersen()
    if a is not None:
        return complete_bipartite(int(a), int(b))
    k = int(k)
    kind = kind.upper()
    if kind == "K":
        return complete(k)
    if kind == "P":
        return path(k)
    if k < 3:
        raise GraphFormatError(f"cycle needs at least 3 vertices, got C{k}")
    return cycle(k)


def read_graph(text: str) -> Graph:
    """Read a single graph from graph6 or edge-list text.

    Edge lists are recognised by whitespace-separated integers; a lone line of
    digits is taken as a vertex count, never as graph6 (digits fall outside
    the graph6 alphabet).
    """
    body = "\n".join(
        ln for ln in (raw.split("#", 1)[0].strip() for raw in text.splitlines()) if ln
    )
    if not body:
        raise GraphFormatError("no graph in input")
    first = body.splitlines()[0]
    named = named_graph(first) if len(body.splitlines()) == 1 else None
    if named is not None:
        return named
    if re.fullmatch(r"[\d\s]+", body):
        return parse_edge_list(text)
    lines = body.splitlines()
    if len(lines) != 1:
        raise GraphFormatError("expected one graph6 line", 2)
    try:
        return parse_graph6(lines[0])
    except GraphFormatError as exc:
        raise GraphFormatError(str(exc), 1) from None


# ---------------------------------------------------------------- canonical form


def _refine(G: Graph, cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple((G.adj[v] & cm).bit_count() for cm in masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) > 1:
                changed = True
            out.extend([v for v in cell if sig[v] == k] for k in keys)
        cells = out
        if not changed:
            return cells


def _certificate(G: Graph, order: list[int]) -> int:
    code = 0
    for j in range(1, G.n):
        row = G.adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def canonical_form(G: Graph) -> Graph:
    """Canonical relabelling: isomorphic graphs map to identical graphs.

    Individualisation-refinement over an equitable partition, keeping the
    largest adjacency certificate.  Twin vertices in a target cell are
    interchangeable, so only one of each twin class is individualised.
    """
    n = G.n
    if n <= 1:
        return Graph(n, G.adj)
    best: list = [None, None]

    def search(cells):
        cells = _refine(G, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            cert = _certificate(G, order)
            if best[0] is None or cert > best[0]:
                best[0], best[1] = cert, order
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(
                G.adj[v] & ~(1 << u) == G.adj[u] & ~(1 << v) for u in tried
            ):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search([list(range(n))])
    return G.relabel(best[1])


def canonical_graph6(G: Graph) -> str:
    return encode_graph6(canonical_form(G))


# ---------------------------------------------------------------- families


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star(k: int) -> Graph:
    """``K_{1,k}`` with the center as vertex 0."""
    return Graph.from_edges(k + 1, ((0, i) for i in range(1, k + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Erdos-Renyi ``G(n, p)`` drawn from ``rng``."""
    coins = rng.random(n * (n - 1) // 2) < p
    k = 0
    edges = []
    for j in range(1, n):
        for i in range(j):
            if coins[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)
