"""Graph operations, products, and barbell-partition transfer.

Every constructive function verifies the partition it returns and raises
:class:`ProofCheckFailure` rather than hand back something unchecked.
Hypothesis violations raise :class:`HypothesisError` naming the clause.

Vertex numbering:

* ``dup``/``jdup``/``add_vertex_with_neighbors``: the new vertex is ``n``.
* ``join(G, H)``: ``G`` first, then ``H`` shifted by ``|V(G)|``.
* ``vertex_sum(G, u, H, w)``: ``G`` keeps its ids (``w`` becomes ``u``),
  the rest of ``H`` is appended in order.
* ``corona(G, H)``: ``g_i = i``, then copies ``h_{i,j} = k + i*m + j``.
* products: ``(g, h) -> g * |V(H)| + h``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal

from .barbell import (
    BarbellPartition,
    find_barbell_partition,
    require_valid,
    verify_barbell_partition,
)
from .errors import HypothesisError, InvalidPartition
from .forcing import extract_fort_mask, fort_mask_ok
from .graph import (
    Graph,
    VertexSet,
    complete,
    component_masks,
    cycle,
    iter_bits,
    structural_queries,
    to_mask,
)

__all__ = [
    "ProductVertexMap",
    "add_edge",
    "remove_edge",
    "remove_vertex",
    "remove_set",
    "add_vertex_with_neighbors",
    "add_dominating_vertex",
    "dup",
    "jdup",
    "join",
    "vertex_sum",
    "vertex_sum_map",
    "corona",
    "corona_index",
    "cartesian",
    "tensor",
    "strong",
    "product",
    "transfer_barbell_edge_edit",
    "transfer_barbell_remove_vertex",
    "transfer_barbell_remove_set",
    "transfer_barbell_add_vertex",
    "transfer_barbell_vertex",
    "transfer_barbell_dup",
    "dup_creates_barbell",
    "transfer_barbell_join",
    "transfer_barbell_dominating",
    "join_admits",
    "transfer_barbell_vertex_sum",
    "path_sum_admits",
    "barbell_corona",
    "lift_barbell_product",
    "barbell_cartesian_disjoint_forts",
    "barbell_prism",
    "barbell_tensor_complete",
    "barbell_nonadjacent_pair",
]

ProductKind = Literal["cartesian", "tensor", "strong"]


@dataclass(frozen=True)
class ProductVertexMap:
    """Row-major bijection ``(g, h) <-> g * n_h + h``."""

    n_g: int
    n_h: int

    def __len__(self) -> int:
        return self.n_g * self.n_h

    def index(self, g: int, h: int) -> int:
        if not (0 <= g < self.n_g and 0 <= h < self.n_h):
            raise IndexError(f"({g}, {h}) outside {self.n_g} x {self.n_h}")
        return g * self.n_h + h

    def pair(self, v: int) -> tuple[int, int]:
        if not 0 <= v < len(self):
            raise IndexError(v)
        return divmod(v, self.n_h)

    def pairs(self) -> list[tuple[int, int]]:
        return [self.pair(v) for v in range(len(self))]

    def cylinder(self, H_set: int) -> int:
        """Mask of ``{(g, h) : h in H_set}``."""
        out = 0
        for g in range(self.n_g):
            out |= H_set << (g * self.n_h)
        return out

    def rect(self, G_set: int, H_set: int) -> int:
        """Mask of ``G_set x H_set``."""
        out = 0
        for g in iter_bits(G_set):
            out |= H_set << (g * self.n_h)
        return out


# ---------------------------------------------------------------- edits


def _check_vertex(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} out of range for a graph on {G.n} vertices")


def add_edge(G: Graph, u: int, v: int) -> Graph:
    _check_vertex(G, u)
    _check_vertex(G, v)
    if u == v:
        raise ValueError("loops are not allowed")
    if G.has_edge(u, v):
        raise ValueError(f"edge {u + 1}{v + 1} already present")
    adj = list(G.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(G.n, tuple(adj), G.labels)


def remove_edge(G: Graph, u: int, v: int) -> Graph:
    _check_vertex(G, u)
    _check_vertex(G, v)
    if not G.has_edge(u, v):
        raise ValueError(f"edge {u + 1}{v + 1} not present")
    adj = list(G.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(G.n, tuple(adj), G.labels)


def remove_set(G: Graph, S: VertexSet | Iterable[int]) -> Graph:
    """``G - S``; survivors keep their relative order."""
    return G.induced(G.full & ~to_mask(S, G.n))


def remove_vertex(G: Graph, v: int) -> Graph:
    _check_vertex(G, v)
    return remove_set(G, [v])


def _drop_bits(mask: int, removed: int, n: int) -> int:
    """Reindex ``mask`` after deleting the vertices in ``removed``."""
    out = 0
    k = 0
    for v in range(n):
        if removed >> v & 1:
            continue
        if mask >> v & 1:
            out |= 1 << k
        k += 1
    return out


def add_vertex_with_neighbors(G: Graph, neighbors: VertexSet | Iterable[int]) -> Graph:
    nb = to_mask(neighbors, G.n)
    adj = list(G.adj)
    for w in iter_bits(nb):
        adj[w] |= 1 << G.n
    adj.append(nb)
    labels = G.labels + (str(G.n + 1),) if G.labels is not None else None
    return Graph(G.n + 1, tuple(adj), labels)


def add_dominating_vertex(G: Graph) -> Graph:
    return add_vertex_with_neighbors(G, G.full)


def dup(G: Graph, v: int) -> Graph:
    """Add a twin of ``v`` with the same neighbors, not adjacent to ``v``."""
    _check_vertex(G, v)
    return add_vertex_with_neighbors(G, G.adj[v])


def jdup(G: Graph, v: int) -> Graph:
    """Add a twin of ``v`` adjacent to ``v`` and all of its neighbors."""
    _check_vertex(G, v)
    return add_vertex_with_neighbors(G, G.adj[v] | 1 << v)


# ---------------------------------------------------------------- constructors


def join(G: Graph, H: Graph) -> Graph:
    n, m = G.n, H.n
    gmask = (1 << n) - 1
    adj = [nb | ((1 << m) - 1) << n for nb in G.adj]
    adj += [(nb << n) | gmask for nb in H.adj]
    return Graph(n + m, tuple(adj))


def vertex_sum_map(n_g: int, n_h: int, u: int, w: int) -> list[int]:
    """Where each vertex of ``H`` lands in ``vertex_sum(G, u, H, w)``."""
    out = []
    k = n_g
    for h in range(n_h):
        if h == w:
            out.append(u)
        else:
            out.append(k)
            k += 1
    return out


def vertex_sum(G: Graph, u: int, H: Graph, w: int) -> Graph:
    """Glue ``G`` and ``H`` by identifying ``u`` in ``G`` with ``w`` in ``H``."""
    _check_vertex(G, u)
    _check_vertex(H, w)
    where = vertex_sum_map(G.n, H.n, u, w)
    edges = list(G.edges())
    edges += [(where[a], where[b]) for a, b in H.edges()]
    return Graph.from_edges(G.n + H.n - 1, edges)


def _map_mask(mask: int, where: list[int]) -> int:
    out = 0
    for v in iter_bits(mask):
        out |= 1 << where[v]
    return out


def corona_index(k: int, m: int, i: int, j: int) -> int:
    """Id of ``h_{i,j}``, the copy of ``h_j`` attached to ``g_i`` (0-based)."""
    return k + i * m + j


def corona(G: Graph, H: Graph) -> Graph:
    k, m = G.n, H.n
    edges = list(G.edges())
    for i in range(k):
        for j in range(m):
            edges.append((i, corona_index(k, m, i, j)))
        for a, b in H.edges():
            edges.append((corona_index(k, m, i, a), corona_index(k, m, i, b)))
    labels = [f"g{G.label(i)}" for i in range(k)]
    labels += [f"h{G.label(i)},{H.label(j)}" for i in range(k) for j in range(m)]
    return Graph.from_edges(k * (m + 1), edges, labels)


def product(G: Graph, H: Graph, kind: ProductKind) -> Graph:
    """Cartesian, tensor or strong product on ``V(G) x V(H)``."""
    if kind not in ("cartesian", "tensor", "strong"):
        raise ValueError(f"unknown product kind {kind!r}")
    pm = ProductVertexMap(G.n, H.n)
    adj = []
    for g in range(G.n):
        for h in range(H.n):
            nb = 0
            if kind in ("cartesian", "strong"):
                nb |= H.adj[h] << (g * H.n)
                nb |= pm.rect(G.adj[g], 1 << h)
            if kind in ("tensor", "strong"):
                nb |= pm.rect(G.adj[g], H.adj[h])
            adj.append(nb)
    labels = tuple(f"({G.label(g)},{H.label(h)})" for g, h in pm.pairs())
    return Graph(len(pm), tuple(adj), labels)


def cartesian(G: Graph, H: Graph) -> Graph:
    return product(G, H, "cartesian")


def tensor(G: Graph, H: Graph) -> Graph:
    return product(G, H, "tensor")


def strong(G: Graph, H: Graph) -> Graph:
    return product(G, H, "strong")


# ---------------------------------------------------------------- edit transfers


def _part(n: int, R: int, W1: int, W2: int) -> BarbellPartition:
    return BarbellPartition.from_sets(n, R, W1, W2)


def _require_input(G: Graph, P: BarbellPartition) -> None:
    report = verify_barbell_partition(G, P)
    if not report.valid:
        raise InvalidPartition(
            "input partition invalid: " + "; ".join(v.describe(G) for v in report.violations)
        )


def _side(P: BarbellPartition, v: int) -> int:
    """0 for R, 1 for W1, 2 for W2."""
    if v in P.R:
        return 0
    return 1 if v in P.W1 else 2


def transfer_barbell_edge_edit(
    G: Graph, P: BarbellPartition, e: tuple[int, int], mode: Literal["add", "remove"]
) -> BarbellPartition | None:
    """Keep ``P`` across adding or removing the edge ``e`` when a sufficient
    condition holds.

    Edges inside one class never matter.  For ``u`` in ``R`` and ``v`` in
    ``W_i``: removal is safe when ``u`` has more than two neighbors in
    ``W_i``, addition when it has at least two.  Returns ``None`` otherwise.
    """
    _require_input(G, P)
    u, v = e
    if mode == "remove":
        H = remove_edge(G, u, v)
    elif mode == "add":
        H = add_edge(G, u, v)
    else:
        raise ValueError(f"mode must be 'add' or 'remove', got {mode!r}")
    su, sv = _side(P, u), _side(P, v)
    if su == sv:
        return require_valid(H, P, "same-class edge edit")
    if 0 not in (su, sv):
        return None
    r, w = (u, v) if su == 0 else (v, u)
    Wi = (P.W1 if _side(P, w) == 1 else P.W2).bits
    k = (G.adj[r] & Wi).bit_count()
    if (mode == "remove" and k > 2) or (mode == "add" and k >= 2):
        return require_valid(H, P, f"R-W edge {mode}")
    return None


def transfer_barbell_remove_set(
    G: Graph, P: BarbellPartition, S: VertexSet | Iterable[int]
) -> BarbellPartition | None:
    """Partition of ``G - S`` when ``S`` lies inside ``R``."""
    _require_input(G, P)
    s = to_mask(S, G.n)
    if s & ~P.R.bits:
        return None
    H = remove_set(G, s)
    Q = _part(
        H.n,
        _drop_bits(P.R.bits & ~s, s, G.n),
        _drop_bits(P.W1.bits, s, G.n),
        _drop_bits(P.W2.bits, s, G.n),
    )
    return require_valid(H, Q, "removal of R vertices")


def transfer_barbell_remove_vertex(
    G: Graph, P: BarbellPartition, v: int
) -> BarbellPartition | None:
    """Partition of ``G - v`` by the vertex-removal observations.

    ``v`` in ``R`` always works.  ``v`` in ``W_i`` works when its neighbors
    all lie in ``W_i`` or every ``R`` neighbor keeps two or more neighbors in
    ``W_i``, and ``W_i`` does not become empty.
    """
    _require_input(G, P)
    _check_vertex(G, v)
    side = _side(P, v)
    if side == 0:
        return transfer_barbell_remove_set(G, P, [v])
    Wi = (P.W1 if side == 1 else P.W2).bits
    if Wi == 1 << v:
        return None
    inside = G.adj[v] & ~Wi == 0
    thick = all(
        (G.adj[u] & Wi).bit_count() > 2 for u in iter_bits(G.adj[v] & P.R.bits)
    )
    if not (inside or thick):
        return None
    bit = 1 << v
    H = remove_vertex(G, v)
    Q = _part(
        H.n,
        _drop_bits(P.R.bits, bit, G.n),
        _drop_bits(P.W1.bits & ~bit, bit, G.n),
        _drop_bits(P.W2.bits & ~bit, bit, G.n),
    )
    return require_valid(H, Q, "removal of a W vertex")


def transfer_barbell_add_vertex(
    G: Graph, P: BarbellPartition, neighbors: VertexSet | Iterable[int]
) -> BarbellPartition | None:
    """Partition of ``G + v`` (``v`` is vertex ``n`` with the given neighbors).

    Tried in order: all neighbors inside one class (``v`` joins it); ``v`` has
    a number of neighbors other than one in each ``W_i`` (``v`` joins ``R``);
    neighbors inside ``R`` plus ``W_i`` with every ``R`` neighbor already
    seeing two or more of ``W_i`` (``v`` joins ``W_i``).
    """
    _require_input(G, P)
    nb = to_mask(neighbors, G.n)
    H = add_vertex_with_neighbors(G, nb)
    n = G.n
    R, W1, W2 = P.R.bits, P.W1.bits, P.W2.bits
    bit = 1 << n
    candidates = []
    for cls, X in ((0, R), (1, W1), (2, W2)):
        if nb & ~X == 0:
            candidates.append(cls)
            break
    if (nb & W1).bit_count() != 1 and (nb & W2).bit_count() != 1:
        candidates.append(0)
    for i, Wi in ((1, W1), (2, W2)):
        if nb & ~(R | Wi) == 0 and all(
            (G.adj[u] & Wi).bit_count() >= 2 for u in iter_bits(nb & R)
        ):
            candidates.append(i)
    for cls in candidates:
        Q = _part(
            n + 1,
            R | (bit if cls == 0 else 0),
            W1 | (bit if cls == 1 else 0),
            W2 | (bit if cls == 2 else 0),
        )
        return require_valid(H, Q, f"vertex extension into class {cls}")
    return None


def transfer_barbell_vertex(
    G: Graph,
    P: BarbellPartition,
    *,
    remove: int | None = None,
    add_neighbors: VertexSet | Iterable[int] | None = None,
) -> BarbellPartition | None:
    """Dispatch to vertex removal or vertex extension."""
    if (remove is None) == (add_neighbors is None):
        raise ValueError("give exactly one of remove= or add_neighbors=")
    if remove is not None:
        return transfer_barbell_remove_vertex(G, P, remove)
    return transfer_barbell_add_vertex(G, P, add_neighbors)


# ---------------------------------------------------------------- duplication


def transfer_barbell_dup(
    G: Graph, P: BarbellPartition, v: int
) -> tuple[BarbellPartition, BarbellPartition]:
    """Partitions of ``dup(G, v)`` and ``jdup(G, v)``: the twin joins ``v``'s class."""
    _require_input(G, P)
    _check_vertex(G, v)
    side = _side(P, v)
    bit = 1 << G.n
    R, W1, W2 = P.R.bits, P.W1.bits, P.W2.bits
    Q = _part(
        G.n + 1,
        R | (bit if side == 0 else 0),
        W1 | (bit if side == 1 else 0),
        W2 | (bit if side == 2 else 0),
    )
    return (
        require_valid(dup(G, v), Q, "dup transfer"),
        require_valid(jdup(G, v), Q, "jdup transfer"),
    )


def dup_creates_barbell(G: Graph, v: int, *, check_precondition: bool = True) -> bool:
    """For barbell-free ``G``: does duplicating ``v`` create a barbell partition?

    True exactly when ``V(G) - N[v]`` contains a fort, for both ``dup`` and
    ``jdup``.  The trivial graph is excluded: ``dup(K_1)`` is disconnected
    while ``V - N[v]`` is empty.
    """
    _check_vertex(G, v)
    if G.n < 2:
        raise HypothesisError("graph must have at least two vertices")
    if check_precondition and find_barbell_partition(G).admits:
        raise HypothesisError("graph already admits a barbell partition")
    outside = G.full & ~(G.adj[v] | 1 << v)
    return extract_fort_mask(G, outside) != 0


# ---------------------------------------------------------------- joins


def _no_isolated(G: Graph, name: str) -> None:
    if any(nb == 0 for nb in G.adj):
        raise HypothesisError(f"{name} has an isolated vertex")


def transfer_barbell_join(G: Graph, H: Graph, P_H: BarbellPartition) -> BarbellPartition:
    """Partition of ``join(G, H)`` with ``R' = R + V(G)``.

    Needs both graphs free of isolated vertices and ``|W1|, |W2| >= 2``.
    """
    _no_isolated(G, "G")
    _no_isolated(H, "H")
    _require_input(H, P_H)
    if len(P_H.W1) < 2 or len(P_H.W2) < 2:
        raise HypothesisError("partition of H needs |W1|, |W2| >= 2")
    K = join(G, H)
    n = G.n
    Q = _part(K.n, (1 << n) - 1 | P_H.R.bits << n, P_H.W1.bits << n, P_H.W2.bits << n)
    return require_valid(K, Q, "join transfer")


def join_admits(G: Graph, H: Graph) -> bool:
    """Whether ``join(G, H)`` admits, decided on the factors alone.

    Without isolated vertices every partition of a factor has both sides of
    size two or more, so this reduces to either factor admitting.
    """
    _no_isolated(G, "G")
    _no_isolated(H, "H")
    return find_barbell_partition(G).admits or find_barbell_partition(H).admits


def transfer_barbell_dominating(G: Graph, P: BarbellPartition) -> BarbellPartition:
    """Partition of ``G`` plus a dominating vertex (vertex ``n``), which joins ``R``."""
    _no_isolated(G, "G")
    _require_input(G, P)
    K = add_dominating_vertex(G)
    Q = _part(K.n, P.R.bits | 1 << G.n, P.W1.bits, P.W2.bits)
    return require_valid(K, Q, "dominating-vertex transfer")


# ---------------------------------------------------------------- vertex sums


def transfer_barbell_vertex_sum(
    G: Graph,
    u: int,
    H: Graph,
    w: int,
    P_H: BarbellPartition | None = None,
) -> BarbellPartition:
    """Partition of ``vertex_sum(G, u, H, w)``.

    With neither factor a path, the forts left white by forcing from the
    glued vertex in each factor are separated.  Otherwise ``P_H`` is needed:
    all of ``G`` joins the class of the glued vertex.
    """
    _check_vertex(G, u)
    _check_vertex(H, w)
    K = vertex_sum(G, u, H, w)
    where = vertex_sum_map(G.n, H.n, u, w)
    if not structural_queries(G).is_path and not structural_queries(H).is_path:
        FG = extract_fort_mask(G, G.full & ~(1 << u))
        FH = extract_fort_mask(H, H.full & ~(1 << w))
        Q = BarbellPartition.from_ws(K.n, FG, _map_mask(FH, where))
        return require_valid(K, Q, "vertex sum of non-paths")
    if P_H is None:
        raise HypothesisError(
            "a factor is a path and no barbell partition of H was supplied"
        )
    _require_input(H, P_H)
    R = _map_mask(P_H.R.bits, where)
    W1 = _map_mask(P_H.W1.bits, where)
    W2 = _map_mask(P_H.W2.bits, where)
    side = _side(P_H, w)
    g_all = G.full
    if side == 0:
        R |= g_all
    elif side == 1:
        W1 |= g_all
    else:
        W2 |= g_all
    return require_valid(K, _part(K.n, R, W1, W2), "vertex sum transfer")


def path_sum_admits(n: int, m: int, i: int, j: int) -> bool:
    """``P_n`` glued to ``P_m`` at ``i``/``j`` admits iff both have degree 2 there."""
    def deg(k, v):
        if k == 1:
            return 0
        return 1 if v in (0, k - 1) else 2

    return deg(n, i) == 2 and deg(m, j) == 2


# ---------------------------------------------------------------- products


def barbell_corona(G: Graph, H: Graph) -> BarbellPartition:
    """``W1``/``W2`` are the copies of ``H`` hanging from ``g_1``/``g_2``."""
    if G.n < 2 or H.n < 2:
        raise HypothesisError("G and H each need at least two vertices")
    K = corona(G, H)
    k, m = G.n, H.n
    W1 = ((1 << m) - 1) << corona_index(k, m, 0, 0)
    W2 = ((1 << m) - 1) << corona_index(k, m, 1, 0)
    return require_valid(K, BarbellPartition.from_ws(K.n, W1, W2), "corona")


def lift_barbell_product(
    G: Graph, H: Graph, P_H: BarbellPartition, kind: Literal["cartesian", "tensor"]
) -> BarbellPartition:
    """Cylinder lift ``X' = V(G) x X`` of a partition of ``H``."""
    if kind not in ("cartesian", "tensor"):
        raise ValueError("lift applies to cartesian and tensor products")
    if G.n < 1:
        raise HypothesisError("G must be nonempty")
    _require_input(H, P_H)
    K = product(G, H, kind)
    pm = ProductVertexMap(G.n, H.n)
    Q = _part(K.n, pm.cylinder(P_H.R.bits), pm.cylinder(P_H.W1.bits), pm.cylinder(P_H.W2.bits))
    return require_valid(K, Q, f"{kind} lift")


def barbell_cartesian_disjoint_forts(
    G: Graph, H: Graph, FG1, FG2, FH1, FH2
) -> BarbellPartition:
    """``W_i = F_G^i x F_H^i`` from a pair of disjoint forts in each factor."""
    g1, g2 = to_mask(FG1, G.n), to_mask(FG2, G.n)
    h1, h2 = to_mask(FH1, H.n), to_mask(FH2, H.n)
    for F, X, name in ((g1, G, "F_G^1"), (g2, G, "F_G^2"), (h1, H, "F_H^1"), (h2, H, "F_H^2")):
        if not fort_mask_ok(X, F):
            raise HypothesisError(f"{name} is not a fort")
    if g1 & g2:
        raise HypothesisError("forts of G are not disjoint")
    if h1 & h2:
        raise HypothesisError("forts of H are not disjoint")
    K = cartesian(G, H)
    pm = ProductVertexMap(G.n, H.n)
    Q = BarbellPartition.from_ws(K.n, pm.rect(g1, h1), pm.rect(g2, h2))
    return require_valid(K, Q, "cartesian product of disjoint forts")


def barbell_prism(k: int, m: int) -> tuple[Graph, BarbellPartition]:
    """``C_k x C_{mk}`` (Cartesian) with the diagonal partition.

    With ``d = (j2 - j1) mod k``: ``W1`` is ``d = 0``, ``R`` is ``d = +-1``,
    ``W2`` the rest.  Each ``R`` vertex sees exactly two vertices of each side.
    """
    if k < 4:
        raise HypothesisError("k must be at least 4")
    if m < 1:
        raise HypothesisError("m must be at least 1")
    K = cartesian(cycle(k), cycle(m * k))
    pm = ProductVertexMap(k, m * k)
    R = W1 = W2 = 0
    for a in range(k):
        for b in range(m * k):
            d = (b - a) % k
            bit = 1 << pm.index(a, b)
            if d == 0:
                W1 |= bit
            elif d in (1, k - 1):
                R |= bit
            else:
                W2 |= bit
    return K, require_valid(K, _part(K.n, R, W1, W2), "prism")


def barbell_tensor_complete(n: int, m: int) -> tuple[Graph, BarbellPartition]:
    """``K_n x K_m``: row ``u_1`` split at ``ceil(m/2)``, other rows in ``R``."""
    if n < 2:
        raise HypothesisError("n must be at least 2")
    if m < 6:
        raise HypothesisError("m must be at least 6")
    K = tensor(complete(n), complete(m))
    half = math.ceil(m / 2)
    W1 = (1 << half) - 1
    W2 = ((1 << m) - 1) & ~W1
    return K, require_valid(K, BarbellPartition.from_ws(K.n, W1, W2), "tensor of complete graphs")


def barbell_nonadjacent_pair(
    G: Graph, H: Graph, u: int, v: int, kind: Literal["tensor", "strong"]
) -> BarbellPartition:
    """Rows ``{u} x V(H)`` and ``{v} x V(H)`` for non-adjacent ``u, v`` of ``G``.

    Tensor products need ``H`` on two or more vertices without pendant
    vertices; strong products only ``|V(H)| >= 2``.  If either factor is
    disconnected, so is the product, and one component becomes ``W1``.
    """
    if kind not in ("tensor", "strong"):
        raise ValueError("kind must be 'tensor' or 'strong'")
    _check_vertex(G, u)
    _check_vertex(G, v)
    if u == v or G.has_edge(u, v):
        raise HypothesisError("u and v must be distinct and non-adjacent in G")
    if H.n < 2:
        raise HypothesisError("H needs at least two vertices")
    if kind == "tensor" and structural_queries(H).pendant_vertices:
        raise HypothesisError("H has pendant vertices")
    K = product(G, H, kind)
    if len(component_masks(G)) > 1 or len(component_masks(H)) > 1:
        comps = component_masks(K)
        Q = BarbellPartition.from_ws(K.n, comps[0], K.full & ~comps[0])
        return require_valid(K, Q, f"disconnected {kind} product")
    pm = ProductVertexMap(G.n, H.n)
    row = (1 << H.n) - 1
    Q = BarbellPartition.from_ws(K.n, pm.rect(1 << u, row), pm.rect(1 << v, row))
    return require_valid(K, Q, f"{kind} rows")
