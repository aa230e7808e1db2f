"""Zero forcing closures and forts.

A fort is a nonempty vertex set ``F`` such that no vertex outside ``F`` has
exactly one neighbor in ``F``; ``V(G)`` itself is a fort of every nonempty
graph.  ``V - S`` forces the whole graph exactly when ``S`` contains no fort,
and the stalled white set of a failed closure is always a fort.  Everything
here leans on that duality.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import BudgetExceeded
from .graph import Graph, VertexSet, iter_bits, to_mask

__all__ = [
    "DEFAULT_BUDGET",
    "zero_forcing_closure",
    "is_zero_forcing_set",
    "is_fort",
    "extract_fort_within",
    "iter_minimal_forts",
    "enumerate_minimal_forts",
    "separated_fort_pair",
    "all_forts_brute_force",
]

DEFAULT_BUDGET = 10**7


def closure_mask(G: Graph, blue: int) -> int:
    """Apply the color-change rule until it stalls."""
    adj = G.adj
    changed = True
    while changed:
        changed = False
        for v in iter_bits(blue):
            white = adj[v] & ~blue
            if white and white & (white - 1) == 0:
                blue |= white
                changed = True
    return blue


def zero_forcing_closure(G: Graph, S: VertexSet | Iterable[int]) -> VertexSet:
    """Everything forced blue from the initial set ``S``.

    The result does not depend on the order in which forces are applied.
    """
    return VertexSet(closure_mask(G, to_mask(S, G.n)), G.n)


def is_zero_forcing_set(G: Graph, S: VertexSet | Iterable[int]) -> bool:
    return closure_mask(G, to_mask(S, G.n)) == G.full


def fort_mask_ok(G: Graph, F: int) -> bool:
    if not F:
        return False
    for v in iter_bits(G.full & ~F):
        if (G.adj[v] & F).bit_count() == 1:
            return False
    return True


def is_fort(G: Graph, F: VertexSet | Iterable[int]) -> bool:
    return fort_mask_ok(G, to_mask(F, G.n))


def extract_fort_mask(G: Graph, S: int) -> int:
    """A fort inside ``S`` as a mask, or 0 when ``S`` contains none."""
    closed = closure_mask(G, G.full & ~S)
    return G.full & ~closed


def extract_fort_within(G: Graph, S: VertexSet | Iterable[int]) -> VertexSet | None:
    """Return a fort contained in ``S``, or ``None`` if ``S`` contains no fort.

    Forces from the complement of ``S``; whatever stays white is a fort.
    """
    F = extract_fort_mask(G, to_mask(S, G.n))
    return VertexSet(F, G.n) if F else None


def _is_minimal(G: Graph, F: int) -> bool:
    for v in iter_bits(F):
        if extract_fort_mask(G, F & ~(1 << v)):
            return False
    return True


def iter_minimal_forts(G: Graph, budget: int = DEFAULT_BUDGET) -> Iterator[int]:
    """Yield inclusion-minimal forts as masks, ordered by their sorted members.

    Depth-first over vertices ``0..n-1`` deciding membership, trying "in"
    before "out" (for an antichain that gives lexicographic order).  A branch
    is cut as soon as an excluded vertex with no undecided neighbors sees
    exactly one member, or the chosen members already cover a fort found
    earlier.  Raises :class:`BudgetExceeded` after ``budget`` search nodes.
    """
    n = G.n
    adj = G.adj
    found: list[int] = []
    nodes = 0
    # stack entries: (next vertex, members, excluded)
    stack = [(0, 0, 0)]
    while stack:
        i, inn, out = stack.pop()
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded("minimal fort enumeration", budget)
        if any(f & ~inn == 0 for f in found):
            continue
        if i == n:
            if inn and _is_minimal(G, inn):
                found.append(inn)
                yield inn
            continue
        bit = 1 << i
        decided = inn | out
        # push "out" first so "in" is explored first
        out2 = out | bit
        ok = True
        for w in iter_bits((adj[i] | bit) & out2):
            if (adj[w] & ~(decided | bit)) == 0 and (adj[w] & inn).bit_count() == 1:
                ok = False
                break
        if ok:
            stack.append((i + 1, inn, out2))
        inn2 = inn | bit
        ok = True
        for w in iter_bits(adj[i] & out):
            if (adj[w] & ~(decided | bit)) == 0 and (adj[w] & inn2).bit_count() == 1:
                ok = False
                break
        if ok:
            stack.append((i + 1, inn2, out))


def enumerate_minimal_forts(
    G: Graph, limit: int | None = None, budget: int = DEFAULT_BUDGET
) -> list[VertexSet]:
    """All inclusion-minimal forts (at most ``limit`` of them)."""
    out = []
    for F in iter_minimal_forts(G, budget):
        out.append(VertexSet(F, G.n))
        if limit is not None and len(out) >= limit:
            break
    return out


def separated_fort_pair(
    G: Graph, budget: int = DEFAULT_BUDGET
) -> tuple[VertexSet, VertexSet] | None:
    """Two disjoint, mutually non-adjacent forts, or ``None`` if none exist.

    Minimal forts are generated lazily.  Each new one is first paired with the
    minimal forts seen so far, then a fort is extracted from outside its closed
    neighborhood.  If any separated pair ``(W1, W2)`` exists, some minimal
    ``F`` inside ``W1`` has ``W2`` outside ``N[F]``, so the extraction step
    succeeds for it; a ``None`` answer is therefore exhaustive.
    """
    seen: list[tuple[int, int]] = []
    for F in iter_minimal_forts(G, budget):
        closed = F
        for v in iter_bits(F):
            closed |= G.adj[v]
        for F0, closed0 in seen:
            if F0 & closed == 0:
                return VertexSet(F0, G.n), VertexSet(F, G.n)
        other = extract_fort_mask(G, G.full & ~closed)
        if other:
            return VertexSet(F, G.n), VertexSet(other, G.n)
        seen.append((F, closed))
    return None


def all_forts_brute_force(G: Graph) -> list[int]:
    """Every fort of ``G`` as a mask, by checking all ``2^n`` subsets."""
    return [F for F in range(1, 1 << G.n) if fort_mask_ok(G, F)]
