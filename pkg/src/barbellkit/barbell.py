"""Barbell partitions: verification, detection and certificates.

A barbell partition of ``G`` is ``(R, W1, W2)`` covering ``V(G)`` with ``W1``
and ``W2`` nonempty, no edge between ``W1`` and ``W2``, and every vertex of
``R`` having a number of neighbors other than one in each ``W_i``.  ``R`` may
be empty.  Equivalently ``{W1, W2}`` is a pair of separated forts.
"""

from __future__ import annotations

import enum
import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import BudgetExceeded, InvalidPartition, ProofCheckFailure
from .forcing import DEFAULT_BUDGET, fort_mask_ok, separated_fort_pair
from .graph import (
    Graph,
    VertexSet,
    component_masks,
    diameter,
    encode_graph6,
    iter_bits,
    structural_queries,
    to_mask,
)

__all__ = [
    "Verdict",
    "Method",
    "BarbellPartition",
    "Violation",
    "ValidityReport",
    "BarbellCertificate",
    "verify_barbell_partition",
    "barbell_to_forts",
    "forts_to_barbell",
    "cut_set_partition",
    "structural_screen",
    "find_barbell_partition",
    "brute_force_barbell",
    "noiso_bound_check",
    "default_brute_cap",
]

CERT_SCHEMA = "barbell-certificate/1"


class Verdict(str, enum.Enum):
    ADMITS = "admits"
    DOES_NOT_ADMIT = "does_not_admit"
    BUDGET_EXCEEDED = "budget_exceeded"


class Method(str, enum.Enum):
    STRUCTURAL = "structural"
    SEPARATED_FORTS = "separated_forts"
    BRUTE_FORCE = "brute_force"
    CONSTRUCTIVE_TRANSFER = "constructive_transfer"


@dataclass(frozen=True)
class BarbellPartition:
    R: VertexSet
    W1: VertexSet
    W2: VertexSet

    @classmethod
    def from_sets(
        cls,
        n: int,
        R: VertexSet | Iterable[int] | int,
        W1: VertexSet | Iterable[int] | int,
        W2: VertexSet | Iterable[int] | int,
    ) -> BarbellPartition:
        return cls(
            VertexSet(to_mask(R, n), n),
            VertexSet(to_mask(W1, n), n),
            VertexSet(to_mask(W2, n), n),
        )

    @classmethod
    def from_ws(cls, n: int, W1, W2) -> BarbellPartition:
        """Partition with ``R`` the complement of ``W1 | W2``."""
        w1, w2 = to_mask(W1, n), to_mask(W2, n)
        return cls.from_sets(n, ((1 << n) - 1) & ~(w1 | w2), w1, w2)

    @property
    def graph_n(self) -> int:
        return self.R.universe

    def swapped(self) -> BarbellPartition:
        return BarbellPartition(self.R, self.W2, self.W1)

    def to_dict(self, G: Graph | None = None) -> dict:
        def fmt(S):
            if G is not None and G.labels is not None:
                return G.render(S)
            return S.one_based()

        return {"R": fmt(self.R), "W1": fmt(self.W1), "W2": fmt(self.W2)}

    @classmethod
    def from_dict(cls, data: dict, G: Graph) -> BarbellPartition:
        """Inverse of :meth:`to_dict`; accepts 1-based ints or labels."""
        lookup = {G.label(v): v for v in range(G.n)}

        def ids(items):
            out = []
            for x in items:
                if isinstance(x, int):
                    out.append(x - 1)
                elif str(x) in lookup:
                    out.append(lookup[str(x)])
                else:
                    raise InvalidPartition(f"unknown vertex {x!r}")
            return out

        return cls.from_sets(G.n, ids(data["R"]), ids(data["W1"]), ids(data["W2"]))


@dataclass(frozen=True)
class Violation:
    clause: str
    witness: tuple[int, ...]

    def describe(self, G: Graph | None = None) -> str:
        name = (lambda v: G.label(v)) if G is not None else (lambda v: str(v + 1))
        return f"{self.clause}: {', '.join(name(v) for v in self.witness)}"


@dataclass(frozen=True)
class ValidityReport:
    violations: tuple[Violation, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid


def verify_barbell_partition(G: Graph, P: BarbellPartition) -> ValidityReport:
    """Check every clause of the definition, collecting all violations."""
    if P.graph_n != G.n:
        raise ValueError(f"partition indexes {P.graph_n} vertices, graph has {G.n}")
    R, W1, W2 = P.R.bits, P.W1.bits, P.W2.bits
    bad: list[Violation] = []
    for a, b, clause in (
        (R, W1, "R and W1 overlap"),
        (R, W2, "R and W2 overlap"),
        (W1, W2, "W1 and W2 overlap"),
    ):
        if a & b:
            bad.append(Violation(clause, tuple(iter_bits(a & b))))
    missing = G.full & ~(R | W1 | W2)
    if missing:
        bad.append(Violation("vertices not covered", tuple(iter_bits(missing))))
    if not W1:
        bad.append(Violation("W1 is empty", ()))
    if not W2:
        bad.append(Violation("W2 is empty", ()))
    for u in iter_bits(W1):
        for w in iter_bits(G.adj[u] & W2):
            bad.append(Violation("edge joins W1 and W2", (u, w)))
    for r in iter_bits(R):
        for W, name in ((W1, "W1"), (W2, "W2")):
            if (G.adj[r] & W).bit_count() == 1:
                bad.append(
                    Violation(f"R vertex has exactly one neighbor in {name}", (r,))
                )
    return ValidityReport(tuple(bad))


def require_valid(G: Graph, P: BarbellPartition, what: str) -> BarbellPartition:
    report = verify_barbell_partition(G, P)
    if not report.valid:
        detail = "; ".join(v.describe(G) for v in report.violations)
        raise ProofCheckFailure(f"{what} produced an invalid partition: {detail}")
    return P


def barbell_to_forts(G: Graph, P: BarbellPartition) -> tuple[VertexSet, VertexSet]:
    """The two sides of a valid partition, which are separated forts."""
    report = verify_barbell_partition(G, P)
    if not report.valid:
        raise InvalidPartition("; ".join(v.describe(G) for v in report.violations))
    return P.W1, P.W2


def forts_to_barbell(G: Graph, F1, F2) -> BarbellPartition:
    """Partition ``(V - F1 - F2, F1, F2)`` from a pair of separated forts."""
    f1, f2 = to_mask(F1, G.n), to_mask(F2, G.n)
    for f, name in ((f1, "F1"), (f2, "F2")):
        if not fort_mask_ok(G, f):
            raise InvalidPartition(f"{name} is not a fort")
    if f1 & f2:
        raise InvalidPartition("forts are not disjoint")
    closed = f1
    for v in iter_bits(f1):
        closed |= G.adj[v]
    if closed & f2:
        raise InvalidPartition("forts are adjacent")
    return BarbellPartition.from_ws(G.n, f1, f2)


def noiso_bound_check(G: Graph, P: BarbellPartition) -> bool:
    """Both sides have at least two vertices when ``G`` has no isolated vertex.

    Vacuously true when ``G`` has an isolated vertex.
    """
    if any(nb == 0 for nb in G.adj):
        return True
    return len(P.W1) >= 2 and len(P.W2) >= 2


# ---------------------------------------------------------------- certificates


@dataclass(frozen=True)
class BarbellCertificate:
    verdict: Verdict
    method: Method
    partition: BarbellPartition | None = None
    notes: str = ""

    @property
    def admits(self) -> bool:
        return self.verdict is Verdict.ADMITS

    def to_json(self, G: Graph) -> dict:
        part = self.partition.to_dict(G) if self.partition else {"R": None, "W1": None, "W2": None}
        return {
            "schema": CERT_SCHEMA,
            "graph6": encode_graph6(G),
            "verdict": self.verdict.value,
            "method": self.method.value,
            **part,
            "notes": self.notes,
        }


def _admits(G: Graph, P: BarbellPartition, method: Method, notes: str) -> BarbellCertificate:
    require_valid(G, P, notes or method.value)
    return BarbellCertificate(Verdict.ADMITS, method, P, notes)


# ---------------------------------------------------------------- shortcuts


def cut_set_partition(G: Graph, S: VertexSet | Iterable[int]) -> BarbellPartition | None:
    """Partition with ``R = S`` when every vertex of ``S`` touching a component
    of ``G - S`` has at least two neighbors in it.

    ``W1`` is the first component of ``G - S``, ``W2`` the others.  Returns
    ``None`` if ``S`` does not disconnect ``G`` or the condition fails.
    """
    s = to_mask(S, G.n)
    comps = component_masks(G, G.full & ~s)
    if len(comps) < 2:
        return None
    for c in comps:
        for v in iter_bits(s):
            k = (G.adj[v] & c).bit_count()
            if k == 1:
                return None
    rest = 0
    for c in comps[1:]:
        rest |= c
    return BarbellPartition.from_sets(G.n, s, comps[0], rest)


def _split_at(G: Graph, a: int) -> BarbellPartition | None:
    comps = component_masks(G, G.full & ~(1 << a))
    if len(comps) < 2:
        return None
    weights = sorted(
        ((G.adj[a] & c).bit_count(), i) for i, c in enumerate(comps)
    )
    weights.reverse()
    take = [weights[0]]
    if weights[0][0] == 1 and len(weights) > 1:
        take.append(weights[1])
    rest = [w for w in weights if w not in take]
    if sum(w for w, _ in take) < 2 or sum(w for w, _ in rest) < 2:
        return None
    w1 = sum(comps[i] for _, i in take)
    w2 = sum(comps[i] for _, i in rest)
    return BarbellPartition.from_sets(G.n, 1 << a, w1, w2)


def _split_between(G: Graph, a: int, b: int) -> BarbellPartition | None:
    """``W1``: parts of ``G - a`` away from ``b``; ``W2``: parts of ``G - b``
    away from ``a``; everything else is ``R``.

    Only ``a`` touches ``W1`` and only ``b`` touches ``W2``, so the partition
    is valid exactly when each of them has two or more neighbors on its side.
    """
    w1 = sum(c for c in component_masks(G, G.full & ~(1 << a)) if not c >> b & 1)
    w2 = sum(c for c in component_masks(G, G.full & ~(1 << b)) if not c >> a & 1)
    if (G.adj[a] & w1).bit_count() < 2 or (G.adj[b] & w2).bit_count() < 2:
        return None
    return BarbellPartition.from_ws(G.n, w1, w2)


def _describe_class(G: Graph) -> str:
    st = structural_queries(G)
    if st.is_tree:
        return "tree"
    if st.is_unicyclic:
        return "unicyclic graph"
    if st.is_cactus:
        return f"cactus with {st.cycle_count} cycles"
    return "graph"


def structural_screen(
    G: Graph, cut_sets: Sequence[Iterable[int]] = ()
) -> BarbellCertificate | None:
    """Fast answers from structure alone; ``None`` when nothing applies.

    Admits for disconnected graphs, for supplied cut sets meeting the
    two-neighbor condition, and through cut vertices: one cut vertex whose
    branches split into two groups each receiving two or more of its
    neighbors, or two cut vertices each with two or more neighbors in the
    branches hanging away from the other.  These cover trees with a vertex of
    degree four or two of degree three, the unicyclic analogue, and cacti with
    at least two cycles.  Does not admit for ``n <= 1`` and for connected
    graphs of diameter 2 and maximum degree 3.
    """
    n = G.n
    if n <= 1:
        return BarbellCertificate(
            Verdict.DOES_NOT_ADMIT, Method.STRUCTURAL, None,
            "fewer than two vertices: W1 and W2 cannot both be nonempty",
        )
    comps = component_masks(G)
    if len(comps) > 1:
        rest = G.full & ~comps[0]
        P = BarbellPartition.from_sets(n, 0, comps[0], rest)
        return _admits(G, P, Method.STRUCTURAL, "disconnected: W1 is one component")
    if max(G.degrees()) == 3 and diameter(G) == 2:
        return BarbellCertificate(
            Verdict.DOES_NOT_ADMIT, Method.STRUCTURAL, None,
            "connected, diameter 2, maximum degree 3",
        )
    for S in cut_sets:
        P = cut_set_partition(G, S)
        if P is not None:
            return _admits(G, P, Method.STRUCTURAL, "supplied cut set as R")
    cuts = structural_queries(G).cut_vertices
    for a in cuts:
        P = _split_at(G, a)
        if P is not None:
            return _admits(
                G, P, Method.STRUCTURAL,
                f"{_describe_class(G)}: R is cut vertex {G.label(a)}",
            )
    for a, b in itertools.combinations(cuts, 2):
        P = _split_between(G, a, b)
        if P is not None:
            return _admits(
                G, P, Method.STRUCTURAL,
                f"{_describe_class(G)}: R separates cut vertices {G.label(a)} and {G.label(b)}",
            )
    return None


# ---------------------------------------------------------------- brute force


def default_brute_cap() -> int:
    return int(os.environ.get("BARBELL_BRUTE_CAP", "15"))


@lru_cache(maxsize=4)
def _digits(k: int) -> np.ndarray:
    """All base-3 strings of length ``k`` in lexicographic order."""
    if k == 0:
        return np.zeros((1, 0), dtype=np.int8)
    return np.array(list(itertools.product(range(3), repeat=k)), dtype=np.int8)


def brute_force_barbell(G: Graph, cap: int | None = None) -> BarbellPartition | None:
    """First valid partition over all assignments ``V -> {R, W1, W2}``.

    Assignments are visited in lexicographic order (vertex 0 most significant,
    ``R < W1 < W2``), skipping those whose first non-``R`` vertex is in ``W2``
    since swapping the sides preserves validity.  Checks the definition
    directly; nothing here depends on forts.
    """
    cap = default_brute_cap() if cap is None else cap
    n = G.n
    if n > cap:
        raise ValueError(f"brute force capped at {cap} vertices, graph has {n}")
    if n < 2:
        return None
    A = G.adjacency_matrix(np.float32)
    tail = min(n, 10)
    head = n - tail
    suffix = _digits(tail)
    first_nonzero = np.where(suffix.any(axis=1), (suffix != 0).argmax(axis=1), -1)
    suffix_canon = (first_nonzero >= 0) & (
        suffix[np.arange(len(suffix)), np.maximum(first_nonzero, 0)] == 1
    )
    for prefix in itertools.product(range(3), repeat=head):
        lead = next((d for d in prefix if d), 0)
        if lead == 2:
            continue
        assign = np.empty((len(suffix), n), dtype=np.int8)
        assign[:, :head] = prefix
        assign[:, head:] = suffix
        w1 = (assign == 1).astype(np.float32)
        w2 = (assign == 2).astype(np.float32)
        r = assign == 0
        in1 = w1 @ A
        in2 = w2 @ A
        ok = w1.any(axis=1) & w2.any(axis=1)
        ok &= (w1 * in2).sum(axis=1) == 0
        ok &= ~(r & (in1 == 1)).any(axis=1)
        ok &= ~(r & (in2 == 1)).any(axis=1)
        if lead == 0:
            ok &= suffix_canon
        if ok.any():
            row = assign[int(ok.argmax())]
            return BarbellPartition.from_sets(
                n,
                [v for v in range(n) if row[v] == 0],
                [v for v in range(n) if row[v] == 1],
                [v for v in range(n) if row[v] == 2],
            )
    return None


# ---------------------------------------------------------------- pipeline


def find_barbell_partition(
    G: Graph,
    brute_cap: int | None = None,
    budget: int = DEFAULT_BUDGET,
    cut_sets: Sequence[Iterable[int]] = (),
) -> BarbellCertificate:
    """Decide whether ``G`` has a barbell partition, with provenance.

    Stages: structural screen, then the exhaustive separated-fort search.
    Exhaustive tripartition search (for ``n <= brute_cap``) only runs when
    the fort search exhausts its node budget.  A negative verdict always
    comes from a completed exhaustive stage or the diameter/degree lemma.
    """
    cert = structural_screen(G, cut_sets)
    if cert is not None:
        return cert
    cap = default_brute_cap() if brute_cap is None else brute_cap
    try:
        pair = separated_fort_pair(G, budget)
    except BudgetExceeded as exc:
        if G.n > cap:
            return BarbellCertificate(
                Verdict.BUDGET_EXCEEDED, Method.SEPARATED_FORTS, None,
                f"{exc}; n={G.n} above brute-force cap {cap}",
            )
        P = brute_force_barbell(G, cap)
        if P is None:
            return BarbellCertificate(
                Verdict.DOES_NOT_ADMIT, Method.BRUTE_FORCE, None,
                "exhaustive tripartition search after fort budget ran out",
            )
        return _admits(G, P, Method.BRUTE_FORCE, "tripartition search")
    if pair is None:
        return BarbellCertificate(
            Verdict.DOES_NOT_ADMIT, Method.SEPARATED_FORTS, None,
            "no pair of separated forts (exhaustive minimal-fort search)",
        )
    P = forts_to_barbell(G, *pair)
    return _admits(G, P, Method.SEPARATED_FORTS, "separated forts")
