"""Named verification suites, each checking one family of statements against
an independent oracle (brute force, exhaustive catalogs, or exact linear
algebra).  ``run_suites`` is what the ``theorems`` command calls.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from . import linalg
from .barbell import (
    BarbellPartition,
    Verdict,
    brute_force_barbell,
    find_barbell_partition,
    verify_barbell_partition,
)
from .catalog import graphs_up_to
from .census import CensusOptions, run_census
from .errors import HypothesisError, ProofCheckFailure
from .forcing import (
    closure_mask,
    enumerate_minimal_forts,
    fort_mask_ok,
    separated_fort_pair,
)
from .graph import (
    Graph,
    complete,
    cycle,
    diameter,
    encode_graph6,
    is_connected,
    iter_bits,
    parse_graph6,
    path,
    petersen,
    random_graph,
    star,
    structural_queries,
)
from .ops import (
    barbell_cartesian_disjoint_forts,
    barbell_corona,
    barbell_nonadjacent_pair,
    barbell_prism,
    barbell_tensor_complete,
    cartesian,
    corona,
    dup,
    dup_creates_barbell,
    jdup,
    join,
    join_admits,
    lift_barbell_product,
    path_sum_admits,
    product,
    tensor,
    transfer_barbell_dominating,
    transfer_barbell_dup,
    transfer_barbell_join,
    transfer_barbell_vertex_sum,
    vertex_sum,
)
from .ssp import (
    Property,
    SymMatrix,
    cn_even_matrix,
    corona_matrix,
    lollipop_jdup_matrix,
    property_kernel,
    sample_matrix,
)

__all__ = ["SuiteResult", "SUITES", "run_suite", "run_suites", "named_negative_graphs"]

SEED = 20240611


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.checks > 0 and not self.failures

    def check(self, ok: bool, message: str) -> None:
        self.checks += 1
        if not ok and len(self.failures) < 20:
            self.failures.append(message)
        elif not ok:
            self.failures.append("...")

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.checks} checks, {len(self.failures)} failures, {self.seconds:.1f}s"
        if self.failures:
            text += " | " + self.failures[0]
        return text


SUITES: dict[str, tuple[str, Callable[[SuiteResult], None]]] = {}


def _suite(name: str, summary: str):
    def deco(fn):
        SUITES[name] = (summary, fn)
        return fn

    return deco


def run_suite(name: str) -> SuiteResult:
    _, fn = SUITES[name]
    res = SuiteResult(name)
    t0 = time.perf_counter()
    try:
        fn(res)
    except (ProofCheckFailure, HypothesisError, AssertionError) as exc:
        res.failures.append(f"{type(exc).__name__}: {exc}")
    res.seconds = time.perf_counter() - t0
    return res


def run_suites(filter_text: str | None = None) -> list[SuiteResult]:
    names = [n for n in SUITES if filter_text is None or filter_text in n]
    return [run_suite(n) for n in names]


def _rng(tag: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([SEED, tag]))


def _random(rng: np.random.Generator, lo: int, hi: int, plo=0.2, phi=0.7) -> Graph:
    n = int(rng.integers(lo, hi + 1))
    return random_graph(n, float(rng.uniform(plo, phi)), rng)


def _oracle_admits(G: Graph) -> bool:
    return brute_force_barbell(G, cap=G.n) is not None


def _fmt(G: Graph) -> str:
    return encode_graph6(G)


# ---------------------------------------------------------------- forts


@_suite("fort-duality", "V - S is zero forcing iff S contains no fort (all graphs n <= 7)")
def _fort_duality(res: SuiteResult) -> None:
    for G in graphs_up_to(7):
        full = G.full
        size = 1 << G.n
        has = [False] * size
        for S in range(1, size):
            has[S] = fort_mask_ok(G, S) or any(has[S & ~(1 << v)] for v in iter_bits(S))
        bad = [S for S in range(size) if (closure_mask(G, full & ~S) == full) == has[S]]
        res.check(not bad, f"{_fmt(G)}: disagreement at S={bad[:1]}")


# ---------------------------------------------------------------- detector


@_suite("detector-oracle", "fort-based detector agrees with brute force (n <= 7, 500 random 8..12)")
def _detector(res: SuiteResult) -> None:
    graphs = list(graphs_up_to(7))
    rng = _rng(2)
    graphs += [_random(rng, 8, 12, 0.15, 0.85) for _ in range(500)]
    for G in graphs:
        cert = find_barbell_partition(G, brute_cap=0)
        oracle = _oracle_admits(G)
        if cert.verdict is Verdict.BUDGET_EXCEEDED:
            res.check(False, f"{_fmt(G)}: budget exceeded")
            continue
        ok = cert.admits == oracle
        if cert.admits:
            ok = ok and verify_barbell_partition(G, cert.partition).valid
        res.check(ok, f"{_fmt(G)}: detector {cert.verdict.value}, brute force {oracle}")


def named_negative_graphs() -> list[tuple[str, Graph]]:
    c4_pendants = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)])
    H = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4), (0, 4), (2, 3), (1, 3)])
    return [
        ("Petersen", petersen()),
        ("K1,3", star(3)),
        ("C4 with two pendants", c4_pendants),
        ("P2 x P3 (Cartesian)", cartesian(path(2), path(3))),
        ("K3 x K3 (tensor)", tensor(complete(3), complete(3))),
        ("H x K2 (tensor)", tensor(H, complete(2))),
    ]


@_suite("named-negatives", "named graphs without a barbell partition")
def _negatives(res: SuiteResult) -> None:
    for name, G in named_negative_graphs():
        cert = find_barbell_partition(G)
        res.check(cert.verdict is Verdict.DOES_NOT_ADMIT, f"{name}: detector {cert.verdict.value}")
        res.check(not _oracle_admits(G), f"{name}: brute force found a partition")


@_suite("degdiam", "connected, diameter 2, max degree 3 implies no partition (n <= 8)")
def _degdiam(res: SuiteResult) -> None:
    for G in graphs_up_to(8, max_degree=3):
        if max(G.degrees()) != 3 or not is_connected(G) or diameter(G) != 2:
            continue
        res.check(not _oracle_admits(G), f"{_fmt(G)}: brute force found a partition")


# ---------------------------------------------------------------- constructions


def _random_barbell(rng, lo=5, hi=10) -> tuple[Graph, BarbellPartition]:
    while True:
        G = _random(rng, lo, hi)
        cert = find_barbell_partition(G)
        if cert.admits:
            return G, cert.partition


@_suite("dup-transfer", "dup/jdup keep a partition (100 random barbell graphs, v in R and in W)")
def _dup_transfer(res: SuiteResult) -> None:
    rng = _rng(5)
    cases = {"R": 0, "W": 0}
    for k in range(100):
        G, P = _random_barbell(rng)
        pool = P.R.members() if k % 2 == 0 and len(P.R) else P.W1.members() + P.W2.members()
        v = int(pool[int(rng.integers(len(pool)))])
        cases["R" if v in P.R else "W"] += 1
        Pd, Pj = transfer_barbell_dup(G, P, v)
        res.check(verify_barbell_partition(dup(G, v), Pd).valid, f"dup {_fmt(G)} v={v}")
        res.check(verify_barbell_partition(jdup(G, v), Pj).valid, f"jdup {_fmt(G)} v={v}")
    res.check(cases["R"] > 0 and cases["W"] > 0, f"case coverage {cases}")


def _isolated_free(n_max: int) -> list[Graph]:
    return [G for G in graphs_up_to(n_max, n_min=2) if all(G.adj)]


@_suite("join-biconditional", "join admits iff a factor does (all isolated-free factors, n <= 4)")
def _join(res: SuiteResult) -> None:
    graphs = _isolated_free(4)
    for G in graphs:
        for H in graphs:
            K = join(G, H)
            pred = join_admits(G, H)
            res.check(pred == _oracle_admits(K), f"join {_fmt(G)} {_fmt(H)}: predicted {pred}")
            cert = find_barbell_partition(H)
            if cert.admits:
                P = transfer_barbell_join(G, H, cert.partition)
                res.check(P.R.bits & G.full == G.full, "V(G) not inside R")
                P2 = transfer_barbell_dominating(H, cert.partition)
                res.check(H.n in P2.R, "dominating vertex not in R")


@_suite("vertex-sum", "vertex sums: non-path factors and the partition transfer")
def _vertex_sum(res: SuiteResult) -> None:
    rng = _rng(7)
    done = 0
    while done < 20:
        G, H = _random(rng, 3, 6), _random(rng, 3, 6)
        if structural_queries(G).is_path or structural_queries(H).is_path:
            continue
        u, w = int(rng.integers(G.n)), int(rng.integers(H.n))
        P = transfer_barbell_vertex_sum(G, u, H, w)
        res.check(verify_barbell_partition(vertex_sum(G, u, H, w), P).valid, "non-path sum")
        done += 1
    sides = set()
    for _ in range(20):
        G = path(int(rng.integers(1, 6)))
        H, PH = _random_barbell(rng, 4, 8)
        u, w = int(rng.integers(G.n)), int(rng.integers(H.n))
        sides.add("R" if w in PH.R else "W")
        P = transfer_barbell_vertex_sum(G, u, H, w, PH)
        res.check(verify_barbell_partition(vertex_sum(G, u, H, w), P).valid, "path transfer")
    res.check(sides == {"R", "W"}, f"case coverage {sides}")


@_suite("path-sum", "P_n + P_m admits iff both glued vertices have degree 2 (n, m <= 5)")
def _path_sum(res: SuiteResult) -> None:
    for n in range(1, 6):
        for m in range(1, 6):
            for i in range(n):
                for j in range(m):
                    K = vertex_sum(path(n), i, path(m), j)
                    pred = path_sum_admits(n, m, i, j)
                    res.check(pred == _oracle_admits(K), f"P{n}({i}) + P{m}({j}): predicted {pred}")


@_suite("corona", "corona of graphs with at least two vertices (all pairs, 2 <= n, m <= 3)")
def _corona(res: SuiteResult) -> None:
    graphs = graphs_up_to(3, n_min=2)
    for G in graphs:
        for H in graphs:
            P = barbell_corona(G, H)
            res.check(verify_barbell_partition(corona(G, H), P).valid, f"corona {_fmt(G)} {_fmt(H)}")


@_suite("product-lift", "cylinder lift of a partition of H (20 random each, Cartesian and tensor)")
def _lift(res: SuiteResult) -> None:
    rng = _rng(11)
    for kind in ("cartesian", "tensor"):
        for _ in range(20):
            H, PH = _random_barbell(rng, 3, 7)
            G = _random(rng, 1, 4)
            P = lift_barbell_product(G, H, PH, kind)
            res.check(verify_barbell_partition(product(G, H, kind), P).valid, f"{kind} lift")


def disjoint_fort_pair(G: Graph):
    forts = enumerate_minimal_forts(G)
    for a in range(len(forts)):
        for b in range(a + 1, len(forts)):
            if not forts[a].bits & forts[b].bits:
                return forts[a], forts[b]
    return None


@_suite("cartesian-forts", "Cartesian products of graphs with disjoint fort pairs")
def _cart_forts(res: SuiteResult) -> None:
    for G, H in ((complete(4), complete(4)), (cycle(4), cycle(4)), (cycle(4), cycle(6))):
        fg, fh = disjoint_fort_pair(G), disjoint_fort_pair(H)
        res.check(fg is not None and fh is not None, "no disjoint forts found")
        P = barbell_cartesian_disjoint_forts(G, H, fg[0], fg[1], fh[0], fh[1])
        res.check(verify_barbell_partition(cartesian(G, H), P).valid, "cartesian forts")


@_suite("prism", "C_k x C_mk diagonal partitions, k in 4..6, m in 1..3")
def _prism(res: SuiteResult) -> None:
    for k in (4, 5, 6):
        for m in (1, 2, 3):
            K, P = barbell_prism(k, m)
            ok = verify_barbell_partition(K, P).valid
            for r in P.R:
                ok = ok and (K.adj[r] & P.W1.bits).bit_count() == 2
                ok = ok and (K.adj[r] & P.W2.bits).bit_count() == 2
            res.check(ok, f"prism k={k} m={m}")
    K, _ = barbell_prism(4, 1)
    res.check(separated_fort_pair(K) is not None, "C4 x C4 has no separated forts")


@_suite("tensor-complete", "K_n x K_m partitions for n in {2,3}, m in {6,7}; K_3 x K_3 has none")
def _tensor_complete(res: SuiteResult) -> None:
    for n in (2, 3):
        for m in (6, 7):
            K, P = barbell_tensor_complete(n, m)
            res.check(verify_barbell_partition(K, P).valid, f"K{n} x K{m}")
    try:
        barbell_tensor_complete(3, 3)
        res.check(False, "K3 x K3 construction should be refused")
    except HypothesisError:
        res.check(True, "")
    res.check(not _oracle_admits(tensor(complete(3), complete(3))), "K3 x K3 admits")


@_suite("row-products", "tensor and strong products with rows over a non-adjacent pair (10 each)")
def _rows(res: SuiteResult) -> None:
    rng = _rng(13)
    for kind in ("tensor", "strong"):
        done = 0
        while done < 10:
            G = _random(rng, 3, 5)
            H = _random(rng, 2, 5, 0.4, 0.9)
            pairs = [(u, v) for u in range(G.n) for v in range(u + 1, G.n) if not G.has_edge(u, v)]
            if not pairs:
                continue
            if kind == "tensor" and structural_queries(H).pendant_vertices:
                continue
            u, v = pairs[int(rng.integers(len(pairs)))]
            P = barbell_nonadjacent_pair(G, H, u, v, kind)
            res.check(verify_barbell_partition(product(G, H, kind), P).valid, f"{kind} rows")
            done += 1


@_suite("dup-criterion", "dup creates a partition iff V - N[v] holds a fort (barbell-free, 2 <= n <= 6)")
def _dup_criterion(res: SuiteResult) -> None:
    for G in graphs_up_to(6, n_min=2):
        if find_barbell_partition(G).admits:
            continue
        for v in range(G.n):
            pred = dup_creates_barbell(G, v, check_precondition=False)
            a, b = _oracle_admits(dup(G, v)), _oracle_admits(jdup(G, v))
            res.check(pred == a == b, f"{_fmt(G)} v={v}: predicted {pred}, dup {a}, jdup {b}")


@_suite("pendant-dup", "(j)dup of a pendant vertex admits iff the graph is not a path (n <= 6)")
def _pendant_dup(res: SuiteResult) -> None:
    for G in graphs_up_to(6, n_min=2):
        s = structural_queries(G)
        for v in s.pendant_vertices:
            for op in (dup, jdup):
                got = _oracle_admits(op(G, v))
                res.check(got != s.is_path, f"{_fmt(G)} {op.__name__}({v}): admits {got}")


# ---------------------------------------------------------------- matrices


def _rand_q(rng, nonzero=True) -> Fraction:
    while True:
        q = Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 10)))
        if q or not nonzero:
            return q


def _rand_complete(rng, n: int) -> SymMatrix:
    off = {(i, j): _rand_q(rng) for i in range(n) for j in range(i + 1, n)}
    return SymMatrix.from_upper(n, [_rand_q(rng, False) for _ in range(n)], off)


@_suite("ssp-kernels", "even cycle, lollipop duplication and corona matrices have the SSP")
def _ssp_kernels(res: SuiteResult) -> None:
    rng = _rng(17)
    for n in (4, 6, 8):
        for _ in range(5):
            lam, b = _rand_q(rng), _rand_q(rng)
            rep = property_kernel(cn_even_matrix(n, lam, b), Property.SSP)
            res.check(rep.holds, f"even cycle n={n} lam={lam} b={b}: dim {rep.kernel_dim}")
    for n in (3, 4, 5):
        for _ in range(5):
            mu1 = _rand_q(rng, False)
            mu2 = mu1
            while mu2 == mu1:
                mu2 = _rand_q(rng, False)
            B = lollipop_jdup_matrix(_rand_complete(rng, n), mu1, mu2, check=False)
            res.check(property_kernel(B, Property.SSP).holds, f"lollipop n={n}")
    for n in (3, 4, 5):
        for _ in range(5):
            mags = rng.choice(np.arange(1, 13), size=n, replace=False)
            mu = [Fraction(int(m) * (1 if rng.integers(2) else -1), 2) for m in mags]
            B = corona_matrix(_rand_complete(rng, n), mu, _rand_q(rng, False), check=False)
            res.check(property_kernel(B, Property.SSP).holds, f"corona n={n} mu={mu}")


def laplacian_matrix(G: Graph, rng) -> SymMatrix:
    """A weighted Laplacian: singular, so its SAP system is rarely trivial."""
    off = {}
    diag = [Fraction(0)] * G.n
    for u, v in G.edges():
        w = Fraction(int(rng.integers(1, 5)))
        off[(u, v)] = -w
        diag[u] += w
        diag[v] += w
    return SymMatrix.from_upper(G.n, diag, off)


@_suite("ssp-chain", "dim SAP(A + lam I) <= dim SMP(A) <= dim SSP(A) on 100 random cases")
def _chain(res: SuiteResult) -> None:
    rng = _rng(19)
    for k in range(100):
        G = _random(rng, 2, 7)
        if k % 2:
            A, lam = laplacian_matrix(G, rng), Fraction(0)
        else:
            A, lam = sample_matrix(G, SEED, k), _rand_q(rng, False)
        a = property_kernel(A.shifted(lam), Property.SAP, witness=False).kernel_dim
        b = property_kernel(A, Property.SMP, witness=False).kernel_dim
        c = property_kernel(A, Property.SSP, witness=False).kernel_dim
        res.check(a <= b <= c, f"{_fmt(G)} lam={lam}: {a}, {b}, {c}")


def _matmul(P, Q):
    n = len(P)
    return [[sum((P[i][k] * Q[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]


def oracle_kernel_dim(A: SymMatrix, prop: Property) -> int:
    """Evaluate the full matrix map on each admissible basis ``X`` and take
    the rank of the images by Gauss-Jordan elimination."""
    n = A.n
    a = [[Fraction(x) for x in r] for r in A.entries]
    basis = []
    for i in range(n):
        for j in range(i + 1, n):
            if a[i][j] == 0:
                X = [[Fraction(0)] * n for _ in range(n)]
                X[i][j] = X[j][i] = Fraction(1)
                basis.append(X)
    if not basis:
        return 0
    powers = []
    P = a
    for _ in range(2, n):
        P = _matmul(P, a)
        powers.append(P)
    images = []
    for X in basis:
        AX = _matmul(a, X)
        if prop is Property.SAP:
            img = [x for r in AX for x in r]
        else:
            XA = _matmul(X, a)
            img = [AX[p][q] - XA[p][q] for p in range(n) for q in range(n)]
            if prop is Property.SMP:
                img += [sum(Pt[p][q] * X[q][p] for p in range(n) for q in range(n)) for Pt in powers]
        images.append(img)
    # rank of the images (rows) = dimension of the span of the images
    _, pivots = linalg.rref(images, len(images[0]))
    return len(basis) - len(pivots)


@_suite("kernel-oracle", "elimination kernel dims equal a full-map evaluation oracle (50 matrices)")
def _kernel_oracle(res: SuiteResult) -> None:
    rng = _rng(23)
    for k in range(50):
        G = _random(rng, 1, 6)
        A = laplacian_matrix(G, rng) if k % 2 else sample_matrix(G, SEED, k)
        for prop in Property:
            got = property_kernel(A, prop, witness=False).kernel_dim
            want = oracle_kernel_dim(A, prop)
            res.check(got == want, f"{_fmt(G)} {prop.value}: {got} vs {want}")


# ---------------------------------------------------------------- formats


@_suite("graph6-roundtrip", "graph6 encode/parse round trips (1000 random graphs, n up to 70)")
def _g6(res: SuiteResult) -> None:
    rng = _rng(29)
    for _ in range(1000):
        n = int(rng.integers(0, 71))
        G = random_graph(n, float(rng.uniform(0, 1)), rng)
        s = encode_graph6(G)
        res.check(parse_graph6(s) == G and encode_graph6(parse_graph6(s)) == s, f"n={n}")


def census_lines() -> list[str]:
    rng = _rng(31)
    lines = [encode_graph6(G) for G in graphs_up_to(6)]
    lines += [encode_graph6(_random(rng, 8, 12)) for _ in range(50)]
    return lines


@_suite("census-determinism", "census output identical with 1 and 8 workers")
def _census(res: SuiteResult) -> None:
    lines = census_lines()
    opts = CensusOptions(ssp_trials=1, seed=7)
    a = "\n".join(run_census(lines, opts, jobs=1))
    b = "\n".join(run_census(lines, opts, jobs=8))
    res.check(a == b, "outputs differ")
    res.check(a.count("\n") + 1 == len(lines), "record count mismatch")


def suite_names() -> Iterable[str]:
    return SUITES.keys()
