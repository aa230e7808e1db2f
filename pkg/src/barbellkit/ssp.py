"""Symmetric matrices with a given graph, and the SAP/SSP/SMP kernel tests.

For ``A`` symmetric, the admissible ``X`` are symmetric with zero diagonal and
zeros on the edges of the pattern of ``A``, so the unknowns are the entries
``x_ij`` (``i < j``) on non-edges, each standing for ``E_ij + E_ji``.

* SSP: ``AX - XA = 0``.  The commutator of two symmetric matrices is skew,
  so the strict upper triangle carries every constraint.
* SAP: ``AX = 0``, all ``n^2`` entries.
* SMP: the SSP rows plus ``tr(A^t X) = 0`` for ``t = 2..n-1``.

The property holds when the only solution is ``X = 0``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import linalg
from .errors import HypothesisError, ProofCheckFailure
from .graph import Graph

__all__ = [
    "Property",
    "SymMatrix",
    "PropertyReport",
    "EvidenceRecord",
    "pattern_of",
    "in_S_of",
    "constraint_system",
    "property_kernel",
    "cn_even_matrix",
    "lollipop_jdup_matrix",
    "corona_matrix",
    "sample_matrix",
    "ssp_evidence",
    "parse_matrix",
    "format_matrix",
    "DEFAULT_TOL",
]

DEFAULT_TOL = 1e-9
REPORT_SCHEMA = "property-report/1"


class Property(str, enum.Enum):
    SAP = "SAP"
    SSP = "SSP"
    SMP = "SMP"

    @classmethod
    def coerce(cls, value: Property | str) -> Property:
        if isinstance(value, Property):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise ValueError(f"unknown property {value!r}; expected SAP, SSP or SMP") from None


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x)
    return repr(float(x))


@dataclass(frozen=True)
class SymMatrix:
    """A real symmetric matrix, exact (``Fraction``) or floating point."""

    n: int
    entries: tuple[tuple, ...] = field(repr=False)
    mode: str = "rational"

    def __post_init__(self):
        if self.mode not in ("rational", "float"):
            raise ValueError(f"mode must be 'rational' or 'float', got {self.mode!r}")
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise ValueError(f"expected a {self.n}x{self.n} matrix")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i + 1}, {j + 1})")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], mode: str = "rational") -> SymMatrix:
        conv = Fraction if mode == "rational" else float
        data = tuple(tuple(conv(x) for x in row) for row in rows)
        return cls(len(data), data, mode)

    @classmethod
    def from_upper(cls, n: int, diag: Sequence, off: dict[tuple[int, int], object],
                   mode: str = "rational") -> SymMatrix:
        """Build from a diagonal and ``{(i, j): value}`` with each pair given once."""
        conv = Fraction if mode == "rational" else float
        M = [[conv(0)] * n for _ in range(n)]
        for i, d in enumerate(diag):
            M[i][i] = conv(d)
        for (i, j), x in off.items():
            if i == j:
                raise ValueError("off-diagonal entry on the diagonal")
            M[i][j] = M[j][i] = conv(x)
        return cls(n, tuple(tuple(r) for r in M), mode)

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.entries[i][j]

    def rows(self) -> list[list]:
        return [list(r) for r in self.entries]

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(x) for x in r] for r in self.entries], dtype=float).reshape(
            self.n, self.n
        )

    def as_float(self) -> SymMatrix:
        return SymMatrix.from_rows(self.entries, "float")

    def as_rational(self) -> SymMatrix:
        return SymMatrix.from_rows(self.entries, "rational")

    def shifted(self, lam) -> SymMatrix:
        """``A + lam * I``."""
        M = self.rows()
        for i in range(self.n):
            M[i][i] = M[i][i] + (Fraction(lam) if self.mode == "rational" else float(lam))
        return SymMatrix.from_rows(M, self.mode)

    def permuted(self, order: Sequence[int]) -> SymMatrix:
        """``P A P^T`` where new row ``k`` is old row ``order[k]``."""
        return SymMatrix.from_rows(
            [[self.entries[a][b] for b in order] for a in order], self.mode
        )

    @property
    def pattern(self) -> Graph:
        return pattern_of(self)

    def to_text(self) -> str:
        return format_matrix(self)


def pattern_of(A: SymMatrix) -> Graph:
    """The graph with an edge ``ij`` (``i != j``) wherever ``a_ij != 0``."""
    return Graph.from_edges(
        A.n,
        [(i, j) for i in range(A.n) for j in range(i + 1, A.n) if A.entries[i][j] != 0],
    )


def in_S_of(A: SymMatrix, G: Graph) -> bool:
    return pattern_of(A) == G


def parse_matrix(text: str, mode: str = "rational") -> SymMatrix:
    """Dense text format: ``n`` on the first line, then ``n`` rows of entries.

    Entries may be integers, ``p/q`` or decimals (decimals stay exact in
    rational mode).  Blank lines and ``#`` comments are ignored.
    """
    lines = []
    for k, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].strip()
        if s:
            lines.append((k, s))
    if not lines:
        raise ValueError("empty matrix file")
    k0, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise ValueError(f"line {k0}: expected the matrix order, got {head!r}") from None
    if n < 1:
        raise ValueError(f"line {k0}: matrix order must be positive")
    if len(lines) - 1 != n:
        raise ValueError(f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    for k, s in lines[1:]:
        parts = s.replace(",", " ").split()
        if len(parts) != n:
            raise ValueError(f"line {k}: expected {n} entries, found {len(parts)}")
        try:
            rows.append([Fraction(p) for p in parts])
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"line {k}: bad entry in {s!r}") from None
    A = SymMatrix.from_rows(rows, "rational")
    return A.as_float() if mode == "float" else A


def format_matrix(A: SymMatrix) -> str:
    lines = [str(A.n)]
    lines += [" ".join(_fmt(x) for x in row) for row in A.entries]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- kernels


def _unknowns(A: SymMatrix) -> list[tuple[int, int]]:
    return [
        (i, j)
        for i in range(A.n)
        for j in range(i + 1, A.n)
        if A.entries[i][j] == 0
    ]


def _matmul(P, Q):
    n = len(P)
    return [[sum(P[i][k] * Q[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def constraint_system(A: SymMatrix, prop: Property | str) -> tuple[list[tuple[int, int]], list[list]]:
    """Unknown pairs and constraint rows (one column per unknown)."""
    prop = Property.coerce(prop)
    a = A.entries
    n = A.n
    U = _unknowns(A)
    zero = Fraction(0) if A.mode == "rational" else 0.0
    rows: list[list] = []
    if prop in (Property.SSP, Property.SMP):
        for p in range(n):
            for q in range(p + 1, n):
                row = []
                for i, j in U:
                    v = zero
                    if q == j:
                        v += a[p][i]
                    if q == i:
                        v += a[p][j]
                    if p == i:
                        v -= a[j][q]
                    if p == j:
                        v -= a[i][q]
                    row.append(v)
                rows.append(row)
    if prop is Property.SMP:
        power = [list(r) for r in a]
        for _ in range(2, n):
            power = _matmul(power, a)
            rows.append([2 * power[i][j] for i, j in U])
    if prop is Property.SAP:
        for p in range(n):
            for q in range(n):
                row = []
                for i, j in U:
                    v = zero
                    if q == j:
                        v += a[p][i]
                    if q == i:
                        v += a[p][j]
                    row.append(v)
                rows.append(row)
    return U, rows


@dataclass(frozen=True)
class PropertyReport:
    property: Property
    kernel_dim: int
    unknowns: tuple[tuple[int, int], ...]
    arithmetic: str
    tolerance: float | None = None
    indeterminate: bool = False
    witness: tuple = ()

    @property
    def holds(self) -> bool:
        return self.kernel_dim == 0

    def to_json(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "property": self.property.value,
            "kernel_dim": self.kernel_dim,
            "holds": self.holds,
            "arithmetic": self.arithmetic,
            "tolerance": self.tolerance,
            "indeterminate": self.indeterminate,
            "unknowns": [[i + 1, j + 1] for i, j in self.unknowns],
            "witness": [[[_fmt(x) for x in row] for row in X] for X in self.witness],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _as_matrix(n: int, U, vec, zero):
    X = [[zero] * n for _ in range(n)]
    for (i, j), x in zip(U, vec):
        X[i][j] = X[j][i] = x
    return tuple(tuple(r) for r in X)


def property_kernel(
    A: SymMatrix,
    prop: Property | str,
    *,
    arithmetic: str | None = None,
    tol: float = DEFAULT_TOL,
    witness: bool = True,
) -> PropertyReport:
    """Dimension of the solution space for ``prop``; the property holds iff it is 0.

    ``arithmetic`` defaults to the matrix mode.  In floating mode the rank
    counts singular values above ``tol * s_max``, and the report is marked
    indeterminate when some singular value lies within a factor of 10 of
    that threshold.
    """
    prop = Property.coerce(prop)
    arithmetic = arithmetic or A.mode
    if arithmetic == "float":
        return _kernel_float(A.as_float(), prop, tol, witness)
    if arithmetic != "rational":
        raise ValueError(f"arithmetic must be 'rational' or 'float', got {arithmetic!r}")
    A = A.as_rational() if A.mode != "rational" else A
    U, rows = constraint_system(A, prop)
    if not U:
        return PropertyReport(prop, 0, (), "rational")
    r = linalg.rank(rows) if rows else 0
    dim = len(U) - r
    wit: tuple = ()
    if dim and witness:
        basis = linalg.nullspace(rows, len(U))
        wit = tuple(_as_matrix(A.n, U, vec, Fraction(0)) for vec in basis)
    return PropertyReport(prop, dim, tuple(U), "rational", witness=wit)


def _kernel_float(A: SymMatrix, prop: Property, tol: float, witness: bool) -> PropertyReport:
    U, rows = constraint_system(A, prop)
    if not U:
        return PropertyReport(prop, 0, (), "float", tolerance=tol)
    M = np.array(rows, dtype=float).reshape(len(rows), len(U))
    _, s, vt = np.linalg.svd(M)
    smax = float(s[0]) if s.size else 0.0
    if smax == 0.0:
        r = 0
        indeterminate = False
    else:
        thresh = tol * smax
        r = int(np.sum(s > thresh))
        indeterminate = bool(np.any((s > thresh / 10) & (s < thresh * 10)))
    dim = len(U) - r
    wit: tuple = ()
    if dim and witness:
        wit = tuple(_as_matrix(A.n, U, vt[k], 0.0) for k in range(r, len(U)))
    return PropertyReport(prop, dim, tuple(U), "float", tol, indeterminate, wit)


# ---------------------------------------------------------------- families


def _require_complete_pattern(A: SymMatrix) -> None:
    if any(A.entries[i][j] == 0 for i in range(A.n) for j in range(i + 1, A.n)):
        raise HypothesisError("A must have a complete pattern (all off-diagonal entries nonzero)")


def _assert_ssp(B: SymMatrix, what: str) -> SymMatrix:
    rep = property_kernel(B, Property.SSP, witness=False)
    if not rep.holds:
        raise ProofCheckFailure(f"{what}: SSP fails with kernel dimension {rep.kernel_dim}")
    return B


def cn_even_matrix(n: int, lam, b) -> SymMatrix:
    """Pattern ``C_n``: diagonal ``lam`` on the first half and ``-lam`` on the
    second, every cycle edge ``b``."""
    if n < 4 or n % 2:
        raise HypothesisError("n must be even and at least 4")
    lam, b = Fraction(lam), Fraction(b)
    if lam == 0:
        raise HypothesisError("lambda must be nonzero")
    if b == 0:
        raise HypothesisError("b must be nonzero")
    diag = [lam] * (n // 2) + [-lam] * (n // 2)
    off = {(i, i + 1): b for i in range(n - 1)}
    off[(0, n - 1)] = b
    return SymMatrix.from_upper(n, diag, off)


def lollipop_jdup_matrix(A: SymMatrix, mu1, mu2, *, check: bool = True) -> SymMatrix:
    """``[[A, e_n, e_n], [e_n^T, mu1, 0], [e_n^T, 0, mu2]]``.

    The pattern is ``K_n`` with two pendant vertices on its last vertex.
    """
    _require_complete_pattern(A)
    mu1, mu2 = Fraction(mu1), Fraction(mu2)
    if mu1 == mu2:
        raise HypothesisError("mu1 and mu2 must be distinct")
    n = A.n
    M = [[Fraction(0)] * (n + 2) for _ in range(n + 2)]
    for i in range(n):
        for j in range(n):
            M[i][j] = Fraction(A.entries[i][j])
    M[n - 1][n] = M[n][n - 1] = Fraction(1)
    M[n - 1][n + 1] = M[n + 1][n - 1] = Fraction(1)
    M[n][n] = mu1
    M[n + 1][n + 1] = mu2
    B = SymMatrix.from_rows(M)
    return _assert_ssp(B, "lollipop duplication matrix") if check else B


def corona_matrix(A: SymMatrix, mu: Sequence, lam, *, check: bool = True) -> SymMatrix:
    """``[[A, D_mu], [D_mu, lam I]]``, a matrix for ``K_n`` corona ``K_1``."""
    _require_complete_pattern(A)
    n = A.n
    mu = [Fraction(x) for x in mu]
    if len(mu) != n:
        raise ValueError(f"expected {n} values of mu, got {len(mu)}")
    if any(x == 0 for x in mu):
        raise HypothesisError("every mu_i must be nonzero")
    for i in range(n):
        for j in range(i + 1, n):
            if abs(mu[i]) == abs(mu[j]):
                raise HypothesisError(f"mu_{i + 1} = +-mu_{j + 1}")
    lam = Fraction(lam)
    M = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            M[i][j] = Fraction(A.entries[i][j])
        M[i][n + i] = M[n + i][i] = mu[i]
        M[n + i][n + i] = lam
    B = SymMatrix.from_rows(M)
    return _assert_ssp(B, "corona matrix") if check else B


# ---------------------------------------------------------------- sampling


def sample_matrix(G: Graph, seed: int, trial: int = 0) -> SymMatrix:
    """A seeded matrix in S(G) with dyadic entries.

    Edge entries are ``+-k/64`` with ``16 <= k <= 256`` (magnitude in
    ``[1/4, 4]``, never zero); diagonal entries ``k/64`` with
    ``-128 <= k <= 128``.
    """
    rng = np.random.default_rng(np.random.SeedSequence([seed, trial]))
    diag = [Fraction(int(k), 64) for k in rng.integers(-128, 129, size=G.n)]
    off = {}
    for u, v in G.edges():
        k = int(rng.integers(16, 257))
        sign = 1 if rng.integers(0, 2) else -1
        off[(u, v)] = Fraction(sign * k, 64)
    return SymMatrix.from_upper(G.n, diag, off)


@dataclass(frozen=True)
class EvidenceRecord:
    trials: int
    seed: int
    ssp_count: int
    sap_count: int
    smp_count: int
    non_ssp_witness: dict | None = None

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "ssp_count": self.ssp_count,
            "sap_count": self.sap_count,
            "smp_count": self.smp_count,
            "non_ssp_witness": self.non_ssp_witness,
        }


def ssp_evidence(G: Graph, trials: int, seed: int) -> EvidenceRecord:
    """Count how many sampled matrices in S(G) have each property.

    Sampled evidence only: it says nothing definite about whether every
    matrix of ``G`` has the SSP.  Trial ``t`` uses seed ``(seed, t)``.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    counts = {p: 0 for p in Property}
    first = None
    for t in range(trials):
        A = sample_matrix(G, seed, t)
        for p in Property:
            rep = property_kernel(A, p, witness=(p is Property.SSP and first is None))
            if rep.holds:
                counts[p] += 1
            elif p is Property.SSP and first is None:
                first = {
                    "trial": t,
                    "matrix": [[_fmt(x) for x in row] for row in A.entries],
                    "X": [[_fmt(x) for x in row] for row in rep.witness[0]],
                }
    return EvidenceRecord(
        trials, seed, counts[Property.SSP], counts[Property.SAP], counts[Property.SMP], first
    )

