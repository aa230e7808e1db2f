"""Acceptance criteria 1-9.  Run with ``pytest tests/test_acceptance.py -s``
to see each line as it finishes; they are also repeated in the summary."""

from __future__ import annotations

import time

import numpy as np
import pytest

from barbellkit.graph import encode_graph6, parse_graph6, random_graph
from barbellkit.ssp import Property, property_kernel, sample_matrix
from barbellkit.theorems import SEED, SuiteResult, laplacian_matrix, oracle_kernel_dim, run_suite

from .conftest import ACCEPTANCE, DATA
from .test_ssp import sympy_kernel_dim


def report(number: int, title: str, results: list[SuiteResult], limit: float | None = None) -> None:
    seconds = sum(r.seconds for r in results)
    ok = all(r.passed for r in results) and (limit is None or seconds < limit)
    checks = sum(r.checks for r in results)
    fails = sum(len(r.failures) for r in results)
    bound = f" (limit {limit:.0f}s)" if limit else ""
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {title}: {checks} checks, {fails} failures, {seconds:.1f}s{bound}"
    for r in results:
        if r.failures:
            line += f" | {r.name}: {r.failures[0]}"
    print(line)
    ACCEPTANCE.append(line)
    assert ok, line


def suites(*names: str) -> list[SuiteResult]:
    return [run_suite(n) for n in names]


def test_criterion_1_fort_duality():
    report(1, "fort / zero forcing duality, n <= 7", suites("fort-duality"), limit=300)


@pytest.mark.slow
def test_criterion_2_detector_oracle():
    report(2, "detector agrees with brute force", suites("detector-oracle"))


def test_criterion_3_negatives():
    report(3, "named negatives do not admit", suites("named-negatives"))


def test_criterion_4_degree_diameter():
    report(4, "diameter 2 and max degree 3 give no partition", suites("degdiam"))


def test_criterion_5_constructions():
    names = (
        "dup-transfer", "join-biconditional", "vertex-sum", "path-sum", "corona",
        "product-lift", "cartesian-forts", "prism", "tensor-complete", "row-products",
    )
    report(5, "constructed partitions verify", suites(*names))


def test_criterion_6_dup_criterion():
    report(6, "duplication fort criterion", suites("dup-criterion"))


def test_criterion_7_ssp_kernels():
    report(7, "SSP matrix families and containment chain", suites("ssp-kernels", "ssp-chain"), limit=120)


def test_criterion_8_kernel_oracle():
    res = run_suite("kernel-oracle")
    # second, independent oracle: solve the defining equations with sympy
    extra = SuiteResult("kernel-sympy")
    t0 = time.perf_counter()
    rng = np.random.default_rng(np.random.SeedSequence([SEED, 808]))
    for k in range(50):
        G = random_graph(int(rng.integers(1, 7)), float(rng.uniform(0.2, 0.7)), rng)
        A = laplacian_matrix(G, rng) if k % 2 else sample_matrix(G, SEED, 1000 + k)
        for prop in Property:
            got = property_kernel(A, prop, witness=False).kernel_dim
            extra.check(
                got == sympy_kernel_dim(A, prop) == oracle_kernel_dim(A, prop),
                f"{encode_graph6(G)} {prop.value}",
            )
    extra.seconds = time.perf_counter() - t0
    report(8, "kernel dimension against map-evaluation and sympy oracles", [res, extra])


def test_criterion_9_graph6_and_census():
    fixture = SuiteResult("graph6-fixture")
    t0 = time.perf_counter()
    lines = (DATA / "graph6_fixture.g6").read_text().split()
    fixture.check(len(lines) == 1000, f"fixture has {len(lines)} graphs")
    for ln in lines:
        fixture.check(encode_graph6(parse_graph6(ln)) == ln, ln)
    fixture.seconds = time.perf_counter() - t0
    report(9, "graph6 round trip and census determinism",
           [fixture, *suites("graph6-roundtrip", "census-determinism")])
