from __future__ import annotations

from barbellkit.theorems import SUITES, SuiteResult, named_negative_graphs, run_suite, run_suites

EXPECTED = {
    "fort-duality", "detector-oracle", "named-negatives", "degdiam", "dup-transfer",
    "join-biconditional", "vertex-sum", "path-sum", "corona", "product-lift", "cartesian-forts",
    "prism", "tensor-complete", "row-products", "dup-criterion", "ssp-kernels", "ssp-chain",
    "kernel-oracle", "graph6-roundtrip", "census-determinism",
}


def test_registry():
    assert EXPECTED <= set(SUITES)


def test_result_bookkeeping():
    res = SuiteResult("x")
    assert not res.passed
    res.check(True, "")
    assert res.passed and res.line().startswith("PASS x: 1 checks, 0 failures")
    res.check(False, "boom")
    assert not res.passed and res.line().startswith("FAIL") and "boom" in res.line()


def test_failures_are_capped():
    res = SuiteResult("x")
    for _ in range(50):
        res.check(False, "bad")
    assert res.checks == 50 and res.failures[-1] == "..."


def test_cheap_suites_pass():
    for name in ("named-negatives", "corona", "cartesian-forts"):
        assert run_suite(name).passed


def test_filter():
    assert [r.name for r in run_suites("tensor-complete")] == ["tensor-complete"]


def test_negative_names():
    assert len(named_negative_graphs()) == 6
