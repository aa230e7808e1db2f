from __future__ import annotations

import json

from barbellkit.barbell import brute_force_barbell
from barbellkit.catalog import graphs_on, graphs_up_to
from barbellkit.census import CensusOptions, analyze_graph, run_census
from barbellkit.graph import empty, encode_graph6, petersen


def test_record_fields():
    rec = analyze_graph(petersen()).to_json()
    assert rec["schema"] == "census-record/1"
    assert (rec["n"], rec["m"], rec["diameter"], rec["max_degree"]) == (10, 15, 2, 3)
    assert rec["barbell"]["verdict"] == "does_not_admit"
    assert rec["ssp_evidence"] is None and rec["wall_time_ms"] is None


def test_disconnected_diameter_is_null():
    assert analyze_graph(empty(2)).to_json()["diameter"] is None


def test_timing_is_opt_in():
    assert analyze_graph(petersen(), CensusOptions(timing=True)).wall_time_ms is not None


def test_order_and_errors():
    lines = ["# comment", "C~", "", "oops", "A_"]
    errors: list[str] = []
    out = list(run_census(lines, errors=errors))
    assert [json.loads(s)["graph6"] for s in out] == ["C~", "A_"]
    assert errors and errors[0].startswith("line 4")


def test_parallel_matches_serial():
    lines = [encode_graph6(G) for G in graphs_up_to(5)]
    opts = CensusOptions(ssp_trials=1, seed=3)
    assert list(run_census(lines, opts, jobs=1)) == list(run_census(lines, opts, jobs=3))


def test_seed_changes_evidence_only():
    a = list(run_census(["D~{"], CensusOptions(ssp_trials=3, seed=1)))
    b = list(run_census(["D~{"], CensusOptions(ssp_trials=3, seed=2)))
    ja, jb = json.loads(a[0]), json.loads(b[0])
    assert ja["barbell"] == jb["barbell"]
    assert ja["ssp_evidence"]["seed"] == 1 and jb["ssp_evidence"]["seed"] == 2


def test_four_vertex_catalog():

    graphs = graphs_on(4)
    out = [json.loads(s) for s in run_census([encode_graph6(G) for G in graphs])]
    assert len(out) == 11
    admits = [r["barbell"]["verdict"] == "admits" for r in out]
    assert admits == [brute_force_barbell(G) is not None for G in graphs]
    # on four vertices these are exactly the disconnected graphs
    assert admits == [r["diameter"] is None for r in out]
