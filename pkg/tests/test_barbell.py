from __future__ import annotations

import json

import pytest
from hypothesis import given

from barbellkit.barbell import (
    BarbellPartition,
    Method,
    Verdict,
    barbell_to_forts,
    brute_force_barbell,
    default_brute_cap,
    find_barbell_partition,
    forts_to_barbell,
    noiso_bound_check,
    require_valid,
    structural_screen,
    verify_barbell_partition,
)
from barbellkit.errors import InvalidPartition, ProofCheckFailure
from barbellkit.forcing import is_fort
from barbellkit.graph import Graph, complete, cycle, empty, parse_graph6, path, petersen, star
from barbellkit.ops import cartesian, tensor

from .conftest import graphs

K14_P = BarbellPartition.from_sets(5, [0], [1, 2], [3, 4])
BOWTIE = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
C4_PENDANTS = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)])


class TestVerify:
    def test_star_partition_valid(self):
        assert verify_barbell_partition(star(4), K14_P).valid

    def test_w1_w2_edge(self):
        P = BarbellPartition.from_sets(4, [0], [1, 3], [2])
        rep = verify_barbell_partition(cycle(4), P)
        assert not rep.valid
        assert any("W1" in v.clause and "W2" in v.clause for v in rep.violations)

    def test_exactly_one_neighbor(self):
        P = BarbellPartition.from_sets(4, [1, 2], [0], [3])
        rep = verify_barbell_partition(path(4), P)
        assert not rep.valid
        assert any(v.witness == (1,) for v in rep.violations)

    def test_reports_every_clause(self):
        P = BarbellPartition.from_sets(3, [0, 1], [1], [])
        clauses = {v.clause for v in verify_barbell_partition(path(3), P).violations}
        assert len(clauses) >= 3

    def test_require_valid_raises(self):
        with pytest.raises(ProofCheckFailure):
            require_valid(cycle(4), BarbellPartition.from_sets(4, [0], [1, 3], [2]), "test")


class TestFortCorrespondence:
    def test_disconnected(self):
        G = Graph.from_edges(4, [(0, 1), (2, 3)])
        P = forts_to_barbell(G, [0, 1], [2, 3])
        assert not P.R and verify_barbell_partition(G, P).valid

    def test_star(self):
        W1, W2 = barbell_to_forts(star(4), K14_P)
        assert is_fort(star(4), W1) and is_fort(star(4), W2)
        assert forts_to_barbell(star(4), W1, W2) == K14_P

    def test_rejects_adjacent_forts(self):
        with pytest.raises(InvalidPartition):
            forts_to_barbell(complete(4), [0, 1], [2, 3])

    @given(graphs(2, 7))
    def test_round_trip(self, G):
        P = brute_force_barbell(G)
        if P is None:
            return
        assert forts_to_barbell(G, *barbell_to_forts(G, P)) == P


class TestScreen:
    def test_petersen(self):
        cert = structural_screen(petersen())
        assert cert.verdict is Verdict.DOES_NOT_ADMIT and cert.method is Method.STRUCTURAL

    def test_bowtie(self):
        cert = structural_screen(BOWTIE)
        assert cert.admits and cert.partition.R.members() == (2,)

    def test_star(self):
        assert structural_screen(star(4)).admits

    def test_supplied_cut_set(self):
        # two C4's joined by an edge between vertices 1 and 5
        G = Graph.from_edges(
            8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4)]
        )
        cert = structural_screen(G, cut_sets=[[0, 4]])
        assert cert.admits and verify_barbell_partition(G, cert.partition).valid

    def test_trivial_graphs(self):
        assert structural_screen(empty(1)).verdict is Verdict.DOES_NOT_ADMIT
        assert structural_screen(empty(0)).verdict is Verdict.DOES_NOT_ADMIT

    @given(graphs(1, 8))
    def test_screen_never_contradicts_brute_force(self, G):
        cert = structural_screen(G)
        if cert is None:
            return
        assert cert.admits == (brute_force_barbell(G) is not None)
        if cert.admits:
            assert verify_barbell_partition(G, cert.partition).valid


class TestFind:
    @pytest.mark.parametrize(
        "G",
        [C4_PENDANTS, star(3), cartesian(path(2), path(3)), petersen(),
         tensor(complete(3), complete(3))],
        ids=["c4-pendants", "k13", "p2-box-p3", "petersen", "k3-x-k3"],
    )
    def test_negatives(self, G):
        assert find_barbell_partition(G).verdict is Verdict.DOES_NOT_ADMIT
        assert brute_force_barbell(G) is None

    @given(graphs(1, 8))
    def test_matches_oracle(self, G):
        cert = find_barbell_partition(G)
        assert cert.admits == (brute_force_barbell(G) is not None)
        if cert.admits:
            assert verify_barbell_partition(G, cert.partition).valid

    @given(graphs(2, 8))
    def test_noiso_bound(self, G):
        cert = find_barbell_partition(G)
        if cert.admits:
            assert noiso_bound_check(G, cert.partition)

    def test_noiso_vacuous_with_isolated_vertices(self):
        P = BarbellPartition.from_sets(2, [], [0], [1])
        assert noiso_bound_check(empty(2), P)

    def test_budget_exceeded_past_cap(self):
        G = petersen()
        cert = find_barbell_partition(cycle(9), budget=1, brute_cap=3)
        assert cert.verdict is Verdict.BUDGET_EXCEEDED
        assert find_barbell_partition(G, budget=1, brute_cap=3).verdict is Verdict.DOES_NOT_ADMIT

    def test_brute_force_cap(self):
        with pytest.raises(ValueError):
            brute_force_barbell(cycle(9), cap=5)

    def test_env_cap(self, monkeypatch):
        monkeypatch.setenv("BARBELL_BRUTE_CAP", "11")
        assert default_brute_cap() == 11
        monkeypatch.delenv("BARBELL_BRUTE_CAP")
        assert default_brute_cap() == 15


class TestCertificates:
    def test_json_shape(self):
        G = Graph.from_edges(4, [(0, 1), (2, 3)])
        data = find_barbell_partition(G).to_json(G)
        assert data["schema"] == "barbell-certificate/1"
        assert data["graph6"] == "C`" and data["verdict"] == "admits"
        assert data["R"] == [] and sorted(data["W1"] + data["W2"]) == [1, 2, 3, 4]
        json.dumps(data)

    def test_negative_json(self):
        G = parse_graph6("IheA@GUAo")
        data = find_barbell_partition(G).to_json(G)
        assert data["verdict"] == "does_not_admit" and data["W1"] is None

    def test_partition_dict_round_trip(self):
        G = star(4)
        assert BarbellPartition.from_dict(K14_P.to_dict(G), G) == K14_P

    def test_labels_in_output(self):
        G = star(4).with_labels(["c", "a", "b", "d", "e"])
        assert K14_P.to_dict(G)["W1"] == ["a", "b"]
        assert BarbellPartition.from_dict(K14_P.to_dict(G), G) == K14_P
