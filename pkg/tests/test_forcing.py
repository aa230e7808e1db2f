from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from barbellkit.errors import BudgetExceeded
from barbellkit.forcing import (
    all_forts_brute_force,
    closure_mask,
    enumerate_minimal_forts,
    extract_fort_within,
    is_fort,
    is_zero_forcing_set,
    iter_minimal_forts,
    separated_fort_pair,
    zero_forcing_closure,
)
from barbellkit.graph import Graph, complete, cycle, empty, path, petersen, star

from .conftest import graphs


def brute_minimal(G: Graph) -> list[int]:
    forts = all_forts_brute_force(G)
    return sorted(
        (F for F in forts if not any(E != F and E & ~F == 0 for E in forts)),
        key=lambda F: [v for v in range(G.n) if F >> v & 1],
    )


class TestClosure:
    def test_examples(self):
        assert zero_forcing_closure(path(4), [0]).members() == (0, 1, 2, 3)
        assert zero_forcing_closure(cycle(4), [0]).members() == (0,)
        assert not zero_forcing_closure(petersen(), [])

    def test_zero_forcing_sets(self):
        assert is_zero_forcing_set(path(4), [0])
        assert not is_zero_forcing_set(cycle(4), [0])
        G = petersen()
        assert is_zero_forcing_set(G, range(G.n))

    @given(graphs(1, 8), st.integers(0, 255), st.integers(0, 255))
    def test_monotone_and_idempotent(self, G, a, b):
        S = a & G.full
        T = S | (b & G.full)
        cS, cT = closure_mask(G, S), closure_mask(G, T)
        assert cS & ~cT == 0
        assert closure_mask(G, cS) == cS


class TestForts:
    def test_examples(self):
        assert is_fort(star(3), [2, 3])
        assert is_fort(cycle(4), [0, 2])
        assert not is_fort(path(4), [1])
        assert not is_fort(path(3), [])
        assert is_fort(empty(1), [0])

    def test_extract_examples(self):
        assert extract_fort_within(path(4), [1, 2, 3]) is None
        F = extract_fort_within(cycle(4), [1, 2, 3])
        assert F is not None and F.members() == (1, 2, 3) and is_fort(cycle(4), F)
        assert extract_fort_within(petersen(), []) is None

    @given(graphs(1, 7), st.integers(0, 127))
    def test_duality(self, G, s):
        S = s & G.full
        zf = is_zero_forcing_set(G, G.full & ~S)
        F = extract_fort_within(G, S)
        any_fort = any(f & ~S == 0 for f in all_forts_brute_force(G))
        assert zf == (F is None) == (not any_fort)
        if F is not None:
            assert is_fort(G, F) and F.bits & ~S == 0


class TestMinimalForts:
    def test_c4(self):
        assert [F.one_based() for F in enumerate_minimal_forts(cycle(4))] == [[1, 3], [2, 4]]

    def test_k4(self):
        got = [F.one_based() for F in enumerate_minimal_forts(complete(4))]
        assert got == [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]

    def test_p3_endpoints_form_a_fort(self):
        # the centre sees both endpoints, so {1, 3} is a proper fort of P_3
        assert [F.one_based() for F in enumerate_minimal_forts(path(3))] == [[1, 3]]
        assert brute_minimal(path(3)) == [0b101]

    @given(graphs(1, 7))
    def test_agrees_with_brute_force(self, G):
        assert list(iter_minimal_forts(G)) == brute_minimal(G)

    def test_limit(self):
        assert len(enumerate_minimal_forts(complete(5), limit=3)) == 3

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            enumerate_minimal_forts(petersen(), budget=10)


class TestSeparatedPairs:
    def test_examples(self):
        two_k2 = Graph.from_edges(4, [(0, 1), (2, 3)])
        F1, F2 = separated_fort_pair(two_k2)
        assert {F1.members(), F2.members()} == {(0, 1), (2, 3)}
        assert separated_fort_pair(petersen()) is None
        assert separated_fort_pair(cycle(4)) is None

    @given(graphs(1, 7))
    def test_agrees_with_brute_force(self, G):
        forts = all_forts_brute_force(G)

        def closed(F):
            out = F
            for v in range(G.n):
                if F >> v & 1:
                    out |= G.adj[v]
            return out

        exists = any(A & closed(B) == 0 for A in forts for B in forts)
        pair = separated_fort_pair(G)
        assert (pair is not None) == exists
        if pair:
            A, B = pair
            assert is_fort(G, A) and is_fort(G, B) and A.bits & closed(B.bits) == 0
