"""Solver correctness: validation, oracle agreement, enumeration, dead vertices.

Expected values come from two independent routes: hand-derivable closed
forms for named instances (paths, cycles, stars, complete unions), and
tiny brute-force scans written in this file (full 3^n or 2^n sweeps
through the raw definitions) that share nothing with the package's
search code.
"""

import itertools

import pytest
from hypothesis import given, settings

from conftest import (
    complete,
    connected_graphs,
    cycle,
    dead_example,
    path,
    solvable_graphs,
    spider,
    star,
    union,
)
from trd.errors import (
    BudgetExceededError,
    GraphTooLargeError,
    IsolatedVertexError,
    LengthMismatchError,
    TooSmallError,
)
from trd.families import Complete
from trd.graphs import Graph, build_graph, disjoint_union
from trd.solver import (
    WeightFunction,
    brute_oracle_gamma_tr,
    classical_numbers,
    dead_vertices,
    enumerate_min_trd,
    gamma_tr,
    gamma_tr_equals_order,
    gamma_tr_value,
    has_trd_weight_at_most,
    is_trd_function,
)


# --- test-local oracles: raw definition scans, no search tricks ------------


def naive_is_rd(g: Graph, values) -> bool:
    return all(
        x > 0 or any(values[u] == 2 for u in range(g.n) if g.has_edge(v, u))
        for v, x in enumerate(values)
    )


def naive_is_trd(g: Graph, values) -> bool:
    if not naive_is_rd(g, values):
        return False
    positive = [v for v, x in enumerate(values) if x > 0]
    return all(
        any(g.has_edge(v, u) for u in positive if u != v) for v in positive
    )


def naive_gamma_tr(g: Graph) -> int:
    return min(
        sum(vec)
        for vec in itertools.product((0, 1, 2), repeat=g.n)
        if naive_is_trd(g, vec)
    )


def naive_gamma_r(g: Graph) -> int:
    return min(
        sum(vec)
        for vec in itertools.product((0, 1, 2), repeat=g.n)
        if naive_is_rd(g, vec)
    )


def naive_gamma(g: Graph) -> int:
    for size in range(g.n + 1):
        for s in itertools.combinations(range(g.n), size):
            if all(
                v in s or any(g.has_edge(v, u) for u in s) for v in range(g.n)
            ):
                return size
    raise AssertionError


def naive_gamma_t(g: Graph) -> int:
    for size in range(g.n + 1):
        for s in itertools.combinations(range(g.n), size):
            if all(any(g.has_edge(v, u) for u in s) for v in range(g.n)):
                return size
    raise AssertionError


# --- validation -------------------------------------------------------------


class TestIsTrdFunction:
    def test_all_ones_valid(self):
        verdict = is_trd_function(cycle(4), WeightFunction((1, 1, 1, 1)))
        assert verdict.valid and bool(verdict)

    def test_total_violation(self):
        verdict = is_trd_function(cycle(4), WeightFunction((2, 0, 2, 0)))
        assert not verdict.valid
        assert verdict.vertex == 0 and verdict.condition == "total"

    def test_roman_violation(self):
        verdict = is_trd_function(cycle(4), WeightFunction((2, 1, 0, 0)))
        assert not verdict.valid
        assert verdict.vertex == 2 and verdict.condition == "roman"

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatchError):
            is_trd_function(cycle(4), WeightFunction((1, 1)))

    @given(solvable_graphs(2, 6))
    @settings(max_examples=60)
    def test_matches_naive_checker(self, g):
        for vec in itertools.islice(
            itertools.product((0, 1, 2), repeat=g.n), 0, 200, 3
        ):
            assert bool(is_trd_function(g, WeightFunction(vec))) == naive_is_trd(
                g, vec
            )

    def test_level_sets(self):
        f = WeightFunction((2, 0, 1, 1))
        assert f.weight == 4
        assert f.v0 == (1,) and f.v1 == (2, 3) and f.v2 == (0,)
        assert f.v_plus == (0, 2, 3)


# --- values -----------------------------------------------------------------


class TestKnownValues:
    # cycles, paths, and K_2-unions all attain the full order
    @pytest.mark.parametrize(
        "g,value",
        [
            (path(4), 4),
            (cycle(4), 4),
            (cycle(5), 5),
            (complete(3), 3),
            (spider(1, 1, 3), 5),
            (union(Complete(2), Complete(2)), 4),
            (build_graph(6, [(i, j) for i in range(3) for j in range(3, 6)]), 4),
        ],
    )
    def test_named_instances(self, g, value):
        assert brute_oracle_gamma_tr(g) == value
        assert gamma_tr_value(g) == value
        assert gamma_tr(g).value == value

    def test_exhaustive_agreement_small(self):
        from trd.graphs import from_edge_mask

        for n in range(2, 6):
            for mask in range(1 << (n * (n - 1) // 2)):
                g = from_edge_mask(n, mask)
                if g.has_isolated_vertices():
                    continue
                assert gamma_tr_value(g) == brute_oracle_gamma_tr(g)

    @given(solvable_graphs(2, 7))
    @settings(max_examples=150)
    def test_solver_matches_naive(self, g):
        if g.n <= 6:
            assert gamma_tr_value(g) == naive_gamma_tr(g)
        else:
            assert gamma_tr_value(g) == brute_oracle_gamma_tr(g)

    @given(solvable_graphs(2, 6))
    @settings(max_examples=100)
    def test_decision_consistent(self, g):
        value = gamma_tr_value(g)
        assert has_trd_weight_at_most(g, value)
        assert not has_trd_weight_at_most(g, value - 1)
        assert gamma_tr_equals_order(g) == (value == g.n)


class TestClassicalNumbers:
    def test_complete_five(self):
        assert classical_numbers(complete(5)) == (1, 2, 2)

    def test_c4(self):
        # frozen from the brute-force scans below: gamma=2, gamma_t=2, gamma_R=3
        g = cycle(4)
        assert (naive_gamma(g), naive_gamma_t(g), naive_gamma_r(g)) == (2, 2, 3)
        assert classical_numbers(g) == (2, 2, 3)

    def test_union_total(self):
        assert classical_numbers(union(Complete(2), Complete(3)))[1] == 4

    def test_isolated_rejected(self):
        with pytest.raises(IsolatedVertexError):
            classical_numbers(build_graph(3, [(0, 1)]))

    @given(solvable_graphs(2, 6))
    @settings(max_examples=80)
    def test_matches_naive(self, g):
        assert classical_numbers(g) == (
            naive_gamma(g),
            naive_gamma_t(g),
            naive_gamma_r(g),
        )

    @given(solvable_graphs(2, 6))
    @settings(max_examples=80)
    def test_bound_chain(self, g):
        gamma, gamma_t, _ = classical_numbers(g)
        gtr = gamma_tr_value(g)
        assert gamma <= gamma_t <= gtr <= 2 * gamma_t


# --- enumeration ------------------------------------------------------------


class TestEnumerateMinTrd:
    def test_k2(self):
        assert [f.values for f in enumerate_min_trd(complete(2))] == [(1, 1)]

    def test_k3(self):
        # brute scan of the 27 vectors: the six permutations of (2,1,0)
        # plus the all-ones vector are the weight-3 TRD-functions
        expected = sorted(
            vec
            for vec in itertools.product((0, 1, 2), repeat=3)
            if sum(vec) == 3 and naive_is_trd(complete(3), vec)
        )
        assert expected == [
            (0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 1, 1),
            (1, 2, 0), (2, 0, 1), (2, 1, 0),
        ]
        assert [f.values for f in enumerate_min_trd(complete(3))] == expected

    def test_c4_contains_all_ones(self):
        values = [f.values for f in enumerate_min_trd(cycle(4))]
        assert (1, 1, 1, 1) in values

    @given(solvable_graphs(2, 6))
    @settings(max_examples=60)
    def test_matches_naive_enumeration(self, g):
        target = naive_gamma_tr(g)
        expected = sorted(
            vec
            for vec in itertools.product((0, 1, 2), repeat=g.n)
            if sum(vec) == target and naive_is_trd(g, vec)
        )
        assert [f.values for f in enumerate_min_trd(g)] == expected

    @given(solvable_graphs(2, 6))
    @settings(max_examples=40)
    def test_all_valid_at_optimum(self, g):
        value = gamma_tr_value(g)
        for f in enumerate_min_trd(g):
            assert f.weight == value
            assert is_trd_function(g, f).valid

    def test_cap(self):
        with pytest.raises(GraphTooLargeError):
            enumerate_min_trd(dead_example(4))  # 13 vertices


# --- witnesses --------------------------------------------------------------


class TestWitness:
    @given(solvable_graphs(2, 6))
    @settings(max_examples=80)
    def test_lexicographically_smallest(self, g):
        result = gamma_tr(g)
        minimums = enumerate_min_trd(g)
        assert result.witness.values == minimums[0].values
        assert result.witness.weight == result.value
        assert is_trd_function(g, result.witness).valid

    def test_nodes_reported(self):
        assert gamma_tr(cycle(6)).nodes_explored > 0

    def test_invariant_label(self):
        assert gamma_tr(cycle(4)).invariant == "gamma_tR"


# --- dead vertices ----------------------------------------------------------


class TestDeadVertices:
    def test_dead_example_rim(self):
        assert dead_vertices(dead_example(2)) == (5, 6)

    def test_c4_none(self):
        assert dead_vertices(cycle(4)) == ()

    def test_k3_none(self):
        assert dead_vertices(complete(3)) == ()

    @given(solvable_graphs(2, 6))
    @settings(max_examples=60)
    def test_matches_enumeration(self, g):
        minimums = enumerate_min_trd(g)
        expected = tuple(
            v for v in range(g.n) if all(f.values[v] == 0 for f in minimums)
        )
        assert dead_vertices(g, "total-roman") == expected

    @given(solvable_graphs(2, 5))
    @settings(max_examples=60)
    def test_roman_mode_matches_naive(self, g):
        target = naive_gamma_r(g)
        minimums = [
            vec
            for vec in itertools.product((0, 1, 2), repeat=g.n)
            if sum(vec) == target and naive_is_rd(g, vec)
        ]
        expected = tuple(
            v for v in range(g.n) if all(vec[v] == 0 for vec in minimums)
        )
        assert dead_vertices(g, "roman") == expected

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            dead_vertices(cycle(4), "nonsense")


# --- structure and errors ---------------------------------------------------


class TestStructuralProperties:
    @given(solvable_graphs(2, 5), solvable_graphs(2, 5))
    @settings(max_examples=60)
    def test_additive_over_components(self, a, b):
        g = disjoint_union([a, b])
        assert gamma_tr_value(g) == gamma_tr_value(a) + gamma_tr_value(b)

    def test_too_small(self):
        with pytest.raises(TooSmallError):
            gamma_tr(build_graph(1, []))

    def test_isolated(self):
        with pytest.raises(IsolatedVertexError):
            gamma_tr(build_graph(3, [(0, 1)]))
        with pytest.raises(IsolatedVertexError):
            brute_oracle_gamma_tr(build_graph(3, [(0, 1)]))

    def test_oracle_cap(self):
        with pytest.raises(GraphTooLargeError):
            brute_oracle_gamma_tr(dead_example(4))

    def test_budget_exceeded(self):
        with pytest.raises(BudgetExceededError):
            gamma_tr(path(12), node_budget=3)

    def test_budget_generous_succeeds(self):
        assert gamma_tr(path(8), node_budget=500_000).value == 8
