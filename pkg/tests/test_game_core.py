import random
from fractions import Fraction as F
from itertools import combinations

import pytest

from conftest import random_game
from searchpursuit import (
    GameSpec,
    HiderStrategy,
    InstanceTooLarge,
    best_response_value,
    build_matrix,
    feasible_sets,
    knapsack_instance,
    maximal_feasible_sets,
    search_set,
    solve_zero_sum,
)

EXAMPLE = GameSpec((5, 3, 4, 7), ("0.1", "0.2", "0.15", "0.4"), 7)
STAIR5 = GameSpec((1, 2, 3, 4, 5), ("0.5", "0.4", "0.3", "0.2", "0.1"), 5)


def brute_feasible(spec):
    """Independent oracle: filter all 2^n subsets directly."""
    out = []
    for r in range(spec.n + 1):
        for combo in combinations(range(1, spec.n + 1), r):
            if sum((spec.times[i - 1] for i in combo), F(0)) <= spec.budget:
                out.append(combo)
    return sorted(out)


def members(sets):
    return [s.members for s in sets]


class TestFeasibleSets:
    def test_example_matches_direct_enumeration(self):
        expected = brute_feasible(EXAMPLE)
        assert expected == [(), (1,), (2,), (2, 3), (3,), (4,)]
        assert members(feasible_sets(EXAMPLE)) == expected

    def test_zero_budget_leaves_only_empty_set(self):
        spec = GameSpec((1, 2, 3), ("0.5", "0.5", "0.5"), 0)
        assert members(feasible_sets(spec)) == [()]

    def test_unit_times_budget_two_counts_subsets(self):
        spec = GameSpec((1,) * 5, ("0.5",) * 5, 2)
        sets = feasible_sets(spec)
        assert len(sets) == 1 + 5 + 10
        assert all(len(s.members) <= 2 for s in sets)

    def test_lexicographic_order_and_total_times(self):
        rng = random.Random(11)
        for _ in range(20):
            spec = random_game(rng)
            sets = feasible_sets(spec)
            assert members(sets) == sorted(members(sets))
            for s in sets:
                assert s.total_time == sum(
                    (spec.times[i - 1] for i in s.members), F(0)
                )

    def test_closed_under_subset(self):
        rng = random.Random(12)
        for _ in range(20):
            spec = random_game(rng)
            present = set(members(feasible_sets(spec)))
            for combo in present:
                for drop in combo:
                    assert tuple(i for i in combo if i != drop) in present

    def test_cap_refuses_large_instances(self):
        spec = GameSpec((1,) * 10, ("0.5",) * 10, 10)
        with pytest.raises(InstanceTooLarge):
            feasible_sets(spec, max_sets=100)
        assert len(feasible_sets(spec, max_sets=1024)) == 1024


class TestMaximalSets:
    def test_example_prunes_dominated_singletons(self):
        assert members(maximal_feasible_sets(EXAMPLE)) == [(1,), (2, 3), (4,)]

    def test_full_set_when_everything_fits(self):
        spec = GameSpec((1, 1, 1), ("0.5", "0.5", "0.5"), 3)
        assert members(maximal_feasible_sets(spec)) == [(1, 2, 3)]

    def test_staircase_five_rows(self):
        assert set(members(maximal_feasible_sets(STAIR5))) == {
            (5,), (1, 4), (2, 3), (1, 3), (1, 2),
        }

    def test_empty_set_survives_only_when_nothing_fits(self):
        spec = GameSpec((5, 6), ("0.5", "0.5"), 2)
        assert members(maximal_feasible_sets(spec)) == [()]

    def test_no_feasible_strict_superset(self):
        rng = random.Random(13)
        for _ in range(20):
            spec = random_game(rng)
            feasible = set(members(feasible_sets(spec)))
            for s in maximal_feasible_sets(spec):
                chosen = set(s.members)
                supersets = [
                    f for f in feasible if chosen < set(f)
                ]
                assert not supersets

    def test_value_on_maximal_rows_equals_value_on_all_rows(self):
        rng = random.Random(14)
        specs = [random_game(rng, max_n=5) for _ in range(6)]
        specs.append(random_game(rng, max_n=8, max_time=4))
        for spec in specs:
            all_rows = feasible_sets(spec)
            some_rows = maximal_feasible_sets(spec)
            v_all = solve_zero_sum(build_matrix(spec, all_rows)).value
            v_max = solve_zero_sum(build_matrix(spec, some_rows)).value
            assert v_all == v_max


class TestPayoffMatrix:
    def test_example_reduced_matrix(self):
        rows = maximal_feasible_sets(EXAMPLE)
        matrix = build_matrix(EXAMPLE, rows)
        assert matrix.entries == (
            (F(1, 10), F(0), F(0), F(0)),
            (F(0), F(1, 5), F(3, 20), F(0)),
            (F(0), F(0), F(0), F(2, 5)),
        )

    def test_empty_row_is_all_zero(self):
        rows = [search_set(EXAMPLE, ())]
        matrix = build_matrix(EXAMPLE, rows)
        assert matrix.entries == ((F(0),) * 4,)

    def test_staircase_matrix(self):
        rows = maximal_feasible_sets(STAIR5)
        matrix = build_matrix(STAIR5, rows)
        by_members = dict(zip(members(rows), matrix.entries))
        assert by_members[(5,)] == (0, 0, 0, 0, F(1, 10))
        assert by_members[(1, 4)] == (F(1, 2), 0, 0, F(1, 5), 0)
        assert by_members[(2, 3)] == (0, F(2, 5), F(3, 10), 0, 0)
        assert by_members[(1, 3)] == (F(1, 2), 0, F(3, 10), 0, 0)
        assert by_members[(1, 2)] == (F(1, 2), F(2, 5), 0, 0, 0)

    def test_row_sums_match_member_captures(self):
        rng = random.Random(15)
        for _ in range(15):
            spec = random_game(rng)
            rows = maximal_feasible_sets(spec)
            matrix = build_matrix(spec, rows)
            for s, row in zip(rows, matrix.entries):
                assert sum(row) == sum(
                    (spec.captures[i - 1] for i in s.members), F(0)
                )

    def test_infeasible_row_rejected(self):
        too_big = search_set(EXAMPLE, (1, 4))
        with pytest.raises(ValueError):
            build_matrix(EXAMPLE, [too_big])


class TestBestResponse:
    def test_example_ties_break_lexicographically(self):
        h = HiderStrategy((F(12, 23), F(0), F(8, 23), F(3, 23)))
        best, value = best_response_value(EXAMPLE, h)
        assert value == F(6, 115)
        assert best.members == (1,)

    def test_point_mass_hider(self):
        h = HiderStrategy((1, 0, 0, 0))
        best, value = best_response_value(EXAMPLE, h)
        assert 1 in best
        assert value == F(1, 10)

    def test_staircase_equalizing_hider(self):
        h = HiderStrategy((0, 0, F(2, 11), F(3, 11), F(6, 11)))
        _, value = best_response_value(STAIR5, h)
        assert value == F(3, 55)

    def test_single_location_probe_lower_bound(self):
        rng = random.Random(16)
        for _ in range(10):
            spec = random_game(rng)
            weights = [F(rng.randint(0, 4)) for _ in range(spec.n)]
            total = sum(weights) or F(1)
            h = HiderStrategy(tuple(w / total if sum(weights) else
                                    F(1, spec.n) for w in weights))
            _, value = best_response_value(spec, h)
            for i in range(1, spec.n + 1):
                if spec.times[i - 1] <= spec.budget:
                    assert value >= h.probs[i - 1] * spec.captures[i - 1]

    def test_knapsack_benefits_vanish_exactly_off_support(self):
        h = HiderStrategy((F(1, 2), F(1, 2), 0, 0))
        inst = knapsack_instance(EXAMPLE, h)
        assert inst.capacity == EXAMPLE.budget
        assert inst.weights == EXAMPLE.times
        assert [b == 0 for b in inst.benefits] == [False, False, True, True]


class TestValidation:
    def test_bad_specs_rejected(self):
        with pytest.raises(ValueError):
            GameSpec((), (), 1)
        with pytest.raises(ValueError):
            GameSpec((1, 2), ("0.5",), 1)
        with pytest.raises(ValueError):
            GameSpec((0, 1), ("0.5", "0.5"), 1)
        with pytest.raises(ValueError):
            GameSpec((1, 1), ("0", "0.5"), 1)
        with pytest.raises(ValueError):
            GameSpec((1, 1), ("0.5", "1.5"), 1)
        with pytest.raises(ValueError):
            GameSpec((1, 1), ("0.5", "0.5"), -1)

    def test_hider_strategy_must_be_distribution(self):
        with pytest.raises(ValueError):
            HiderStrategy((F(1, 2), F(1, 3)))
        with pytest.raises(ValueError):
            HiderStrategy((F(3, 2), F(-1, 2)))

    def test_search_set_validates_indices(self):
        with pytest.raises(ValueError):
            search_set(EXAMPLE, (0,))
        with pytest.raises(ValueError):
            search_set(EXAMPLE, (5,))
        assert search_set(EXAMPLE, (3, 2)).members == (2, 3)
