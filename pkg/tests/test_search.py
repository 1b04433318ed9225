from itertools import combinations
from random import Random

import pytest

from ekrcheck import (
    SearchBudget,
    cartesian_product,
    complete_graph,
    cycle_graph,
    empty_graph,
    enumerate_independent,
    enumerate_placements,
    graph_ekr_report,
    holroyd_talbot_sweep,
    is_intersecting,
    lex_product_check,
    max_intersecting_family,
    path_graph,
    rook_ekr_report,
    rook_star_count,
    star_family,
    Family,
    SimpleGraph,
)
from ekrcheck.errors import InputError, ResourceLimitError
from helpers import brute_force_max_intersecting


def brute_lex_min_max_family(sets):
    unique = sorted(set(sets))
    for size in range(len(unique), 0, -1):
        best = None
        for combo in combinations(unique, size):
            if all(set(a) & set(b) for a, b in combinations(combo, 2)):
                if best is None or combo < best:
                    best = combo
        if best is not None:
            return best
    return ()


class TestMaxIntersectingFamily:
    def test_rook_four_by_four(self):
        size, witness = max_intersecting_family(enumerate_placements(4, 4, 2))
        assert size == 9
        assert len(witness) == 9

    def test_classic_five_choose_two(self):
        size, _ = max_intersecting_family(enumerate_independent(empty_graph(5), 2))
        assert size == 4

    def test_two_disjoint_sets(self):
        size, witness = max_intersecting_family([((1, 1), (2, 2)), ((3, 3), (4, 4))])
        assert size == 1
        assert witness == (((1, 1), (2, 2)),)

    def test_empty_input(self):
        assert max_intersecting_family([]) == (0, ())

    def test_agrees_with_subfamily_scan(self):
        rng = Random(20240)
        for _ in range(30):
            n, m = rng.randint(2, 5), rng.randint(2, 5)
            r = rng.randint(1, min(n, m))
            pool = enumerate_placements(n, m, r)
            sample = rng.sample(pool, rng.randint(1, min(len(pool), 14)))
            size, witness = max_intersecting_family(sample)
            assert size == brute_force_max_intersecting(sample)
            assert len(witness) == size

    def test_witness_is_lexicographically_smallest(self):
        rng = Random(99)
        for _ in range(20):
            pool = enumerate_placements(3, 4, 2)
            sample = rng.sample(pool, rng.randint(1, 9))
            _, witness = max_intersecting_family(sample)
            assert witness == brute_lex_min_max_family(sample)

    def test_never_below_the_best_star(self):
        pool = enumerate_placements(5, 5, 2)
        size, _ = max_intersecting_family(pool)
        assert size >= rook_star_count(5, 5, 2)

    def test_deterministic_across_input_orderings(self):
        pool = enumerate_placements(4, 4, 2)
        expected = max_intersecting_family(pool)
        shuffled = pool[:]
        Random(5).shuffle(shuffled)
        assert max_intersecting_family(shuffled) == expected

    def test_node_budget_reports_bounds(self):
        with pytest.raises(ResourceLimitError) as info:
            max_intersecting_family(
                enumerate_placements(4, 4, 2), SearchBudget(max_nodes=1)
            )
        assert info.value.lower_bound >= 9
        assert info.value.upper_bound >= info.value.lower_bound

    def test_time_budget(self):
        with pytest.raises(ResourceLimitError):
            max_intersecting_family(
                enumerate_placements(6, 6, 3), SearchBudget(max_seconds=0.0)
            )


class TestRookVerdicts:
    def test_four_by_four(self):
        report = rook_ekr_report(4, 4, 2)
        assert report.max_intersecting == 9
        assert report.best_star == 9
        assert report.verdict == "EKR_HOLDS"
        assert is_intersecting(Family(4, 4, 2, report.witness))

    def test_singleton_case(self):
        report = rook_ekr_report(5, 7, 1)
        assert report.max_intersecting == report.best_star == 1
        assert report.verdict == "EKR_HOLDS"

    def test_out_of_range_is_qualified(self):
        report = rook_ekr_report(2, 3, 2)
        assert report.verdict == "OUT_OF_THEOREM_RANGE_HOLDS"
        assert not report.in_theorem_range
        assert report.holds

    def test_maximum_equals_star_throughout_the_half_range(self):
        for n in range(2, 6):
            for m in range(n, 6):
                for r in range(1, min(n, m) // 2 + 1):
                    report = rook_ekr_report(n, m, r)
                    assert report.max_intersecting == rook_star_count(n, m, r)
                    assert report.verdict == "EKR_HOLDS"

    def test_r_out_of_grid_rejected(self):
        with pytest.raises(InputError):
            rook_ekr_report(3, 3, 4)


class TestGraphVerdicts:
    def test_classic_ekr_on_empty_graph(self):
        report = graph_ekr_report(empty_graph(5), 2)
        assert report.max_intersecting == report.best_star == 4
        assert report.verdict == "EKR_HOLDS"

    def test_four_cycle_singletons(self):
        report = graph_ekr_report(cycle_graph(4), 1)
        assert report.max_intersecting == report.best_star == 1
        assert report.verdict == "EKR_HOLDS"

    def test_rook_grid_r_one(self):
        g = cartesian_product(complete_graph(3), complete_graph(3))
        assert graph_ekr_report(g, 1).verdict == "EKR_HOLDS"

    def test_out_of_range_failure_is_detected(self):
        # all 3-subsets of a 4-set pairwise intersect, beating every star
        report = graph_ekr_report(empty_graph(4), 3)
        assert report.max_intersecting == 4
        assert report.best_star == 3
        assert report.verdict == "OUT_OF_THEOREM_RANGE_FAILS"


class TestHolroydTalbotSweep:
    def test_claw_has_empty_range(self):
        claw = SimpleGraph(4, [(1, 2), (1, 3), (1, 4)])
        assert holroyd_talbot_sweep(claw) == []

    def test_rook_four_by_four(self):
        g = cartesian_product(complete_graph(4), complete_graph(4))
        reports = holroyd_talbot_sweep(g)
        assert [report.parameters["r"] for report in reports] == [1, 2]
        assert all(report.verdict == "EKR_HOLDS" for report in reports)

    def test_four_cycle(self):
        reports = holroyd_talbot_sweep(cycle_graph(4))
        assert len(reports) == 1
        assert reports[0].verdict == "EKR_HOLDS"


class TestLexProductCheck:
    def test_two_disjoint_edges(self):
        outcome = lex_product_check(empty_graph(2), 2, 1)
        assert outcome.premise.holds and outcome.conclusion.holds
        assert not outcome.violation

    def test_four_disjoint_edges(self):
        outcome = lex_product_check(empty_graph(4), 2, 2)
        assert outcome.premise.holds
        assert outcome.conclusion.holds
        assert outcome.conclusion.best_star == 6

    def test_k_one_reproduces_the_graph(self):
        outcome = lex_product_check(path_graph(4), 1, 1)
        assert outcome.premise.max_intersecting == outcome.conclusion.max_intersecting
        assert outcome.premise.best_star == outcome.conclusion.best_star

    def test_witness_certificates(self):
        outcome = lex_product_check(empty_graph(3), 2, 1)
        for report in (outcome.premise, outcome.conclusion):
            assert len(report.witness) == report.max_intersecting
