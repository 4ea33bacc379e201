import itertools

import pytest

from fuzzing import RUNNING_EXAMPLE, corpus, digits, matrix, random_instance
from rmcsolve import (ConRmcInstance, IncompleteMatrix, brute_conrmc, hamming,
                      solve_conrmc_alg1, solve_conrmc_dk, verify_witness)
from rmcsolve.budget_branch import branch_on_budget
from rmcsolve.model import SearchStats


def test_counterexample_is_yes():
    inst = ConRmcInstance.uniform(digits("011", "111", "*00"), 2)
    res = solve_conrmc_dk(inst)
    assert res.yes and verify_witness(inst, res.witness) is None


@pytest.mark.parametrize("order", list(itertools.permutations(range(3))))
@pytest.mark.parametrize("rotate", [False, True])
def test_counterexample_any_pivot(order, rotate):
    # the flawed procedure pivoted on the row with the wildcard; any pivot works here
    rows = ["011", "111", "*00"]
    inst = ConRmcInstance.uniform(digits(*(rows[i] for i in order), alphabet="01"), 2)
    res = solve_conrmc_dk(inst, rotate=rotate)
    assert res.yes and verify_witness(inst, res.witness) is None


def test_counterexample_raw_search_pivot_on_wildcard_row():
    # no normalization: row "*00" as row 1 directly
    m = digits("*00", "011", "111")
    stats = SearchStats()
    w = branch_on_budget(m.rows, 3, [2, 2, 2], stats)
    assert w is not None
    assert all(hamming(w, r) <= 2 for r in m.rows)


def test_running_example_radius_one():
    inst = ConRmcInstance.uniform(matrix(*RUNNING_EXAMPLE), 1)
    assert not brute_conrmc(inst).yes
    assert not solve_conrmc_dk(inst).yes


def test_forced_first_row():
    m = digits("0110", "1110", "0*00", "*1*1")
    for budgets in itertools.product(range(3), repeat=3):
        inst = ConRmcInstance(m, (0,) + budgets)
        expected = all(hamming(m.rows[0], r) <= b for r, b in zip(m.rows[1:], budgets))
        res = solve_conrmc_dk(inst)
        assert res.yes == expected
        if res.yes:
            assert res.witness == m.rows[0]


def test_agrees_with_oracle_and_column_search():
    for inst, truth in corpus():
        res = solve_conrmc_dk(inst)
        assert res.yes == truth.yes == solve_conrmc_alg1(inst).yes
        if res.yes:
            assert verify_witness(inst, res.witness) is None
        assert res.stats.max_depth <= inst.d + inst.k
        assert res.stats.max_children <= inst.d + 1


def test_rotation_does_not_change_decision():
    for inst, truth in corpus()[:300]:
        res = solve_conrmc_dk(inst, rotate=True)
        assert res.yes == truth.yes
        if res.yes:
            assert verify_witness(inst, res.witness) is None


def test_raw_search_depth_measure():
    # without normalization the measure d1 + |P_*(row 1)| bounds the depth
    for seed in range(500):
        inst = random_instance(seed)
        stats = SearchStats()
        w = branch_on_budget(inst.matrix.rows, inst.l, list(inst.budgets), stats)
        assert (w is not None) == brute_conrmc(inst).yes, seed
        first = inst.matrix.rows[0]
        assert stats.max_depth <= inst.budgets[0] + first.count(-1)
        assert stats.max_children <= inst.d + 1


def test_empty_matrix():
    m = IncompleteMatrix.from_rows([], digits("0").alphabet, 3)
    res = solve_conrmc_dk(ConRmcInstance(m, ()))
    assert res.yes and res.witness == (0, 0, 0)
