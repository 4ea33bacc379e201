import random

from fuzzing import RUNNING_EXAMPLE, corpus, digits, matrix, random_instance
from rmcsolve import (ConRmcInstance, IncompleteMatrix, brute_conrmc, solve_conrmc_alg1,
                      verify_witness)


def test_running_example_radius_two():
    m = matrix(*RUNNING_EXAMPLE)
    inst = ConRmcInstance.uniform(m, 2)
    res = solve_conrmc_alg1(inst)
    assert res.yes
    assert verify_witness(inst, res.witness) is None
    # a known center, not the one the solver picks
    center = tuple(m.alphabet.id_of(t) for t in "− β 4.2 > 1".split())
    assert verify_witness(inst, center) is None


def test_counterexample():
    inst = ConRmcInstance.uniform(digits("011", "111", "*00"), 2)
    res = solve_conrmc_alg1(inst)
    assert res.yes and verify_witness(inst, res.witness) is None


def test_single_row_fills_first_symbol():
    m = IncompleteMatrix.from_tokens([["a", "*", "b"]])
    res = solve_conrmc_alg1(ConRmcInstance(m, (0,)))
    assert res.yes
    assert m.alphabet.render(res.witness) == "a a b"


def test_negative_budget():
    assert not solve_conrmc_alg1(ConRmcInstance(digits("01"), (-1,))).yes


def test_zero_columns():
    m = IncompleteMatrix.from_rows([(), ()], digits("0").alphabet, 0)
    res = solve_conrmc_alg1(ConRmcInstance(m, (0, 0)))
    assert res.yes and res.witness == ()


def test_agrees_with_oracle_and_tree_shape():
    for inst, truth in corpus():
        res = solve_conrmc_alg1(inst)
        assert res.yes == truth.yes
        if res.yes:
            assert verify_witness(inst, res.witness) is None
        assert res.stats.max_children <= inst.d + 1
        assert res.stats.max_depth <= inst.l


def test_monotone_in_budgets():
    rng = random.Random(3)
    for seed in range(300):
        inst = random_instance(seed, n_max=5, l_max=6)
        if not solve_conrmc_alg1(inst).yes:
            continue
        looser = ConRmcInstance(inst.matrix, [b + rng.randint(0, 2) for b in inst.budgets])
        assert solve_conrmc_alg1(looser).yes


def test_no_instances_stay_no_when_tightened():
    for seed in range(300):
        inst = random_instance(seed, n_max=5, l_max=6)
        if solve_conrmc_alg1(inst).yes:
            continue
        tighter = ConRmcInstance(inst.matrix, [max(b - 1, 0) for b in inst.budgets])
        assert not solve_conrmc_alg1(tighter).yes
        assert not brute_conrmc(tighter).yes
