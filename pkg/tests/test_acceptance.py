"""Acceptance gate: one PASS/FAIL line per criterion in the terminal summary."""

import itertools
import random
import time

from fuzzing import COUNTEREXAMPLE, RUNNING_EXAMPLE, corpus, digits, matrix, random_instance
from rmcsolve import (DUMMY, WILDCARD, AlgorithmChoice, Alphabet, ConRmcInstance,
                      DummyMatrix, IncompleteMatrix, MinLrmcMode, NsdInstance, UsageError,
                      at_most_one, brute_conrmc, brute_minlrmc, conrmc_via_nsd,
                      encode_conrmc_d1, hamming, mismatch_set, ms_neighboring, pad_to_nsd,
                      solve_binary_high, solve_conrmc, solve_conrmc_alg1, solve_conrmc_dk,
                      solve_minlrmc, solve_minrmc, verify_witness)
from rmcsolve.twosat import VarPool

A = AlgorithmChoice


def test_running_example_regression(criterion):
    with criterion(1, "running example: MinRMC d=2 Yes, d=1 No; MinLRMC d=3 Yes, d=2 No"):
        m = matrix(*RUNNING_EXAMPLE)
        start = time.perf_counter()
        yes = solve_minrmc(m, 2)
        no = solve_minrmc(m, 1)
        local = {mode: (solve_minlrmc(m, 3, mode), solve_minlrmc(m, 2, mode))
                 for mode in MinLrmcMode}
        elapsed = time.perf_counter() - start
        assert yes.yes and not no.yes
        assert verify_witness(ConRmcInstance.uniform(m, 2), yes.witness) is None
        for local_yes, local_no in local.values():
            assert local_yes.yes and not local_no.yes
            assert verify_witness(ConRmcInstance.uniform(m, 3), local_yes.witness) is None
            pivot = m.rows[local_yes.pivot]
            assert all(c == WILDCARD or c == w for c, w in zip(pivot, local_yes.witness))
        # the No cases, independently
        assert not brute_conrmc(ConRmcInstance.uniform(m, 1)).yes
        assert not brute_minlrmc(m, 2).yes
        assert elapsed < 1.0


def test_wildcard_pivot_counterexample(criterion):
    with criterion(2, "counterexample [[0,1,1],[1,1,1],[*,0,0]] d=2 is Yes on every route"):
        inst = ConRmcInstance.uniform(digits(*COUNTEREXAMPLE, alphabet="01"), 2)
        start = time.perf_counter()
        outcomes = [solve_conrmc(inst, choice)
                    for choice in (A.COLUMN, A.BUDGET, A.NSD, A.ORACLE)]
        outcomes += [solve_conrmc_alg1(inst), solve_conrmc_dk(inst), conrmc_via_nsd(inst)]
        elapsed = time.perf_counter() - start
        for res in outcomes:
            assert res.yes
            assert all(hamming(res.witness, row) <= 2 for row in inst.matrix.rows)
        assert elapsed < 1.0


def test_differential_fuzzing(criterion):
    with criterion(3, "1000 fuzzed instances: every route and both MinLRMC modes match the oracle"):
        start = time.perf_counter()
        disagreements = []
        instances = corpus()
        assert len(instances) >= 1000
        for seed, (inst, truth) in enumerate(instances):
            assert inst.n <= 6 and inst.l <= 8 and inst.alphabet.size in (2, 3)
            assert inst.d <= 4 and inst.k <= 3
            for choice in A:
                try:
                    res = solve_conrmc(inst, choice)
                except UsageError:
                    continue
                if res.yes != truth.yes or (
                        res.yes and verify_witness(inst, res.witness) is not None):
                    disagreements.append((seed, choice.value))
            local_truth = brute_minlrmc(inst.matrix, inst.d).yes
            for mode in MinLrmcMode:
                if solve_minlrmc(inst.matrix, inst.d, mode).yes != local_truth:
                    disagreements.append((seed, mode.value))
        assert disagreements == []
        assert time.perf_counter() - start < 300


def test_structural_bounds(criterion):
    with criterion(4, "search trees: branching <= d+1, depth <= l and <= d+k, halving budgets"):
        for inst, _ in corpus():
            col = solve_conrmc_alg1(inst)
            assert col.stats.max_children <= inst.d + 1
            assert col.stats.max_depth <= inst.l
            bud = solve_conrmc_dk(inst)
            assert bud.stats.max_children <= inst.d + 1
            assert bud.stats.max_depth <= inst.d + inst.k
            for root, depth, budget in conrmc_via_nsd(inst).stats.halving_trace:
                assert budget < root / 2**depth + 1
        # a direct run on complete instances, where the halving trace is deepest
        rng = random.Random(44)
        for _ in range(500):
            l = rng.randint(2, 9)
            rows = [tuple(rng.randrange(2) for _ in range(l)) for _ in range(rng.randint(2, 5))]
            inst = NsdInstance(DummyMatrix.from_rows(rows, Alphabet.of("01")),
                               [rng.randint(0, l) for _ in rows])
            for root, depth, budget in ms_neighboring(inst).stats.halving_trace:
                assert budget < root / 2**depth + 1


def test_sequential_at_most_one(criterion):
    with criterion(5, "at-most-one encoding exact for m <= 6; d=1 formula <= 4(n+|Σ|)l clauses"):
        for m in range(7):
            pool = VarPool(m)
            clauses = at_most_one(list(range(1, m + 1)), pool)
            aux = pool.count - m
            for inputs in itertools.product((False, True), repeat=m):
                extends = False
                for rest in itertools.product((False, True), repeat=aux):
                    values = (None,) + inputs + rest
                    if all(any(values[abs(x)] == (x > 0) for x in c) for c in clauses):
                        extends = True
                        break
                assert extends == (sum(inputs) <= 1)
        worst = 0.0
        for seed in range(1000):
            inst = random_instance(seed, n_max=12, l_max=12, sigmas=(2, 3, 4, 5), d_max=1)
            f = encode_conrmc_d1(inst)
            worst = max(worst, len(f.clauses) / ((inst.n + inst.alphabet.size) * inst.l))
        print(f"measured clause constant c = {worst:.3f}")
        assert worst <= 4


def _halving_holds(u, v, w):
    q = mismatch_set(u, w)
    rest = [j for j in range(len(u)) if j not in q]
    sub = lambda x: [x[j] for j in rest]
    return hamming(sub(u), sub(v)) < hamming(u, v) / 2


def test_halving_inequality(criterion):
    with criterion(6, "halving inequality: 10^4 dummy triples hold, wildcard triple breaks it"):
        rng = random.Random(66)
        checked = 0
        while checked < 10**4:
            l = rng.randint(1, 12)
            sigma = rng.randint(2, 4)
            cell = lambda: DUMMY if rng.random() < 0.25 else rng.randrange(sigma)
            u = [cell() for _ in range(l)]
            w = [cell() for _ in range(l)]
            v = [rng.randrange(sigma) for _ in range(l)]
            if hamming(u, w) <= hamming(v, w):
                continue
            assert _halving_holds(u, v, w), (u, v, w)
            checked += 1
        l = 6
        u, v, w = (0,) * l, (1,) * l, (WILDCARD,) * l
        assert mismatch_set(u, w) == set()
        assert hamming(u, v) == l
        assert not _halving_holds(u, v, w)
        # off Q, u and w should look identical to v; the wildcard row hides that
        assert hamming(u, v) == 6 and hamming(v, w) == 0


def test_binary_fast_path(criterion):
    with criterion(7, "binary fast path matches the oracle on 10^4 cases and scales linearly"):
        rng = random.Random(77)
        alpha = Alphabet.of("01")
        for _ in range(10**4):
            l = rng.randint(1, 4)
            n = rng.randint(1, 16)
            rows = [tuple(WILDCARD if rng.random() < 0.15 else rng.randrange(2)
                          for _ in range(l)) for _ in range(n)]
            budgets = [rng.choice((l - 1, l)) for _ in range(n)]
            inst = ConRmcInstance(IncompleteMatrix.from_rows(rows, alpha, l), budgets)
            res = solve_binary_high(inst)
            assert res.yes == brute_conrmc(inst).yes
            if res.yes:
                assert verify_witness(inst, res.witness) is None

        l = 18
        pool = [tuple(rng.randrange(2) for _ in range(l)) for _ in range(1 << 15)]

        def build(n):
            rows = [pool[rng.randrange(len(pool))] for _ in range(n)]
            return ConRmcInstance.uniform(IncompleteMatrix.from_rows(rows, alpha, l), l - 1)

        def best_time(inst):
            times = []
            for _ in range(3):
                start = time.perf_counter()
                solve_binary_high(inst)
                times.append(time.perf_counter() - start)
            return min(times)

        small, large = build(500_000), build(1_000_000)
        ratio = best_time(large) / best_time(small)
        print(f"runtime ratio for doubled n: {ratio:.2f}")
        assert ratio <= 3


def test_nsd_reduction_equivalence(criterion):
    with criterion(8, "500 instances: padded dummy instance has the same answer, witnesses verify"):
        for seed in range(500):
            inst = random_instance(10_000 + seed, n_max=5, l_max=6, k_max=2)
            padded = pad_to_nsd(inst)
            assert padded.l == inst.l + inst.k
            truth = brute_conrmc(inst)
            assert brute_conrmc(padded).yes == truth.yes, seed
            res = conrmc_via_nsd(inst)
            assert res.yes == truth.yes
            if res.yes:
                assert len(res.witness) == inst.l
                assert verify_witness(inst, res.witness) is None
