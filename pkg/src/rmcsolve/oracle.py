"""Exhaustive reference deciders. Deliberately naive."""

from __future__ import annotations

import itertools
import os

from .model import (WILDCARD, ConRmcInstance, IncompleteMatrix, NsdInstance,
                    SearchStats, SolveOutcome, hamming)

DEFAULT_BUDGET = 10**7
BUDGET_ENV = "RMCSOLVE_ORACLE_BUDGET"


class OracleBudgetExceeded(RuntimeError):
    """The enumeration space is larger than the oracle is allowed to walk."""


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{BUDGET_ENV} must be positive")
    return value


def brute_conrmc(inst: ConRmcInstance | NsdInstance, budget: int | None = None) -> SolveOutcome:
    """Try every ``v ∈ Σ^l`` in lexicographic order."""
    budget = default_budget() if budget is None else budget
    sigma, l = inst.alphabet.size, inst.l
    if sigma ** l > budget:
        raise OracleBudgetExceeded(f"|Σ|^l = {sigma}^{l} exceeds oracle budget {budget}")
    stats = SearchStats()
    pairs = list(zip(inst.matrix.rows, inst.budgets))
    for v in itertools.product(range(sigma), repeat=l):
        stats.nodes += 1
        if all(hamming(v, row) <= d for row, d in pairs):
            return SolveOutcome(True, v, stats, "oracle")
    return SolveOutcome(False, stats=stats, algorithm="oracle")


def brute_minlrmc(matrix: IncompleteMatrix, d: int, budget: int | None = None) -> SolveOutcome:
    """Try every completion of every row as the center."""
    budget = default_budget() if budget is None else budget
    sigma = matrix.alphabet.size
    k = max(matrix.wildcard_counts(), default=0)
    if sigma ** k > budget:
        raise OracleBudgetExceeded(f"|Σ|^k = {sigma}^{k} exceeds oracle budget {budget}")
    stats = SearchStats()
    for i, row in enumerate(matrix.rows):
        holes = [j for j, c in enumerate(row) if c == WILDCARD]
        for fill in itertools.product(range(sigma), repeat=len(holes)):
            stats.nodes += 1
            center = list(row)
            for j, s in zip(holes, fill):
                center[j] = s
            if all(hamming(center, other) <= d for other in matrix.rows):
                return SolveOutcome(True, tuple(center), stats, "oracle", pivot=i)
    return SolveOutcome(False, stats=stats, algorithm="oracle")
