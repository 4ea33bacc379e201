"""(d+1)-way column-branching search for ConRMC, bounded by the column count."""

from __future__ import annotations

from typing import Sequence

from .model import WILDCARD, ConRmcInstance, Row, SearchStats, SolveOutcome


def search_columns(rows: Sequence[Row], l: int, budgets: Sequence[int],
                   stats: SearchStats, depth: int = 0) -> list[int] | None:
    """Decide the sub-instance ``(rows, budgets)`` and return a full witness.

    Columns are masked out in place rather than copied; ``depth`` offsets the
    recorded depth when this search hangs below another search tree.
    """
    n = len(rows)
    alive = [True] * l
    filled = [l - row.count(WILDCARD) for row in rows]
    fixed: dict[int, int] = {}

    def rec(budgets: list[int], depth: int) -> bool:
        stats.visit(depth)
        if any(b < 0 for b in budgets):
            return False
        i = next((i for i in range(n) if filled[i] > budgets[i]), None)
        if i is None:
            return True
        row = rows[i]
        picks = []
        for j in range(l):
            if alive[j] and row[j] != WILDCARD:
                picks.append(j)
                if len(picks) == budgets[i] + 1:
                    break
        stats.branch(len(picks))
        for j in picks:
            sym = row[j]
            child = [b - (r[j] != WILDCARD and r[j] != sym) for r, b in zip(rows, budgets)]
            alive[j] = False
            for t, r in enumerate(rows):
                if r[j] != WILDCARD:
                    filled[t] -= 1
            fixed[j] = sym
            if rec(child, depth + 1):
                return True
            del fixed[j]
            for t, r in enumerate(rows):
                if r[j] != WILDCARD:
                    filled[t] += 1
            alive[j] = True
        return False

    if not rec(list(budgets), depth):
        return None
    return [fixed.get(j, 0) for j in range(l)]


def solve_conrmc_alg1(inst: ConRmcInstance) -> SolveOutcome:
    stats = SearchStats()
    witness = search_columns(inst.matrix.rows, inst.l, inst.budgets, stats)
    if witness is None:
        return SolveOutcome(False, stats=stats, algorithm="column")
    return SolveOutcome(True, tuple(witness), stats, "column")
