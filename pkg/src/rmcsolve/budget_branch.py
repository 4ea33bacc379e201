"""Fixed-parameter branching for ConRMC in the combined parameter d + k.

The search pivots on row 1: while its budget is positive it branches on the
columns where some row ``i`` would be violated by extending row 1, each step
either spending one unit of row 1's budget or consuming one of its
wildcards. Once row 1's budget is zero the row is forced and the remaining
wildcard columns are handed to the column search.
"""

from __future__ import annotations

from typing import Sequence

from .column_search import search_columns
from .model import (WILDCARD, ConRmcInstance, Row, SearchStats, SolveOutcome,
                    Verdict, normalize)


def branch_on_budget(rows: Sequence[Row], l: int, budgets: Sequence[int],
                     stats: SearchStats) -> list[int] | None:
    n = len(rows)
    if n == 0:
        stats.visit(0)
        return [0] * l
    first = rows[0]
    alive = [True] * l
    fixed: dict[int, int] = {}

    def rec(budgets: list[int], depth: int) -> bool:
        if any(b < 0 for b in budgets):
            stats.visit(depth)
            return False
        live = [j for j in range(l) if alive[j]]

        if budgets[0] == 0:
            # this node is the root of the column search below it
            cols = [j for j in live if first[j] == WILDCARD]
            sub_rows = [tuple(r[j] for j in cols) for r in rows[1:]]
            sub_budgets = [
                b - sum(1 for j in live
                        if first[j] != WILDCARD and r[j] != WILDCARD and r[j] != first[j])
                for r, b in zip(rows[1:], budgets[1:])
            ]
            sub = search_columns(sub_rows, len(cols), sub_budgets, stats, depth)
            if sub is None:
                return False
            for j in live:
                if first[j] != WILDCARD:
                    fixed[j] = first[j]
            fixed.update(zip(cols, sub))
            return True

        stats.visit(depth)
        for i in range(1, n):
            row = rows[i]
            r_i = [j for j in live if row[j] != WILDCARD and row[j] != first[j]]
            if len(r_i) > budgets[i]:
                break
        else:
            for j in live:
                fixed[j] = first[j] if first[j] != WILDCARD else 0
            return True

        picks = r_i[:budgets[i] + 1]
        stats.branch(len(picks))
        for j in picks:
            sym = row[j]
            child = [b - (r[j] != WILDCARD and r[j] != sym) for r, b in zip(rows, budgets)]
            alive[j] = False
            fixed[j] = sym
            if rec(child, depth + 1):
                return True
            del fixed[j]
            alive[j] = True
        return False

    if not rec(list(budgets), 0):
        return None
    return [fixed[j] for j in range(l)]


def solve_conrmc_dk(inst: ConRmcInstance, rotate: bool = False) -> SolveOutcome:
    """Decide ``inst``; with ``rotate`` a row with the most wildcards acts as row 1."""
    stats = SearchStats()
    norm = normalize(inst)
    if norm.verdict is Verdict.NO:
        return SolveOutcome(False, stats=stats, algorithm="budget")
    red = norm.instance
    rows = list(red.matrix.rows)
    budgets = list(red.budgets)
    if rotate and rows:
        counts = [r.count(WILDCARD) for r in rows]
        top = counts.index(max(counts))
        rows.insert(0, rows.pop(top))
        budgets.insert(0, budgets.pop(top))
    witness = branch_on_budget(rows, red.l, budgets, stats)
    if witness is None:
        return SolveOutcome(False, stats=stats, algorithm="budget")
    return SolveOutcome(True, norm.expand(witness), stats, "budget")
