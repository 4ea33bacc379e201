"""Neighboring String with Dummies (NSD) and the ConRMC -> NSD padding.

A dummy cell mismatches every alphabet symbol, so unlike a wildcard it keeps
the distance between the center and row 1 honest. That is what lets the
Ma-Sun search halve row 1's budget on every level: a solution closer to
the violating row than row 1 is must agree with row 1 on most of the columns
outside their disagreement set.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .model import (DUMMY, WILDCARD, ConRmcInstance, DummyMatrix, NsdInstance,
                    Row, SearchStats, SolveOutcome, UsageError, hamming)


def _slices(top: Sequence[int], other: Sequence[int], top_budget: int,
            other_budget: int, sigma: int) -> Iterator[tuple[list[int], int]]:
    """Yield ``(v, δ(v, top))`` for every ``v ∈ Σ^|Q|`` within both budgets.

    Candidates at each position try the violating row's symbol first, then
    row 1's, then the rest of Σ in order.
    """
    m = len(top)
    orders = []
    for a, b in zip(top, other):
        head = [b] if b != DUMMY else []
        if a not in head:
            head.append(a)
        orders.append(head + [s for s in range(sigma) if s not in head])
    v = [0] * m

    def rec(pos: int, c1: int, c2: int):
        if pos == m:
            yield list(v), c1
            return
        for s in orders[pos]:
            n1 = c1 + (s != top[pos])
            n2 = c2 + (s != other[pos])
            if n1 > top_budget or n2 > other_budget:
                continue
            v[pos] = s
            yield from rec(pos + 1, n1, n2)

    yield from rec(0, 0, 0)


def _ms(rows: list[Row], budgets: list[int], sigma: int, stats: SearchStats,
        root: int, depth: int) -> list[int] | None:
    stats.visit(depth)
    stats.halving_trace.append((root, depth, budgets[0]))
    if any(b < 0 for b in budgets):
        return None
    first = rows[0]
    l = len(first)
    for i in range(1, len(rows)):
        if hamming(first, rows[i]) > budgets[i]:
            break
    else:
        return list(first)

    target = rows[i]
    q = [j for j in range(l) if first[j] != target[j]]
    d1, di = budgets[0], budgets[i]
    if len(q) > d1 + di:
        return None
    rest = [j for j in range(l) if first[j] == target[j]]
    sub_rows = [tuple(r[j] for j in rest) for r in rows]
    q_rows = [[r[j] for j in q] for r in rows]
    half = (d1 + 1) // 2 - 1

    children = 0
    for v, c1 in _slices(q_rows[0], q_rows[i], d1, di, sigma):
        children += 1
        child = [min(d1 - c1, half)]
        child += [b - hamming(v, qr) for qr, b in zip(q_rows[1:], budgets[1:])]
        sub = _ms(sub_rows, child, sigma, stats, root, depth + 1)
        if sub is not None:
            stats.branch(children)
            out = [0] * l
            for j, s in zip(q, v):
                out[j] = s
            for j, s in zip(rest, sub):
                out[j] = s
            return out
    stats.branch(children)
    return None


def ms_neighboring(inst: NsdInstance, stats: SearchStats | None = None) -> SolveOutcome:
    """Ma-Sun search; row 1 must be dummy-free."""
    rows = list(inst.matrix.rows)
    stats = stats if stats is not None else SearchStats()
    if not rows:
        stats.visit(0)
        return SolveOutcome(True, (0,) * inst.l, stats, "nsd")
    if DUMMY in rows[0]:
        raise UsageError("row 1 of an NSD instance passed to the Ma-Sun search has a dummy")
    budgets = list(inst.budgets)
    w = _ms(rows, budgets, inst.alphabet.size, stats, budgets[0], 0)
    if w is None:
        return SolveOutcome(False, stats=stats, algorithm="nsd")
    return SolveOutcome(True, tuple(w), stats, "nsd")


def nsd_solve(inst: NsdInstance) -> SolveOutcome:
    stats = SearchStats()
    m = inst.matrix
    if m.n == 0:
        stats.visit(0)
        return SolveOutcome(True, (0,) * m.l, stats, "nsd")
    counts = m.dummy_counts()
    top = counts.index(min(counts))
    order = [top] + [i for i in range(m.n) if i != top]
    rows = [m.rows[i] for i in order]
    budgets = [inst.budgets[i] for i in order]

    k = counts[top]
    holes = [j for j in range(m.l) if rows[0][j] == DUMMY]
    keep = [j for j in range(m.l) if rows[0][j] != DUMMY]
    sub_rows = tuple(tuple(r[j] for j in keep) for r in rows)
    hole_rows = [[r[j] for j in holes] for r in rows]
    sigma = m.alphabet.size
    sub_matrix = DummyMatrix(sub_rows, m.alphabet, len(keep))

    for u in itertools.product(range(sigma), repeat=k):
        sub_budgets = [budgets[0] - k]
        sub_budgets += [b - hamming(u, hr) for hr, b in zip(hole_rows[1:], budgets[1:])]
        res = ms_neighboring(NsdInstance(sub_matrix, sub_budgets), stats)
        if res.yes:
            out = [0] * m.l
            for j, s in zip(holes, u):
                out[j] = s
            for j, s in zip(keep, res.witness):
                out[j] = s
            return SolveOutcome(True, tuple(out), stats, "nsd")
    return SolveOutcome(False, stats=stats, algorithm="nsd")


def pad_to_nsd(inst: ConRmcInstance) -> NsdInstance:
    """Replace wildcards by dummies and pad every row to exactly k dummies.

    Row ``i`` gets ``|P_*(S[i])|`` copies of the first symbol followed by
    dummies in the ``k`` padding columns; every budget grows by ``k``.
    """
    k = inst.k
    rows = []
    for row in inst.matrix.rows:
        w = row.count(WILDCARD)
        body = tuple(DUMMY if c == WILDCARD else c for c in row)
        rows.append(body + (0,) * w + (DUMMY,) * (k - w))
    matrix = DummyMatrix(tuple(rows), inst.alphabet, inst.l + k)
    return NsdInstance(matrix, tuple(b + k for b in inst.budgets))


def conrmc_via_nsd(inst: ConRmcInstance) -> SolveOutcome:
    res = nsd_solve(pad_to_nsd(inst))
    if not res.yes:
        return res
    return SolveOutcome(True, res.witness[:inst.l], res.stats, "nsd")
