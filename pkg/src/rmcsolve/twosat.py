"""ConRMC with budgets at most one, via a linear-size 2-SAT encoding.

Literals are DIMACS-style signed integers: variable ``v`` (1-based) appears
as ``v`` or ``-v``. Column/symbol variables ``x[j, σ]`` come first, numbered
``j * |Σ| + σ + 1``; sequential-counter auxiliaries follow in allocation order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .model import (WILDCARD, ConRmcInstance, SearchStats, SolveOutcome,
                    UsageError)

Clause = tuple[int, ...]


class VarPool:
    """Hands out fresh variable numbers after a fixed prefix."""

    def __init__(self, reserved: int = 0):
        self.count = reserved

    def new(self) -> int:
        self.count += 1
        return self.count


@dataclass
class TwoCnf:
    num_vars: int
    clauses: list[Clause] = field(default_factory=list)

    def __post_init__(self):
        for c in self.clauses:
            if not 1 <= len(c) <= 2:
                raise UsageError(f"2-CNF clause must hold 1 or 2 literals: {c}")
            if any(lit == 0 or abs(lit) > self.num_vars for lit in c):
                raise UsageError(f"literal out of range in clause {c}")

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        lines += [" ".join(map(str, c)) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"


def at_most_one(lits: Sequence[int], pool: VarPool) -> list[Clause]:
    """Sinz sequential encoding: ``3m - 4`` clauses over ``m - 1`` fresh variables."""
    m = len(lits)
    if m < 2:
        return []
    r = [pool.new() for _ in range(m - 1)]
    clauses = [(-lits[0], r[0]), (-lits[-1], -r[-1])]
    for j in range(1, m - 1):
        clauses.append((-lits[j], -r[j - 1]))
        clauses.append((-lits[j], r[j]))
        clauses.append((-r[j - 1], r[j]))
    return clauses


def _node(lit: int) -> int:
    return 2 * (abs(lit) - 1) + (lit < 0)


def solve_two_sat(f: TwoCnf) -> tuple[bool, ...] | None:
    """Implication graph + Tarjan SCC. Returns one truth value per variable,
    or ``None`` if the formula is unsatisfiable. A unit clause ``(l)`` is
    read as ``(l ∨ l)``."""
    size = 2 * f.num_vars
    adj: list[list[int]] = [[] for _ in range(size)]
    for clause in f.clauses:
        a, b = clause if len(clause) == 2 else (clause[0], clause[0])
        adj[_node(-a)].append(_node(b))
        adj[_node(-b)].append(_node(a))

    index = [-1] * size
    low = [0] * size
    on_stack = [False] * size
    comp = [-1] * size
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for s in range(size):
        if index[s] != -1:
            continue
        index[s] = low[s] = counter
        counter += 1
        stack.append(s)
        on_stack[s] = True
        work = [(s, 0)]
        while work:
            v, i = work[-1]
            if i < len(adj[v]):
                work[-1] = (v, i + 1)
                w = adj[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1

    values = []
    for var in range(f.num_vars):
        pos, neg = comp[2 * var], comp[2 * var + 1]
        if pos == neg:
            return None
        # Tarjan emits components sinks-first
        values.append(pos < neg)
    return tuple(values)


def _active_rows(inst: ConRmcInstance):
    for row, d in zip(inst.matrix.rows, inst.budgets):
        filled = inst.l - row.count(WILDCARD)
        if filled <= d:
            continue
        if d not in (0, 1):
            raise UsageError(f"2-SAT route needs budgets in {{0, 1}}, got {d}")
        yield row, d


def encode_conrmc_d1(inst: ConRmcInstance) -> TwoCnf:
    """Build φ1 ∧ φ2 ∧ φ3 for an instance whose non-trivial budgets are 0 or 1."""
    sigma = inst.alphabet.size
    l = inst.l
    pool = VarPool(sigma * l)

    def x(j: int, s: int) -> int:
        return j * sigma + s + 1

    rows = list(_active_rows(inst))
    clauses: list[Clause] = []
    for j in range(l):
        clauses += at_most_one([x(j, s) for s in range(sigma)], pool)
    for row, d in rows:
        if d == 0:
            clauses += [(x(j, c),) for j, c in enumerate(row) if c != WILDCARD]
    for row, d in rows:
        if d == 1:
            clauses += at_most_one([-x(j, c) for j, c in enumerate(row) if c != WILDCARD], pool)
    return TwoCnf(pool.count, clauses)


def solve_conrmc_d1(inst: ConRmcInstance) -> SolveOutcome:
    stats = SearchStats()
    stats.visit(0)
    if any(b < 0 for b in inst.budgets):
        return SolveOutcome(False, stats=stats, algorithm="twosat")
    formula = encode_conrmc_d1(inst)
    assignment = solve_two_sat(formula)
    if assignment is None:
        return SolveOutcome(False, stats=stats, algorithm="twosat")
    sigma = inst.alphabet.size
    witness = []
    for j in range(inst.l):
        chosen = [s for s in range(sigma) if assignment[j * sigma + s]]
        # columns with no true variable take the first symbol
        witness.append(chosen[0] if chosen else 0)
    return SolveOutcome(True, tuple(witness), stats, "twosat")
