"""Problem-level entry points, algorithm routing and witness checks."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .binary import solve_binary_high
from .budget_branch import solve_conrmc_dk
from .column_search import solve_conrmc_alg1
from .dummy import conrmc_via_nsd
from .model import (WILDCARD, ConRmcInstance, IncompleteMatrix, SearchStats,
                    SolveOutcome, UsageError, Verdict, hamming, normalize)
from .oracle import brute_conrmc
from .twosat import solve_conrmc_d1

SATURATION = 2**63 - 1


class AlgorithmChoice(str, enum.Enum):
    AUTO = "auto"
    TWOSAT = "twosat"
    COLUMN = "column"
    BUDGET = "budget"
    NSD = "nsd"
    BINARY = "binary"
    ORACLE = "oracle"


class MinLrmcMode(str, enum.Enum):
    PIVOT_FULL = "pivot-full"
    PIVOT_COLUMNS = "pivot-columns"


def _sat_pow(base: int, exp: int) -> int:
    if exp <= 0:
        return 1
    if base <= 1:
        return base
    if exp * math.log2(base) >= 63:
        return SATURATION
    return min(base**exp, SATURATION)


def _sat_mul(*factors: int) -> int:
    out = 1
    for f in factors:
        if f == 0:
            return 0
        out = min(out * f, SATURATION)
    return out


@dataclass(frozen=True)
class CostEstimate:
    """Predicted search-tree sizes times ``n``, saturating at ``2**63 - 1``."""

    column: int
    budget: int
    nsd: int

    @classmethod
    def of(cls, inst: ConRmcInstance) -> CostEstimate:
        n, l, d, k = inst.n, inst.l, inst.d, inst.k
        sigma = inst.alphabet.size
        return cls(
            column=_sat_mul(_sat_pow(d + 1, l), n),
            budget=_sat_mul(_sat_pow(d + 1, d + k + 1), n),
            nsd=_sat_mul(_sat_pow(2, 4 * d + k), _sat_pow(sigma, d + k), n),
        )

    def winner(self) -> AlgorithmChoice:
        # min() keeps the first of equal costs: budget, column, nsd
        ranked = [(self.budget, AlgorithmChoice.BUDGET),
                  (self.column, AlgorithmChoice.COLUMN),
                  (self.nsd, AlgorithmChoice.NSD)]
        return min(ranked, key=lambda pair: pair[0])[1]


def applicable(choice: AlgorithmChoice, inst: ConRmcInstance) -> bool:
    if choice is AlgorithmChoice.TWOSAT:
        return inst.d <= 1
    if choice is AlgorithmChoice.BINARY:
        return inst.alphabet.size == 2 and all(b >= inst.l - 1 for b in inst.budgets)
    return True


def route(inst: ConRmcInstance) -> AlgorithmChoice:
    for choice in (AlgorithmChoice.TWOSAT, AlgorithmChoice.BINARY):
        if applicable(choice, inst):
            return choice
    return CostEstimate.of(inst).winner()


_RUNNERS = {
    AlgorithmChoice.TWOSAT: solve_conrmc_d1,
    AlgorithmChoice.COLUMN: solve_conrmc_alg1,
    AlgorithmChoice.BUDGET: solve_conrmc_dk,
    AlgorithmChoice.NSD: conrmc_via_nsd,
    AlgorithmChoice.BINARY: solve_binary_high,
    AlgorithmChoice.ORACLE: brute_conrmc,
}


def solve_conrmc(inst: ConRmcInstance,
                 choice: AlgorithmChoice | str = AlgorithmChoice.AUTO) -> SolveOutcome:
    """Normalize, route, solve and lift the witness back to the full column set.

    An explicit ``choice`` is checked against the normalized instance; an
    instance rejected by normalization is answered No without routing.
    """
    choice = AlgorithmChoice(choice)
    norm = normalize(inst)
    if norm.verdict is Verdict.NO:
        return SolveOutcome(False, algorithm="normalize")
    red = norm.instance
    if choice is AlgorithmChoice.AUTO:
        choice = route(red)
    elif not applicable(choice, red):
        raise UsageError(f"algorithm {choice.value!r} does not apply to this instance")
    res = _RUNNERS[choice](red)
    if not res.yes:
        return res
    return SolveOutcome(True, norm.expand(res.witness), res.stats, res.algorithm)


def solve_minrmc(matrix: IncompleteMatrix, d: int,
                 choice: AlgorithmChoice | str = AlgorithmChoice.AUTO) -> SolveOutcome:
    if d < 0:
        raise UsageError("radius must be nonnegative")
    return solve_conrmc(ConRmcInstance.uniform(matrix, d), choice)


def solve_minlrmc(matrix: IncompleteMatrix, d: int,
                  mode: MinLrmcMode | str = MinLrmcMode.PIVOT_FULL,
                  choice: AlgorithmChoice | str = AlgorithmChoice.AUTO) -> SolveOutcome:
    """Try each row as the center; the smallest successful pivot is reported.

    ``pivot-full`` pins the pivot's budget to 0 on the whole matrix;
    ``pivot-columns`` solves only the pivot's wildcard columns with budgets
    reduced by the distance to the pivot row.
    """
    if d < 0:
        raise UsageError("radius must be nonnegative")
    mode = MinLrmcMode(mode)
    stats = SearchStats()
    n = matrix.n
    for i, row in enumerate(matrix.rows):
        if mode is MinLrmcMode.PIVOT_FULL:
            budgets = [d] * n
            budgets[i] = 0
            res = solve_conrmc(ConRmcInstance(matrix, budgets), choice)
            witness = res.witness
        else:
            budgets = [d - hamming(row, other) for other in matrix.rows]
            if min(budgets) < 0:
                continue
            cols = [j for j, c in enumerate(row) if c == WILDCARD]
            res = solve_conrmc(ConRmcInstance(matrix.submatrix(cols=cols), budgets), choice)
            witness = None
            if res.yes:
                center = list(row)
                for j, s in zip(cols, res.witness):
                    center[j] = s
                witness = tuple(center)
        stats.merge(res.stats)
        if res.yes:
            return SolveOutcome(True, witness, stats, f"{mode.value}/{res.algorithm}", pivot=i)
    return SolveOutcome(False, stats=stats, algorithm=mode.value)


class Violation(NamedTuple):
    row: int
    distance: int
    budget: int


def verify_witness(inst: ConRmcInstance, v: Sequence[int]) -> Violation | None:
    """Return ``None`` when ``v`` is within budget of every row, else the first offender."""
    if len(v) != inst.l:
        raise UsageError(f"witness has length {len(v)}, expected {inst.l}")
    if any(not (0 <= s < inst.alphabet.size) for s in v):
        raise UsageError("witness contains a value outside the alphabet")
    for i, (row, b) in enumerate(zip(inst.matrix.rows, inst.budgets)):
        dist = hamming(v, row)
        if dist > b:
            return Violation(i, dist, b)
    return None


def minimum_radius(matrix: IncompleteMatrix,
                   choice: AlgorithmChoice | str = AlgorithmChoice.AUTO) -> tuple[int, SolveOutcome]:
    """Smallest MinRMC radius, by ascending scan (cheap radii first)."""
    d = 0
    while True:
        res = solve_minrmc(matrix, d, choice)
        if res.yes:
            return d, res
        d += 1


def minimum_local_radius(matrix: IncompleteMatrix,
                         mode: MinLrmcMode | str = MinLrmcMode.PIVOT_FULL) -> tuple[int, SolveOutcome]:
    if matrix.n == 0:
        raise UsageError("local radius is undefined for an empty matrix")
    d = 0
    while True:
        res = solve_minlrmc(matrix, d, mode)
        if res.yes:
            return d, res
        d += 1
