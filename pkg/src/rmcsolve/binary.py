"""Linear-time ConRMC over a two-symbol alphabet when every budget is >= l - 1.

A complete row with budget ``l - 1`` rules out exactly one center, its
bitwise complement, so the instance is a Yes-instance iff fewer than ``2^l``
distinct such rows remain.
"""

from __future__ import annotations

from .model import WILDCARD, ConRmcInstance, SearchStats, SolveOutcome, UsageError

_TO_ASCII = bytes.maketrans(b"\x00\x01", b"01")
_DIGIT_BITS = 16


def radix_sort(keys: list[int], bits: int) -> list[int]:
    """LSD radix sort of nonnegative ints below ``2**bits``.

    Digits are at most 16 bits wide and shrink with the input so that small
    inputs do not pay for 65536 empty buckets per pass.
    """
    width = max(1, min(_DIGIT_BITS, len(keys).bit_length()))
    mask = (1 << width) - 1
    for shift in range(0, max(bits, 1), width):
        buckets: list[list[int]] = [[] for _ in range(1 << width)]
        for key in keys:
            buckets[(key >> shift) & mask].append(key)
        keys = [key for bucket in buckets if bucket for key in bucket]
    return keys


def _unique_sorted(keys: list[int], bits: int) -> list[int]:
    out: list[int] = []
    for key in radix_sort(keys, bits):
        if not out or out[-1] != key:
            out.append(key)
    return out


def _to_row(value: int, l: int) -> tuple[int, ...]:
    return tuple((value >> (l - 1 - j)) & 1 for j in range(l))


def solve_binary_high(inst: ConRmcInstance) -> SolveOutcome:
    l = inst.l
    if inst.alphabet.size != 2:
        raise UsageError("binary route needs an alphabet of exactly two symbols")
    if any(b < l - 1 for b in inst.budgets):
        raise UsageError("binary route needs every budget >= l - 1")
    stats = SearchStats()
    stats.visit(0)
    if any(b < 0 for b in inst.budgets):
        return SolveOutcome(False, stats=stats, algorithm="binary")

    keys = [int(bytes(row).translate(_TO_ASCII), 2)
            for row, b in zip(inst.matrix.rows, inst.budgets)
            if b < l and WILDCARD not in row]
    full = (1 << l) - 1

    if l > (len(keys) + 1).bit_length():
        # fewer rows than 2^l - 1 for sure: skip the sort, find the gap by hashing
        banned = {full ^ key for key in keys}
        v = 0
        while v in banned:
            v += 1
        return SolveOutcome(True, _to_row(v, l), stats, "binary")

    distinct = _unique_sorted(keys, l)
    if len(distinct) > full:
        return SolveOutcome(False, stats=stats, algorithm="binary")
    # complements of an ascending list are descending
    v = 0
    for comp in (full ^ key for key in reversed(distinct)):
        if comp != v:
            break
        v += 1
    return SolveOutcome(True, _to_row(v, l), stats, "binary")
