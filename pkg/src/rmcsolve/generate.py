"""Seeded random instances, planted (guaranteed Yes at radius d) or free."""

from __future__ import annotations

import random

from .model import WILDCARD, Alphabet, ConRmcInstance, IncompleteMatrix, UsageError


def gen_instance(seed: int, n: int, l: int, sigma: int, d: int, k: int,
                 planted: bool = True) -> ConRmcInstance:
    if n < 0 or l < 1 or sigma < 1:
        raise UsageError("need n >= 0, l >= 1 and sigma >= 1")
    if not 0 <= k <= l:
        raise UsageError(f"k must lie in [0, l], got k={k}, l={l}")
    if not 0 <= d <= l:
        raise UsageError(f"d must lie in [0, l], got d={d}, l={l}")
    rng = random.Random(seed)
    rows = []
    if planted:
        center = [rng.randrange(sigma) for _ in range(l)]
        for _ in range(n):
            row = list(center)
            t = rng.randint(0, d)
            if sigma > 1:
                for j in rng.sample(range(l), t):
                    row[j] = rng.choice([s for s in range(sigma) if s != center[j]])
            for j in rng.sample(range(l), k):
                row[j] = WILDCARD
            rows.append(row)
    else:
        p = k / l
        for _ in range(n):
            rows.append([WILDCARD if rng.random() < p else rng.randrange(sigma)
                         for _ in range(l)])
    matrix = IncompleteMatrix.from_rows(rows, Alphabet.range(sigma), l)
    return ConRmcInstance.uniform(matrix, d)
