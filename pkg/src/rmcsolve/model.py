"""Domain types and wildcard-aware distance primitives.

Symbols are interned to dense integer ids ``0..|Σ|-1``; the two sentinels
``WILDCARD`` and ``DUMMY`` are negative so they never collide with a symbol.
A wildcard matches everything, a dummy matches nothing except another dummy.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

WILDCARD = -1
DUMMY = -2

WILDCARD_TOKEN = "*"
DUMMY_TOKEN = "⋄"
SYNTHETIC_SYMBOL = "a"

Row = tuple[int, ...]


class UsageError(ValueError):
    """Raised when an operation is called outside its precondition."""


@dataclass(frozen=True)
class Alphabet:
    tokens: tuple[str, ...]

    def __post_init__(self):
        if not self.tokens:
            raise UsageError("alphabet must contain at least one symbol")
        seen = set()
        for tok in self.tokens:
            if not tok or tok in (WILDCARD_TOKEN, "#") or tok.isspace():
                raise UsageError(f"invalid alphabet token {tok!r}")
            if tok in seen:
                raise UsageError(f"duplicate alphabet token {tok!r}")
            seen.add(tok)
        object.__setattr__(self, "_ids", {tok: i for i, tok in enumerate(self.tokens)})

    @classmethod
    def of(cls, tokens: Iterable[str]) -> Alphabet:
        return cls(tuple(tokens))

    @classmethod
    def range(cls, size: int) -> Alphabet:
        return cls(tuple(str(i) for i in range(size)))

    @property
    def size(self) -> int:
        return len(self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def id_of(self, token: str) -> int:
        try:
            return self._ids[token]
        except KeyError:
            raise UsageError(f"token {token!r} is not in the alphabet") from None

    def token(self, cell: int) -> str:
        if cell == WILDCARD:
            return WILDCARD_TOKEN
        if cell == DUMMY:
            return DUMMY_TOKEN
        return self.tokens[cell]

    def render(self, row: Sequence[int]) -> str:
        return " ".join(self.token(c) for c in row)


def _check_grid(rows, l, alphabet, sentinel, kind):
    for i, row in enumerate(rows):
        if len(row) != l:
            raise UsageError(f"{kind}: row {i} has length {len(row)}, expected {l}")
        for c in row:
            if c == sentinel:
                continue
            if not (0 <= c < alphabet.size):
                raise UsageError(f"{kind}: invalid cell value {c} in row {i}")


@dataclass(frozen=True)
class IncompleteMatrix:
    """An ``n x l`` grid over ``Σ ∪ {*}``."""

    rows: tuple[Row, ...]
    alphabet: Alphabet
    l: int

    def __post_init__(self):
        _check_grid(self.rows, self.l, self.alphabet, WILDCARD, "IncompleteMatrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], alphabet: Alphabet,
                  l: int | None = None) -> IncompleteMatrix:
        rows = tuple(tuple(r) for r in rows)
        if l is None:
            l = len(rows[0]) if rows else 0
        return cls(rows, alphabet, l)

    @classmethod
    def from_tokens(cls, rows: Iterable[Sequence[str]],
                    alphabet: Alphabet | None = None) -> IncompleteMatrix:
        """Intern token rows; ``"*"`` is a wildcard.

        Without an explicit alphabet, Σ is the set of tokens in order of
        first appearance, or the single synthetic symbol ``"a"`` when the
        matrix holds no symbol at all.
        """
        rows = [list(r) for r in rows]
        if alphabet is None:
            order = dict.fromkeys(t for r in rows for t in r if t != WILDCARD_TOKEN)
            alphabet = Alphabet(tuple(order) or (SYNTHETIC_SYMBOL,))
        cells = [tuple(WILDCARD if t == WILDCARD_TOKEN else alphabet.id_of(t) for t in r)
                 for r in rows]
        return cls.from_rows(cells, alphabet)

    @property
    def n(self) -> int:
        return len(self.rows)

    def wildcard_counts(self) -> list[int]:
        return [row.count(WILDCARD) for row in self.rows]

    def submatrix(self, rows: Iterable[int] | None = None,
                  cols: Iterable[int] | None = None) -> IncompleteMatrix:
        rows = range(self.n) if rows is None else list(rows)
        cols = range(self.l) if cols is None else list(cols)
        return IncompleteMatrix(tuple(tuple(self.rows[i][j] for j in cols) for i in rows),
                                self.alphabet, len(cols))


@dataclass(frozen=True)
class DummyMatrix:
    """A complete ``n x l`` grid over ``Σ ∪ {⋄}``."""

    rows: tuple[Row, ...]
    alphabet: Alphabet
    l: int

    def __post_init__(self):
        _check_grid(self.rows, self.l, self.alphabet, DUMMY, "DummyMatrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], alphabet: Alphabet,
                  l: int | None = None) -> DummyMatrix:
        rows = tuple(tuple(r) for r in rows)
        if l is None:
            l = len(rows[0]) if rows else 0
        return cls(rows, alphabet, l)

    @property
    def n(self) -> int:
        return len(self.rows)

    def dummy_counts(self) -> list[int]:
        return [row.count(DUMMY) for row in self.rows]


@dataclass(frozen=True)
class ConRmcInstance:
    matrix: IncompleteMatrix
    budgets: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "budgets", tuple(int(b) for b in self.budgets))
        if len(self.budgets) != self.matrix.n:
            raise UsageError(
                f"expected {self.matrix.n} budgets, got {len(self.budgets)}")

    @classmethod
    def uniform(cls, matrix: IncompleteMatrix, d: int) -> ConRmcInstance:
        return cls(matrix, (d,) * matrix.n)

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def l(self) -> int:
        return self.matrix.l

    @property
    def alphabet(self) -> Alphabet:
        return self.matrix.alphabet

    @property
    def d(self) -> int:
        return max(self.budgets, default=0)

    @property
    def k(self) -> int:
        return max(self.matrix.wildcard_counts(), default=0)


@dataclass(frozen=True)
class NsdInstance:
    matrix: DummyMatrix
    budgets: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "budgets", tuple(int(b) for b in self.budgets))
        if len(self.budgets) != self.matrix.n:
            raise UsageError(
                f"expected {self.matrix.n} budgets, got {len(self.budgets)}")

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def l(self) -> int:
        return self.matrix.l

    @property
    def alphabet(self) -> Alphabet:
        return self.matrix.alphabet

    @property
    def d(self) -> int:
        return max(self.budgets, default=0)


@dataclass
class SearchStats:
    """Counters collected while a solver runs.

    ``halving_trace`` holds ``(root_budget, depth, budget)`` triples for the
    row-1 budget at every node of a dummy-string search.
    """

    nodes: int = 0
    max_depth: int = 0
    max_children: int = 0
    halving_trace: list[tuple[int, int, int]] = field(default_factory=list)

    def visit(self, depth: int) -> None:
        self.nodes += 1
        if depth > self.max_depth:
            self.max_depth = depth

    def branch(self, children: int) -> None:
        if children > self.max_children:
            self.max_children = children

    def merge(self, other: SearchStats) -> None:
        self.nodes += other.nodes
        self.max_depth = max(self.max_depth, other.max_depth)
        self.max_children = max(self.max_children, other.max_children)
        self.halving_trace.extend(other.halving_trace)


@dataclass
class SolveOutcome:
    yes: bool
    witness: Row | None = None
    stats: SearchStats = field(default_factory=SearchStats)
    algorithm: str = ""
    pivot: int | None = None

    def __post_init__(self):
        if self.yes != (self.witness is not None):
            raise ValueError("witness must be present exactly for Yes outcomes")
        if self.witness is not None:
            self.witness = tuple(self.witness)

    @property
    def answer(self) -> str:
        return "YES" if self.yes else "NO"


def _mismatch(a: int, b: int) -> bool:
    return a != b and a != WILDCARD and b != WILDCARD


def mismatch_set(u: Sequence[int], v: Sequence[int]) -> set[int]:
    """Columns where both cells are comparable (no wildcard) and differ."""
    if len(u) != len(v):
        raise UsageError(f"length mismatch: {len(u)} vs {len(v)}")
    return {j for j, (a, b) in enumerate(zip(u, v)) if _mismatch(a, b)}


def hamming(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise UsageError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum(1 for a, b in zip(u, v) if _mismatch(a, b))


def positions_of(v: Sequence[int], c: int) -> set[int]:
    return {j for j, x in enumerate(v) if x == c}


def overlay(v: Sequence[int], w: Sequence[int]) -> Row:
    """Fill the wildcards of ``v`` from the complete row ``w``."""
    if len(v) != len(w):
        raise UsageError(f"length mismatch: {len(v)} vs {len(w)}")
    if any(x < 0 for x in w):
        raise UsageError("overlay source must be a complete row")
    return tuple(b if a == WILDCARD else a for a, b in zip(v, w))


def dirty_columns(matrix: IncompleteMatrix) -> set[int]:
    dirty = set()
    for j in range(matrix.l):
        seen = {row[j] for row in matrix.rows if row[j] != WILDCARD}
        if len(seen) >= 2:
            dirty.add(j)
    return dirty


class Verdict(enum.Enum):
    OPEN = "open"
    NO = "no"


@dataclass(frozen=True)
class Normalized:
    """Result of :func:`normalize`.

    ``kept_columns`` lists the original column of each reduced column;
    ``forced`` maps every other original column to its fixed symbol.
    """

    instance: ConRmcInstance
    kept_columns: tuple[int, ...]
    kept_rows: tuple[int, ...]
    forced: dict[int, int]
    verdict: Verdict

    def expand(self, reduced_witness: Sequence[int]) -> Row:
        if len(reduced_witness) != len(self.kept_columns):
            raise UsageError("reduced witness has the wrong length")
        full = dict(self.forced)
        full.update(zip(self.kept_columns, reduced_witness))
        return tuple(full[j] for j in range(len(full)))


def normalize(inst: ConRmcInstance) -> Normalized:
    """Drop satisfied rows and clean columns; reject too many dirty columns."""
    m = inst.matrix
    if any(b < 0 for b in inst.budgets):
        return Normalized(inst, tuple(range(m.l)), tuple(range(m.n)), {}, Verdict.NO)

    kept_rows = tuple(i for i, (row, b) in enumerate(zip(m.rows, inst.budgets))
                      if m.l - row.count(WILDCARD) > b)
    rows = [m.rows[i] for i in kept_rows]
    budgets = tuple(inst.budgets[i] for i in kept_rows)

    forced: dict[int, int] = {}
    kept_cols = []
    for j in range(m.l):
        seen = {row[j] for row in rows if row[j] != WILDCARD}
        if len(seen) <= 1:
            forced[j] = seen.pop() if seen else 0
        else:
            kept_cols.append(j)

    reduced = ConRmcInstance(m.submatrix(kept_rows, kept_cols), budgets)
    verdict = Verdict.OPEN
    if len(kept_cols) > len(rows) * max(budgets, default=0):
        verdict = Verdict.NO
    return Normalized(reduced, tuple(kept_cols), kept_rows, forced, verdict)
