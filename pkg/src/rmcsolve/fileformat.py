"""Plain-text instance files.

::

    # comment lines start with '#'
    alphabet: 0 1 2        (optional; order fixes the first symbol)
    0 1 1
    1 1 1
    * 0 0
    d: 2                   (optional; one value = uniform, else one per row)

Tokens are whitespace separated, ``*`` is a missing entry.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .model import (WILDCARD_TOKEN, Alphabet, ConRmcInstance,
                    IncompleteMatrix, Row, UsageError)

_TOKEN = re.compile(r"\S+")
ALPHABET_PREFIX = "alphabet:"
BUDGET_PREFIX = "d:"


class FormatError(ValueError):
    def __init__(self, message: str, line: int, column: int, source: str = "<input>"):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class ParsedInstance:
    matrix: IncompleteMatrix
    budgets: tuple[int, ...] | None

    def instance(self) -> ConRmcInstance:
        if self.budgets is None:
            raise UsageError("the instance file has no budget line")
        return ConRmcInstance(self.matrix, self.budgets)


def _tokens(line: str, offset: int = 0):
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line, offset)]


def _parse_ints(line: str, offset: int, lineno: int, source: str) -> list[tuple[int, int]]:
    out = []
    for tok, col in _tokens(line, offset):
        try:
            out.append((int(tok), col))
        except ValueError:
            raise FormatError(f"budget {tok!r} is not an integer", lineno, col, source) from None
    return out


def parse_instance(text: str, source: str = "<input>") -> ParsedInstance:
    alphabet_tokens = None
    raw_rows: list[tuple[int, list[tuple[str, int]]]] = []
    budgets = None
    budget_line = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        start = line.index(stripped[0])
        if stripped.startswith(ALPHABET_PREFIX):
            if alphabet_tokens is not None:
                raise FormatError("duplicate alphabet declaration", lineno, start + 1, source)
            alphabet_tokens = _tokens(line, start + len(ALPHABET_PREFIX))
            for tok, col in alphabet_tokens:
                if tok in (WILDCARD_TOKEN, "#"):
                    raise FormatError(f"{tok!r} cannot be an alphabet symbol", lineno, col, source)
            try:
                Alphabet(tuple(t for t, _ in alphabet_tokens))
            except UsageError as exc:
                raise FormatError(str(exc), lineno, start + 1, source) from None
        elif stripped.startswith(BUDGET_PREFIX):
            if budgets is not None:
                raise FormatError("duplicate budget line", lineno, start + 1, source)
            values = _parse_ints(line, start + len(BUDGET_PREFIX), lineno, source)
            if not values:
                raise FormatError("empty budget line", lineno, start + 1, source)
            budgets = [v for v, _ in values]
            budget_line = lineno
        else:
            raw_rows.append((lineno, _tokens(line)))

    width = len(raw_rows[0][1]) if raw_rows else 0
    for lineno, toks in raw_rows:
        if len(toks) != width:
            col = toks[min(width, len(toks) - 1)][1]
            raise FormatError(f"row has {len(toks)} entries, expected {width}", lineno, col, source)

    if alphabet_tokens is not None:
        alphabet = Alphabet(tuple(t for t, _ in alphabet_tokens))
        known = set(alphabet.tokens)
        for lineno, toks in raw_rows:
            for tok, col in toks:
                if tok != WILDCARD_TOKEN and tok not in known:
                    raise FormatError(f"symbol {tok!r} is not in the declared alphabet",
                                      lineno, col, source)
    else:
        alphabet = None
    matrix = IncompleteMatrix.from_tokens([[t for t, _ in toks] for _, toks in raw_rows], alphabet)

    if budgets is not None:
        if len(budgets) == 1:
            budgets = budgets * matrix.n
        elif len(budgets) != matrix.n:
            raise FormatError(f"{len(budgets)} budgets for {matrix.n} rows", budget_line, 1, source)
        budgets = tuple(budgets)
    return ParsedInstance(matrix, budgets)


def read_instance(path: str | Path) -> ParsedInstance:
    path = Path(path)
    return parse_instance(path.read_text(encoding="utf-8"), str(path))


def serialize_instance(matrix: IncompleteMatrix, budgets=None) -> str:
    lines = [f"{ALPHABET_PREFIX} " + " ".join(matrix.alphabet.tokens)]
    lines += [matrix.alphabet.render(row) for row in matrix.rows]
    if budgets is not None:
        budgets = list(budgets)
        if budgets and len(set(budgets)) == 1:
            budgets = budgets[:1]
        lines.append(f"{BUDGET_PREFIX} " + " ".join(map(str, budgets)))
    return "\n".join(lines) + "\n"


def parse_budgets(text: str, n: int, source: str = "<budgets>") -> tuple[int, ...]:
    """Budget file: integers, optionally prefixed by ``d:``; one value or ``n``."""
    values = []
    first = None
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        offset = line.index(stripped[0])
        if stripped.startswith(BUDGET_PREFIX):
            offset += len(BUDGET_PREFIX)
        values += _parse_ints(line, offset, lineno, source)
        first = first or lineno
    if not values:
        raise FormatError("no budgets found", 1, 1, source)
    if len(values) == 1:
        return (values[0][0],) * n
    if len(values) != n:
        raise FormatError(f"{len(values)} budgets for {n} rows", first, 1, source)
    return tuple(v for v, _ in values)


def parse_witness(text: str, alphabet: Alphabet, source: str = "<witness>") -> Row:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if line.strip().startswith("#"):
            continue
        for tok, col in _tokens(line):
            if tok == WILDCARD_TOKEN:
                raise FormatError("a witness cannot contain a wildcard", lineno, col, source)
            try:
                out.append(alphabet.id_of(tok))
            except UsageError:
                raise FormatError(f"symbol {tok!r} is not in the alphabet", lineno, col, source) from None
    return tuple(out)


def render_witness(alphabet: Alphabet, witness: Row) -> str:
    return alphabet.render(witness)
