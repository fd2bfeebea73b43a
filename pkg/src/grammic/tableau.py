"""Semistandard Young tableaux and Schensted row insertion.

Rows are stored bottom-up: ``rows[0]`` is the bottom (longest) row.
"""

from __future__ import annotations

import itertools
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import RankError
from .words import Word


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        for r in rows:
            if not r:
                raise ValueError("tableau rows must be non-empty")
            if any(a > b for a, b in zip(r, r[1:])):
                raise ValueError(f"row {r} is not weakly increasing")
        for below, above in zip(rows, rows[1:]):
            if len(above) > len(below):
                raise ValueError("row lengths must weakly decrease upwards")
            if any(b >= a for b, a in zip(below, above)):
                raise ValueError("columns must strictly increase upwards")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    @property
    def bottom_row(self) -> tuple[int, ...]:
        return self.rows[0] if self.rows else ()

    def columns(self) -> list[Word]:
        """Columns left to right, each as its (strictly decreasing) column word."""
        if not self.rows:
            return []
        return [
            tuple(r[j] for r in reversed(self.rows) if j < len(r))
            for j in range(len(self.rows[0]))
        ]

    def __str__(self):
        return "\n".join(" ".join(map(str, r)) for r in reversed(self.rows))


EMPTY_TABLEAU = Tableau()


def insert(t: Tableau, a: int) -> Tableau:
    """Schensted row insertion ``t <- a``."""
    rows = [list(r) for r in t.rows]
    for row in rows:
        i = bisect_right(row, a)
        if i == len(row):
            row.append(a)
            return _trusted(rows)
        row[i], a = a, row[i]
    rows.append([a])
    return _trusted(rows)


def _trusted(rows) -> Tableau:
    # insertion always yields a valid tableau; skip re-validation on the hot path
    t = object.__new__(Tableau)
    object.__setattr__(t, "rows", tuple(tuple(r) for r in rows))
    return t


def tableau_of(w: Iterable[int]) -> Tableau:
    """P(w): insert the letters of ``w`` one at a time into the empty tableau."""
    rows: list[list[int]] = []
    for a in w:
        for row in rows:
            i = bisect_right(row, a)
            if i == len(row):
                row.append(a)
                break
            row[i], a = a, row[i]
        else:
            rows.append([a])
    return _trusted(rows)


def row_reading(t: Tableau) -> Word:
    """Rows left to right, from the top row down to the bottom row."""
    return tuple(itertools.chain.from_iterable(reversed(t.rows)))


def column_reading(t: Tableau) -> Word:
    """Columns top to bottom, from the leftmost column to the rightmost."""
    return tuple(itertools.chain.from_iterable(t.columns()))


def bottom_row_vector(t: Tableau, n: int) -> tuple[int, ...]:
    """Multiplicity vector of the bottom row over ``[n]``."""
    gamma = [0] * n
    for a in t.bottom_row:
        if a > n:
            raise RankError(f"entry {a} exceeds rank {n}")
        gamma[a - 1] += 1
    if any(a > n for r in t.rows for a in r):
        raise RankError(f"tableau has entries exceeding rank {n}")
    return tuple(gamma)


def is_column_word(c: Sequence[int]) -> bool:
    return len(c) > 0 and all(a > b for a, b in zip(c, c[1:]))


def column_dominates(p: Sequence[int], q: Sequence[int]) -> bool:
    """Whether column ``p`` can stand immediately left of column ``q`` in a tableau."""
    if len(p) < len(q):
        return False
    # i-th lowest entry is the i-th letter from the end of a column word
    return all(a <= b for a, b in zip(reversed(p), reversed(q)))


def enumerate_columns(n: int) -> list[Word]:
    """All 2^n - 1 column words over ``[n]``, shortest first."""
    if n < 1:
        raise RankError(f"rank must be >= 1, got {n}")
    out = []
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n, 0, -1), size):
            out.append(tuple(subset))
    return out


def tableaux_with_columns(n: int, m: int) -> list[Tableau]:
    """Every tableau over ``[n]`` whose bottom row has exactly ``m`` boxes."""
    cols = enumerate_columns(n)
    out = []

    def extend(chain):
        if len(chain) == m:
            out.append(_from_columns(chain))
            return
        for c in cols:
            if not chain or column_dominates(chain[-1], c):
                chain.append(c)
                extend(chain)
                chain.pop()

    extend([])
    return out


def _from_columns(columns: Sequence[Sequence[int]]) -> Tableau:
    height = len(columns[0]) if columns else 0
    rows = []
    for i in range(height):
        rows.append(tuple(c[len(c) - 1 - i] for c in columns if len(c) > i))
    return Tableau(tuple(rows))
