"""Max-plus upper-triangular matrices and the weakly-increasing-subsequence
representation of words.

Tropical values are ``int`` or ``None``; ``None`` is minus infinity (the
additive identity, absorbing under tropical multiplication). Python ints do
not overflow, and ``None`` cannot be confused with a large negative number.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from dataclasses import dataclass
from functools import reduce
from typing import Optional, Sequence

from .errors import EmptyWordError, InvalidIntervalError
from .words import check_rank

NEG_INF = None
TropicalValue = Optional[int]


def t_add(a: TropicalValue, b: TropicalValue) -> TropicalValue:
    """Tropical sum (max)."""
    if a is None:
        return b
    if b is None:
        return a
    return a if a >= b else b


def t_mul(a: TropicalValue, b: TropicalValue) -> TropicalValue:
    """Tropical product (+)."""
    if a is None or b is None:
        return None
    return a + b


@dataclass(frozen=True)
class UTMatrix:
    n: int
    entries: tuple[tuple[TropicalValue, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(r) for r in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != self.n or any(len(r) != self.n for r in entries):
            raise ValueError(f"expected a {self.n}x{self.n} grid")
        for i in range(self.n):
            for j in range(i):
                if entries[i][j] is not None:
                    raise ValueError(f"entry ({i + 1},{j + 1}) below the diagonal is finite")

    def __getitem__(self, pq):
        """1-based access: ``m[p, q]``."""
        p, q = pq
        return self.entries[p - 1][q - 1]

    def __matmul__(self, other):
        return trop_mul(self, other)

    def to_json(self) -> str:
        return json.dumps(
            {"n": self.n, "entries": [list(r) for r in self.entries]},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "UTMatrix":
        data = json.loads(text)
        return cls(data["n"], tuple(tuple(r) for r in data["entries"]))

    def key(self) -> str:
        """Whitespace-free text key: on/above-diagonal rows joined by '/'."""
        return "/".join(
            ",".join("-" if x is None else str(x) for x in row[i:])
            for i, row in enumerate(self.entries)
        )

    def __str__(self):
        cells = [["-inf" if x is None else str(x) for x in r] for r in self.entries]
        width = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)


def identity(n: int) -> UTMatrix:
    return UTMatrix(n, tuple(tuple(0 if i == j else None for j in range(n)) for i in range(n)))


def trop_mul(a: UTMatrix, b: UTMatrix) -> UTMatrix:
    """Max-plus product of two upper-triangular matrices."""
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")
    n = a.n
    x, y = a.entries, b.entries
    rows = []
    for i in range(n):
        xi = x[i]
        row = [None] * n
        for j in range(i, n):
            best = None
            # a[i][k] and b[k][j] are both -inf unless i <= k <= j
            for k in range(i, j + 1):
                u = xi[k]
                v = y[k][j]
                if u is None or v is None:
                    continue
                s = u + v
                if best is None or s > best:
                    best = s
            row[j] = best
        rows.append(tuple(row))
    return UTMatrix(n, tuple(rows))


def generator(a: int, n: int) -> UTMatrix:
    """Image of the one-letter word ``a``: 1 on intervals containing a, else 0."""
    check_rank((a,), n)
    return UTMatrix(
        n,
        tuple(
            tuple(None if q < p else int(p <= a <= q) for q in range(1, n + 1))
            for p in range(1, n + 1)
        ),
    )


def fingerprint(w: Sequence[int], n: int) -> UTMatrix:
    """Tropical image of ``w``: the ordered product of its letter generators."""
    check_rank(w, n)
    gens = {a: generator(a, n) for a in set(w)}
    return reduce(trop_mul, (gens[a] for a in w), identity(n))


def wis_length(w: Sequence[int], p: int, q: int) -> int:
    """Longest weakly increasing subsequence of ``w`` using letters in ``[p, q]``."""
    if p > q:
        raise InvalidIntervalError(f"empty interval [{p}, {q}]")
    # tails[i]: least possible last letter of a weakly increasing run of length i+1
    tails: list[int] = []
    for a in w:
        if p <= a <= q:
            i = bisect_right(tails, a)
            if i == len(tails):
                tails.append(a)
            else:
                tails[i] = a
    return len(tails)


def fingerprint_dp(w: Sequence[int], n: int) -> UTMatrix:
    """Same matrix as ``fingerprint``, built entry by entry from ``wis_length``."""
    check_rank(w, n)
    if not w:
        return identity(n)
    return UTMatrix(
        n,
        tuple(
            tuple(None if q < p else wis_length(w, p, q) for q in range(1, n + 1))
            for p in range(1, n + 1)
        ),
    )


def top_row(w: Sequence[int], n: int) -> tuple[int, ...]:
    """First row of the fingerprint: longest weakly increasing runs over [1, i]."""
    if not w:
        raise EmptyWordError("top row is defined for non-empty words only")
    return fingerprint(w, n).entries[0]


def x_product(t: Sequence[int]) -> tuple[int, ...]:
    """Ordinary product ``t X`` where X has columns e_1, e_2 - e_1, ..., e_n - e_{n-1}."""
    return tuple(t[i] - (t[i - 1] if i else 0) for i in range(len(t)))


def bottom_via_X(w: Sequence[int], n: int) -> tuple[int, ...]:
    return x_product(top_row(w, n))


def anti_diagonal_flip(m: UTMatrix) -> UTMatrix:
    n = m.n
    e = m.entries
    return UTMatrix(n, tuple(tuple(e[n - 1 - j][n - 1 - i] for j in range(n)) for i in range(n)))


def check_fingerprint_shape(m: UTMatrix, length: int, counts=None) -> list[str]:
    """Return descriptions of any violated fingerprint invariants (empty if none).

    ``counts`` optionally maps letters to multiplicities for the diagonal check.
    """
    problems = []
    n = m.n
    if length == 0:
        if m != identity(n):
            problems.append("empty word must map to the identity")
        return problems
    for p in range(1, n + 1):
        for q in range(p, n + 1):
            v = m[p, q]
            if p == q and v is not None and counts is not None and v != counts.get(p, 0):
                problems.append(f"diagonal ({p},{p}) = {v} but letter {p} occurs {counts.get(p, 0)} times")
            if v is None or v < 0 or v > length:
                problems.append(f"entry ({p},{q}) = {v} out of range")
                continue
            if q < n and m[p, q + 1] is not None and v > m[p, q + 1]:
                problems.append(f"entry ({p},{q}) exceeds ({p},{q + 1})")
            if p > 1 and m[p - 1, q] is not None and v > m[p - 1, q]:
                problems.append(f"entry ({p},{q}) exceeds ({p - 1},{q})")
    return problems
