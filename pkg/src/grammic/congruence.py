"""The grammic action on bottom rows and the grammic congruence.

Two deciders are provided. ``equiv`` compares tropical fingerprints;
``equiv_oracle`` runs the row action itself over a finite box of rows,
which is the definition of the congruence cut down to rows whose entries
are at most |w| + 1 (larger entries never change the outcome).
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .errors import DEFAULT_BUDGET, Budget, PropertyViolation, RankError
from .tableau import bottom_row_vector, tableau_of
from .tropical import UTMatrix, fingerprint
from .words import Word, check_rank, content_key, words_of_length

Row = tuple  # tuple[int, ...], gamma[i - 1] counts letter i


def act_letter(gamma: Sequence[int], a: int) -> Row:
    """Bottom-row effect of inserting ``a``: add an ``a``, drop the first
    letter strictly greater than ``a`` if there is one."""
    n = len(gamma)
    if not 1 <= a <= n:
        raise RankError(f"letter {a} outside alphabet [1, {n}]")
    out = list(gamma)
    out[a - 1] += 1
    for t in range(a, n):
        if out[t] > 0:
            out[t] -= 1
            break
    return tuple(out)


def act_word(gamma: Sequence[int], w: Sequence[int]) -> Row:
    n = len(gamma)
    check_rank(w, n)
    row = list(gamma)
    for a in w:
        row[a - 1] += 1
        for t in range(a, n):
            if row[t]:
                row[t] -= 1
                break
    return tuple(row)


def row_prefix(gamma: Sequence[int]) -> Word:
    """The word 1^g1 2^g2 ... n^gn whose tableau is the single row ``gamma``."""
    return tuple(a for a, g in enumerate(gamma, start=1) for _ in range(g))


@lru_cache(maxsize=1 << 18)
def cached_fingerprint(w: Word, n: int) -> UTMatrix:
    return fingerprint(w, n)


def equiv(u: Sequence[int], v: Sequence[int], n: int) -> bool:
    """Decide grammic equivalence over ``[n]`` by comparing fingerprints."""
    check_rank(u, n)
    check_rank(v, n)
    if len(u) != len(v) or content_key(u) != content_key(v):
        return False
    return cached_fingerprint(tuple(u), n) == cached_fingerprint(tuple(v), n)


def oracle_rows(k: int, n: int):
    """Rows with every component in 0..k+1."""
    return itertools.product(range(k + 2), repeat=n)


def oracle_cost(k: int, n: int) -> int:
    return (k + 2) ** n * max(k, 1)


def oracle_signature(w: Sequence[int], n: int, k: Optional[int] = None,
                     budget: Budget = DEFAULT_BUDGET) -> tuple:
    """Action of ``w`` on every row of the oracle box for length ``k``
    (default ``len(w)``). Words of equal length k are grammic-equivalent
    iff their signatures agree."""
    check_rank(w, n)
    k = len(w) if k is None else k
    budget.check("steps", oracle_cost(k, n))
    return tuple(act_word(g, w) for g in oracle_rows(k, n))


def equiv_oracle(u: Sequence[int], v: Sequence[int], n: int,
                 budget: Budget = DEFAULT_BUDGET) -> bool:
    """Brute-force grammic equivalence straight from the row action."""
    check_rank(u, n)
    check_rank(v, n)
    if len(u) != len(v):
        return False
    k = len(u)
    budget.check("steps", 2 * oracle_cost(k, n))
    return all(act_word(g, u) == act_word(g, v) for g in oracle_rows(k, n))


def rank_stability(u: Sequence[int], v: Sequence[int], n: int,
                   budget: Budget = DEFAULT_BUDGET) -> bool:
    """Oracle verdict over ``[n]``, checked against the verdict over ``[n + 1]``."""
    here = equiv_oracle(u, v, n, budget)
    above = equiv_oracle(u, v, n + 1, budget)
    if here != above:
        raise PropertyViolation(
            f"{u} vs {v}: oracle says {here} over [{n}] but {above} over [{n + 1}]"
        )
    return here


@dataclass(frozen=True)
class GrammicClass:
    canonical: UTMatrix
    representatives: Optional[frozenset] = None

    @property
    def least(self) -> Optional[Word]:
        if not self.representatives:
            return None
        return min(self.representatives)


def _classes_chunk(args):
    n, k, first = args
    groups = defaultdict(list)
    for rest in words_of_length(n, k - 1):
        w = (first,) + rest
        groups[fingerprint(w, n)].append(w)
    return groups


def enumerate_classes(n: int, k: int, budget: Budget = DEFAULT_BUDGET,
                      representatives: bool = True, jobs: int = 1) -> list[GrammicClass]:
    """Partition ``[n]^k`` by fingerprint, ordered by least representative."""
    check_rank((), n)
    budget.check("words", n**k)
    if k == 0:
        groups = {fingerprint((), n): [()]}
    else:
        chunks = [(n, k, a) for a in range(1, n + 1)]
        groups = defaultdict(list)
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = list(pool.map(_classes_chunk, chunks))
        else:
            parts = [_classes_chunk(c) for c in chunks]
        for part in parts:
            for key, ws in part.items():
                groups[key].extend(ws)
    ordered = sorted(groups.items(), key=lambda kv: min(kv[1]))
    return [
        GrammicClass(key, frozenset(ws) if representatives else None)
        for key, ws in ordered
    ]


def same_bottom_row(u: Sequence[int], v: Sequence[int], n: int) -> bool:
    return bottom_row_vector(tableau_of(u), n) == bottom_row_vector(tableau_of(v), n)
