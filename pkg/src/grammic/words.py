"""Words over ordered alphabets and the letter-level transforms on them.

A word is a plain ``tuple`` of positive integers. The rank ``n`` of the
alphabet ``[n] = {1, ..., n}`` is never stored on the word; operations that
depend on it take it as an argument and validate there, so the same value
can be read as a word over ``[n]`` or over ``[n + 1]``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InvalidIntervalError, NotStandardError, RankError

Word = tuple  # tuple[int, ...]

EMPTY: Word = ()


def word(letters: Iterable[int]) -> Word:
    w = tuple(int(a) for a in letters)
    for a in w:
        if a < 1:
            raise RankError(f"letters must be positive integers, got {a}")
    return w


def check_rank(w: Sequence[int], n: int) -> None:
    if n < 1:
        raise RankError(f"rank must be >= 1, got {n}")
    for a in w:
        if not 1 <= a <= n:
            raise RankError(f"letter {a} outside alphabet [1, {n}]")


def rank_of(*words: Sequence[int]) -> int:
    """Smallest rank containing every letter of ``words`` (1 if all empty)."""
    return max((max(w) for w in words if w), default=1)


def content(w: Sequence[int]) -> dict[int, int]:
    """Map each letter occurring in ``w`` to its number of occurrences."""
    return dict(sorted(Counter(w).items()))


def content_key(w: Sequence[int]) -> tuple:
    return tuple(sorted(Counter(w).items()))


def restrict(w: Sequence[int], lo: int, hi: int) -> Word:
    """Delete every letter of ``w`` outside the interval ``[lo, hi]``."""
    if lo > hi:
        raise InvalidIntervalError(f"empty interval [{lo}, {hi}]")
    return tuple(a for a in w if lo <= a <= hi)


def pack(w: Sequence[int]) -> Word:
    """Relabel the support of ``w`` order-isomorphically onto ``[m]``."""
    relabel = {a: i for i, a in enumerate(sorted(set(w)), start=1)}
    return tuple(relabel[a] for a in w)


def standardise(w: Sequence[int]) -> Word:
    """Standardisation: the j-th occurrence of the i-th smallest letter becomes
    j plus the number of letters of ``w`` smaller than it."""
    offset = {}
    seen = 0
    for a, count in sorted(Counter(w).items()):
        offset[a] = seen
        seen += count
    out = []
    for a in w:
        offset[a] += 1
        out.append(offset[a])
    return tuple(out)


def is_standard(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def involute(w: Sequence[int], n: int) -> Word:
    """Schutzenberger involution over ``[n]``: complement then reverse."""
    check_rank(w, n)
    return tuple(n + 1 - a for a in reversed(w))


def charge_sequence(w: Sequence[int]) -> tuple[int, ...]:
    """Charge sequence of a standard word.

    Entry i (1-based) repeats entry i-1 when letter i sits left of letter
    i-1 in ``w`` and increases it by one when it sits to the right.
    """
    if not is_standard(w):
        raise NotStandardError(f"{w!r} is not a permutation of [1, {len(w)}]")
    if not w:
        return ()
    position = {a: i for i, a in enumerate(w)}
    values = [0]
    for i in range(2, len(w) + 1):
        step = 1 if position[i] > position[i - 1] else 0
        values.append(values[-1] + step)
    return tuple(values)


def charge(w: Sequence[int]) -> int:
    return sum(charge_sequence(w))


def scattered_subwords(w: Sequence[int], max_len: int) -> set[Word]:
    """All non-empty scattered subwords of ``w`` of length at most ``max_len``."""
    found: set[Word] = set()
    if max_len < 1:
        return found
    for a in w:
        extended = {s + (a,) for s in found if len(s) < max_len}
        found |= extended
        found.add((a,))
    return found


def words_of_length(n: int, k: int) -> Iterator[Word]:
    """All words of length ``k`` over ``[n]`` in lexicographic order."""
    return itertools.product(range(1, n + 1), repeat=k)


def words_up_to(n: int, k: int) -> Iterator[Word]:
    for length in range(k + 1):
        yield from words_of_length(n, length)


def words_with_content(counts: Mapping[int, int]) -> Iterator[Word]:
    """Distinct rearrangements of a content, in lexicographic order."""
    remaining = {a: c for a, c in sorted(counts.items()) if c > 0}
    total = sum(remaining.values())
    prefix: list[int] = []

    def walk():
        if len(prefix) == total:
            yield tuple(prefix)
            return
        for a in remaining:
            if remaining[a]:
                remaining[a] -= 1
                prefix.append(a)
                yield from walk()
                prefix.pop()
                remaining[a] += 1

    yield from walk()


def contents_of_length(n: int, k: int) -> Iterator[dict[int, int]]:
    """Every content of total size ``k`` over ``[n]`` (compositions of k)."""
    for counts in itertools.product(range(k + 1), repeat=n):
        if sum(counts) == k:
            yield {a: c for a, c in enumerate(counts, start=1) if c}
