"""Semigroup identities evaluated in the grammic monoid by substitution.

Validity is only semi-decided: ``falsify`` searches assignments up to a
bound, and finding nothing is not a proof that the identity holds.
"""

from __future__ import annotations

import itertools
import string
from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, Optional

from .congruence import equiv
from .errors import DEFAULT_BUDGET, Budget, GrammicError, MisuseError, PropertyViolation
from .words import Word, words_of_length


@dataclass(frozen=True)
class Identity:
    lhs: str
    rhs: str

    def __post_init__(self):
        for side in (self.lhs, self.rhs):
            if not side:
                raise GrammicError("both sides of an identity must be non-empty")
            if any(ch not in string.ascii_lowercase for ch in side):
                raise GrammicError(f"variables are single letters a-z, got {side!r}")

    @classmethod
    def parse(cls, text: str) -> "Identity":
        lhs, sep, rhs = text.replace(" ", "").partition("=")
        if not sep:
            raise GrammicError(f"expected 'lhs=rhs', got {text!r}")
        return cls(lhs, rhs)

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(sorted(set(self.lhs) | set(self.rhs)))

    @property
    def trivial(self) -> bool:
        return self.lhs == self.rhs

    def __str__(self):
        return f"{self.lhs}={self.rhs}"


Assignment = Mapping[str, Word]


def substitute(identity: Identity, assignment: Assignment) -> tuple[Word, Word]:
    missing = [x for x in identity.variables if x not in assignment]
    if missing:
        raise GrammicError(f"no value assigned to {', '.join(missing)}")
    for x in identity.variables:
        if not assignment[x]:
            raise GrammicError(f"variable {x} assigned the empty word")

    def image(side):
        return tuple(a for x in side for a in assignment[x])

    return image(identity.lhs), image(identity.rhs)


def is_balanced(identity: Identity) -> bool:
    return Counter(identity.lhs) == Counter(identity.rhs)


def holds_under(identity: Identity, assignment: Assignment, n: int) -> bool:
    u, v = substitute(identity, assignment)
    return equiv(u, v, n)


def _nonempty_words(n: int, max_len: int):
    for length in range(1, max_len + 1):
        yield from words_of_length(n, length)


def falsify(identity: Identity, n: int, max_len: int,
            budget: Budget = DEFAULT_BUDGET) -> Optional[dict[str, Word]]:
    """First falsifying assignment in enumeration order, or None.

    Variables are taken alphabetically; each ranges over non-empty words of
    length <= ``max_len`` ordered by length then lexicographically, and the
    assignment space is scanned in the product order of that list.
    """
    candidates = list(_nonempty_words(n, max_len))
    names = identity.variables
    budget.check("assignments", len(candidates) ** len(names))
    for values in itertools.product(candidates, repeat=len(names)):
        assignment = dict(zip(names, values))
        if not holds_under(identity, assignment, n):
            return assignment
    return None


def falsify_unbalanced(identity: Identity, n: int) -> dict[str, Word]:
    """Constructive witness that an unbalanced identity fails in every rank.

    Sides of different length: every variable goes to the letter 1. Otherwise
    some variable x occurs a different number of times on the two sides; x goes
    to 11 and the rest to 1, so the images have different lengths.
    """
    if is_balanced(identity):
        raise MisuseError(f"{identity} is balanced")
    if len(identity.lhs) != len(identity.rhs):
        assignment = {x: (1,) for x in identity.variables}
    else:
        lc, rc = Counter(identity.lhs), Counter(identity.rhs)
        pivot = next(x for x in identity.variables if lc[x] != rc[x])
        assignment = {x: (1, 1) if x == pivot else (1,) for x in identity.variables}
    if holds_under(identity, assignment, n):
        raise PropertyViolation(f"constructed assignment does not falsify {identity}")
    return assignment


def canonical_words(length: int, max_vars: int):
    """Words over a, b, c, ... whose variables first appear in alphabetical
    order (one representative per renaming class)."""
    letters = string.ascii_lowercase[:max_vars]

    def walk(prefix, used):
        if len(prefix) == length:
            yield prefix
            return
        for i in range(min(used + 1, max_vars)):
            yield from walk(prefix + letters[i], max(used, i + 1))

    yield from walk("", 0)


def balanced_identities(length: int, max_vars: int):
    """Non-trivial balanced identities u=v of the given length, one per renaming
    class of ``u`` (``v`` ranges over all words on the same letters)."""
    letters = string.ascii_lowercase[:max_vars]
    for lhs in canonical_words(length, max_vars):
        counts = Counter(lhs)
        for rhs in itertools.product(letters[:len(counts)], repeat=length):
            rhs = "".join(rhs)
            if rhs != lhs and Counter(rhs) == counts:
                yield Identity(lhs, rhs)


@dataclass
class MinLengthReport:
    n: int
    witnesses: list = field(default_factory=list)  # (identity, assignment)
    unresolved: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.unresolved

    def to_dict(self):
        return {
            "n": self.n,
            "identities": len(self.witnesses) + len(self.unresolved),
            "falsified": len(self.witnesses),
            "unresolved": [str(i) for i in self.unresolved],
            "witnesses": [
                {"identity": str(i), "assignment": {x: list(w) for x, w in a.items()}}
                for i, a in self.witnesses
            ],
        }


def identities_up_to(length: int):
    """Non-trivial identities with both sides of length <= ``length``, one per
    renaming of variables."""
    for a in range(1, length + 1):
        for b in range(1, length + 1):
            for joint in canonical_words(a + b, a + b):
                lhs, rhs = joint[:a], joint[a:]
                if lhs != rhs:
                    yield Identity(lhs, rhs)


def min_length_check(n: int, budget: Budget = DEFAULT_BUDGET) -> MinLengthReport:
    """Falsify every non-trivial identity with sides of length <= n - 1.

    Each identity is first tried against one-letter substitutions; when those
    all agree the search widens to longer words, up to length n - 1.
    """
    report = MinLengthReport(n)
    for identity in identities_up_to(n - 1):
        witness = None
        for max_len in range(1, max(n - 1, 1) + 1):
            witness = falsify(identity, n, max_len, budget)
            if witness is not None:
                break
        if witness is None:
            report.unresolved.append(identity)
        else:
            report.witnesses.append((identity, witness))
    return report
