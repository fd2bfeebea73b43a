"""Relation families, their congruence closure on fixed-length words, and
drivers that check the compatibility results on bounded word spaces."""

from __future__ import annotations

import itertools
import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from scipy.cluster.hierarchy import DisjointSet

from .congruence import cached_fingerprint, equiv
from .errors import (DEFAULT_BUDGET, Budget, HypothesisError, PreconditionError,
                     PropertyViolation)
from .tableau import (column_dominates, column_reading, enumerate_columns, is_column_word,
                      tableau_of,
                      tableaux_with_columns)
from .words import (Word, charge_sequence, check_rank, content, content_key, involute,
                    pack, restrict, standardise, words_of_length, words_up_to)


@dataclass(frozen=True)
class RelationSet:
    name: str
    pairs: frozenset  # of (lhs, rhs) word pairs
    rank: int

    def __post_init__(self):
        for lhs, rhs in self.pairs:
            if len(lhs) != len(rhs) or content_key(lhs) != content_key(rhs):
                raise ValueError(f"relation ({lhs}, {rhs}) is not balanced")

    def __or__(self, other: "RelationSet") -> "RelationSet":
        return RelationSet(f"{self.name}+{other.name}", self.pairs | other.pairs,
                           max(self.rank, other.rank))

    def __len__(self):
        return len(self.pairs)

    def to_json(self) -> str:
        return json.dumps([[list(l), list(r)] for l, r in sorted(self.pairs)],
                          separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str, name: str = "custom", rank: Optional[int] = None):
        pairs = frozenset((tuple(l), tuple(r)) for l, r in json.loads(text))
        if rank is None:
            rank = max((max(l + r) for l, r in pairs if l + r), default=1)
        return cls(name, pairs, rank)


def relation_set(name: str, pairs: Iterable, rank: int) -> RelationSet:
    return RelationSet(name, frozenset((tuple(l), tuple(r)) for l, r in pairs), rank)


def knuth_relations(n: int) -> RelationSet:
    """Both Knuth families over ``[n]``: (yzx, yxz) for x < y <= z and
    (zxy, xzy) for x <= y < z."""
    pairs = set()
    letters = range(1, n + 1)
    for x, y, z in itertools.product(letters, repeat=3):
        if x < y <= z:
            pairs.add(((y, z, x), (y, x, z)))
        if x <= y < z:
            pairs.add(((z, x, y), (x, z, y)))
    return RelationSet("knuth", frozenset(pairs), n)


def lps_relations(n: int, max_m: Optional[int] = None) -> RelationSet:
    """Left patience sorting relations (y u_m..u_1 x, y x u_m..u_1) with
    x < y <= u_1 < ... < u_m and m <= max_m (default n - 1)."""
    if max_m is None:
        max_m = max(n - 1, 1)
    pairs = set()
    for y in range(2, n + 1):
        for x in range(1, y):
            for m in range(1, max_m + 1):
                for us in itertools.combinations(range(y, n + 1), m):
                    down = tuple(reversed(us))  # u_m ... u_1
                    pairs.add(((y,) + down + (x,), (y, x) + down))
    return RelationSet("lps", frozenset(pairs), n)


def choffrut_rank3() -> RelationSet:
    return relation_set("choffrut3", [((3, 2, 1, 2), (2, 1, 3, 2))], 3)


def choffrut_rank4_pairs(n: int = 4) -> list[tuple[Word, Word]]:
    """Pairs (dbac, badc) with a < b <= c < d over ``[n]``."""
    out = []
    for a, b, c, d in itertools.product(range(1, n + 1), repeat=4):
        if a < b <= c < d:
            out.append(((d, b, a, c), (b, a, d, c)))
    return out


def _verify_relations(rels: RelationSet, n: int) -> None:
    for lhs, rhs in rels.pairs:
        if not equiv(lhs, rhs, n):
            raise PropertyViolation(f"relation ({lhs}, {rhs}) is not grammic over [{n}]")


def closure_by_length(rels: RelationSet, n: int, k: int,
                      budget: Budget = DEFAULT_BUDGET) -> list[frozenset]:
    """Classes of the congruence generated by ``rels`` on words of length ``k``
    over ``[n]``.

    Balanced relations never leave a (length, content) cell, so each cell gets
    its own union-find. One pass suffices: every single rewrite w1 l w2 -> w1 r w2
    is found from the word containing ``l`` and merged; transitivity is the
    union-find's job.
    """
    budget.check("words", n**k)
    pairs = [(l, r) for l, r in rels.pairs if max(l + r, default=0) <= n and len(l) <= k]
    budget.check("steps", n**k * max(k, 1) * max(len(pairs), 1))
    by_lhs = defaultdict(list)
    for l, r in pairs:
        by_lhs[l].append(r)
        by_lhs[r].append(l)
    lengths = sorted({len(l) for l in by_lhs})

    cells = defaultdict(list)
    for w in words_of_length(n, k):
        cells[content_key(w)].append(w)

    classes = []
    for key in sorted(cells):
        ds = DisjointSet(cells[key])
        for w in cells[key]:
            for size in lengths:
                for i in range(k - size + 1):
                    for other in by_lhs.get(w[i:i + size], ()):
                        ds.merge(w, w[:i] + other + w[i + size:])
        classes.extend(frozenset(s) for s in ds.subsets())
    classes.sort(key=min)
    return classes


def presentation_gap(rels: RelationSet, n: int, k: int,
                     budget: Budget = DEFAULT_BUDGET) -> set[tuple[Word, Word]]:
    """Pairs u < v of length ``k`` that are grammic-equivalent over ``[n]`` but
    not identified by the congruence generated by ``rels`` (up to length k only).
    """
    _verify_relations(rels, n)
    gap = set()
    by_fp = defaultdict(list)
    for block in closure_by_length(rels, n, k, budget):
        keys = {cached_fingerprint(w, n) for w in block}
        if len(keys) != 1:
            raise PropertyViolation(f"closure merged inequivalent words: {sorted(block)[:4]}")
        by_fp[keys.pop()].append(block)
    for group in by_fp.values():
        for b1, b2 in itertools.combinations(group, 2):
            for u, v in itertools.product(b1, b2):
                gap.add((min(u, v), max(u, v)))
    return gap


def prop_rel_check(w: Sequence[int], u: Sequence[int], v: Sequence[int], n: int) -> bool:
    """Check wuv == wvu in the grammic monoid, for triples where y = min(w)
    occurs at least |v| times in w and every letter of v < y <= every letter of u."""
    w, u, v = tuple(w), tuple(u), tuple(v)
    if not w:
        raise HypothesisError("w must be non-empty")
    y = min(w)
    if w.count(y) < len(v):
        raise HypothesisError(f"|w|_{y} = {w.count(y)} < |v| = {len(v)}")
    if any(x >= y for x in v) or any(z < y for z in u):
        raise HypothesisError(f"need letters of v < {y} <= letters of u")
    return equiv(w + u + v, w + v + u, n)


def two_column_hypotheses(c1, c2, d1, d2) -> Optional[int]:
    """The letter i for which hypotheses (I)-(III) of the two-column lemma hold,
    or None."""
    letters = sorted(set(c1) | set(c2))
    for i in set(c1) - set(c2):
        # (I) move i from the first column to the second
        if set(d1) != set(c1) - {i} or set(d2) != set(c2) | {i}:
            continue
        # (II) c2 contains the greatest letter of c1c2 below i
        below = [a for a in letters if a < i]
        if not below or below[-1] not in c2:
            continue
        # (III) every z > i in c2 has some z' in c1 with i < z' <= z
        if all(any(i < zp <= z for zp in c1) for z in c2 if z > i):
            return i
    return None


def _two_column_preconditions(c1, c2, d1, d2) -> list[str]:
    bad = []
    for name, c in (("c1", c1), ("c2", c2), ("d1", d1), ("d2", d2)):
        if not is_column_word(c):
            bad.append(f"{name} is not a column word")
    if bad:
        return bad
    if not column_dominates(c1, c2):
        bad.append("c1 does not dominate c2")
    if not column_dominates(d1, d2):
        bad.append("d1 does not dominate d2")
    if tableau_of(c1 + c2) == tableau_of(d1 + d2):
        bad.append("P(c1c2) equals P(d1d2)")
    if content_key(c1 + c2) != content_key(d1 + d2):
        bad.append("contents differ")
    if not (c1[-1] == d1[-1] <= c2[-1] == d2[-1]):
        bad.append("bottom entries violate P1(c1) = P1(d1) <= P1(c2) = P1(d2)")
    return bad


def two_column_check(c1, c2, d1, d2, n: int) -> bool:
    c1, c2, d1, d2 = map(tuple, (c1, c2, d1, d2))
    bad = _two_column_preconditions(c1, c2, d1, d2)
    if bad:
        raise PreconditionError(bad)
    if two_column_hypotheses(c1, c2, d1, d2) is None:
        raise HypothesisError("no letter i satisfies hypotheses (I)-(III)")
    result = equiv(c1 + c2, d1 + d2, n)
    if not result:
        raise PropertyViolation(f"{c1}|{c2} vs {d1}|{d2}: hypotheses hold but not equivalent")
    return result


@dataclass
class ColumnRelations:
    n: int
    m: int
    pairs: list = field(default_factory=list)  # canonical (w, v), w < v
    explained: list = field(default_factory=list)  # m == 2 and (I)-(III) hold
    unexplained: list = field(default_factory=list)

    def to_dict(self):
        return {
            "n": self.n,
            "m": self.m,
            "count": len(self.pairs),
            "pairs": [[list(w), list(v)] for w, v in self.pairs],
            "explained": len(self.explained),
            "unexplained": [[list(w), list(v)] for w, v in self.unexplained],
        }


def enumerate_mcolumn_relations(n: int, m: int,
                                budget: Budget = DEFAULT_BUDGET) -> ColumnRelations:
    """All grammic-equivalent pairs of column readings of distinct tableaux over
    ``[n]`` sharing content and an ``m``-box bottom row."""
    budget.check("words", (2**n - 1) ** m)
    report = ColumnRelations(n, m)
    groups = defaultdict(list)
    for t in tableaux_with_columns(n, m):
        w = column_reading(t)
        groups[(content_key(w), t.bottom_row, cached_fingerprint(w, n))].append(t)
    for ts in groups.values():
        ts.sort(key=column_reading)
        for s, t in itertools.combinations(ts, 2):
            pair = (column_reading(s), column_reading(t))
            report.pairs.append(pair)
            if m == 2:
                (c1, c2), (d1, d2) = s.columns(), t.columns()
                explained = (two_column_hypotheses(c1, c2, d1, d2) is not None
                             or two_column_hypotheses(d1, d2, c1, c2) is not None)
                (report.explained if explained else report.unexplained).append(pair)
            else:
                report.unexplained.append(pair)
    report.pairs.sort()
    return report


@dataclass
class Report:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)
    budget: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self):
        return {
            "name": self.name,
            "checked": self.checked,
            "violations": self.violations,
            "budget": self.budget,
            "notes": self.notes,
        }


def compatibility_suite(n: int, k: int, budget: Budget = DEFAULT_BUDGET) -> Report:
    """Check the four compatibility equivalences (restriction to intervals,
    packing, standardisation, involution) on every pair of words of length
    at most ``k`` over ``[n]``."""
    total = sum(n**i for i in range(k + 1))
    budget.check("words", total)
    budget.check("steps", total * total)
    report = Report("compatibility", budget={"n": n, "k": k, "words": total})
    words = list(words_up_to(n, k))
    intervals = [(p, q) for p in range(1, n + 1) for q in range(p, n + 1)]
    fp = cached_fingerprint

    info = {}
    for w in words:
        pw, sw = pack(w), standardise(w)
        info[w] = (
            fp(w, n),
            content_key(w),
            tuple(fp(restrict(w, p, q), n) for p, q in intervals),
            (len(set(w)), pw),
            sw,
            fp(involute(w, n), n),
        )
    pack_fp = {}
    std_fp = {}

    def packed(w, rank):
        key = (info[w][3][1], rank)
        if key not in pack_fp:
            pack_fp[key] = fp(key[0], rank)
        return pack_fp[key]

    def stdd(w, rank):
        key = (info[w][4], rank)
        if key not in std_fp:
            std_fp[key] = fp(key[0], rank)
        return std_fp[key]

    for u, v in itertools.product(words, repeat=2):
        fu, cu, ru, (mu, _), su, iu = info[u]
        fv, cv, rv, (mv, _), sv, iv = info[v]
        same = fu == fv
        report.checked += 1
        checks = {
            "restriction": ru == rv,
            "involution": iu == iv,
        }
        m = max(mu, mv, 1)
        checks["packing"] = cu == cv and packed(u, m) == packed(v, m)
        r = max(len(u), len(v), 1)
        checks["standardisation"] = cu == cv and stdd(u, r) == stdd(v, r)
        for name, verdict in checks.items():
            if verdict != same:
                report.violations.append({"property": name, "u": list(u), "v": list(v)})
    return report


def charge_check(k: int, budget: Budget = DEFAULT_BUDGET) -> Report:
    """For every pair of standard words of each length up to ``k``: grammic
    equivalence implies equal charge sequences. Also records that the
    converse fails on 3412 / 1324."""
    report = Report("charge", budget={"k": k})
    for length in range(1, k + 1):
        perms = list(itertools.permutations(range(1, length + 1)))
        budget.check("words", len(perms))
        by_fp = defaultdict(set)
        for w in perms:
            by_fp[cached_fingerprint(w, length)].add(charge_sequence(w))
            report.checked += 1
        for seqs in by_fp.values():
            if len(seqs) > 1:
                report.violations.append({"length": length, "charge_sequences": sorted(seqs)})
    u, v = (3, 4, 1, 2), (1, 3, 2, 4)
    if charge_sequence(u) == charge_sequence(v) and not equiv(u, v, 4):
        report.notes.append("converse fails: 3412 and 1324 share charge sequence 0112 "
                            "but are not equivalent")
    else:
        report.violations.append({"converse_witness": [list(u), list(v)]})
    return report


def scan_two_column(n: int) -> Report:
    """Every quadruple of column words over ``[n]`` meeting the two-column
    preconditions and hypotheses (I)-(III) must give equivalent products."""
    report = Report("two-column", budget={"n": n})
    dominated = [(c1, c2) for c1, c2 in itertools.product(enumerate_columns(n), repeat=2)
                 if column_dominates(c1, c2)]
    by_cell = defaultdict(list)
    for c1, c2 in dominated:
        by_cell[(content_key(c1 + c2), c1[-1], c2[-1])].append((c1, c2))
    for cell in by_cell.values():
        for (c1, c2), (d1, d2) in itertools.permutations(cell, 2):
            if two_column_hypotheses(c1, c2, d1, d2) is None:
                continue
            report.checked += 1
            if not equiv(c1 + c2, d1 + d2, n):
                report.violations.append({"c": [list(c1), list(c2)], "d": [list(d1), list(d2)]})
    return report
