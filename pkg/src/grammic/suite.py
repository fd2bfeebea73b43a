"""Bounded verification of the main results, one function per check.

Each check returns a ``CheckResult``; ``run_all`` drives them for the
``verify-suite`` command and the acceptance tests.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .congruence import act_word, equiv, oracle_signature
from .errors import HypothesisError
from .identities import (falsify_unbalanced, identities_up_to, is_balanced,
                         min_length_check)
from .relations import (charge_check, choffrut_rank3, choffrut_rank4_pairs,
                        compatibility_suite, knuth_relations, lps_relations,
                        presentation_gap, prop_rel_check)
from .shiftgraph import build_graph, component_diameters
from .tableau import bottom_row_vector, tableau_of
from .tropical import bottom_via_X, fingerprint, trop_mul, wis_length
from .words import (charge, charge_sequence, contents_of_length, restrict, words_of_length,
                    words_up_to)


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int = 0
    detail: list = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({'; '.join(map(str, self.detail[:3]))})" if self.detail else ""
        return f"[{status}] {self.name}: {self.checked} cases in {self.seconds:.1f}s{extra}"

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "detail": [str(d) for d in self.detail], "seconds": round(self.seconds, 3)}


def _timed(fn):
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        result = fn(*args, **kwargs)
        result.seconds = time.perf_counter() - start
        return result

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _random_word(rng, n, max_len):
    return tuple(rng.randint(1, n) for _ in range(rng.randint(0, max_len)))


@_timed
def main_theorem(cases=((2, 6), (3, 5), (4, 4))) -> CheckResult:
    """Fingerprint equality agrees with the row-action oracle on every ordered
    pair of equal-length words."""
    res = CheckResult("main theorem: equiv == equiv_oracle", True)
    for n, kmax in cases:
        for k in range(kmax + 1):
            words = list(words_of_length(n, k))
            sig = {w: oracle_signature(w, n) for w in words}
            for u, v in itertools.product(words, repeat=2):
                res.checked += 1
                if equiv(u, v, n) != (sig[u] == sig[v]):
                    res.passed = False
                    res.detail.append((n, u, v))
    return res


@_timed
def morphism(exhaustive=(3, 4), fuzz=10_000, fuzz_rank=6, fuzz_len=30, seed=0) -> CheckResult:
    res = CheckResult("morphism: fp(uv) == fp(u) (x) fp(v)", True)
    n, kmax = exhaustive
    words = list(words_up_to(n, kmax))
    fps = {w: fingerprint(w, n) for w in words}
    for u, v in itertools.product(words, repeat=2):
        res.checked += 1
        if fingerprint(u + v, n) != trop_mul(fps[u], fps[v]):
            res.passed = False
            res.detail.append((n, u, v))
    rng = random.Random(seed)
    for _ in range(fuzz):
        n = rng.randint(1, fuzz_rank)
        u, v = _random_word(rng, n, fuzz_len), _random_word(rng, n, fuzz_len)
        res.checked += 1
        if fingerprint(u + v, n) != trop_mul(fingerprint(u, n), fingerprint(v, n)):
            res.passed = False
            res.detail.append((n, u, v))
    return res


@_timed
def bottom_row_identity(exhaustive=(4, 6), fuzz=10_000, fuzz_rank=6, fuzz_len=30,
                        seed=1) -> CheckResult:
    res = CheckResult("B(u) == T(u) X", True)
    n, kmax = exhaustive

    def check(w, n):
        res.checked += 1
        if bottom_via_X(w, n) != bottom_row_vector(tableau_of(w), n):
            res.passed = False
            res.detail.append((n, w))

    for k in range(1, kmax + 1):
        for w in words_of_length(n, k):
            check(w, n)
    rng = random.Random(seed)
    for _ in range(fuzz):
        n = rng.randint(1, fuzz_rank)
        w = ()
        while not w:
            w = _random_word(rng, n, fuzz_len)
        check(w, n)
    return res


@_timed
def worked_examples() -> CheckResult:
    res = CheckResult("worked examples", True)
    u = (7, 8, 4, 6, 3, 5, 7, 2, 2, 5, 6)
    bar = restrict(u, 6, 8)
    expectations = [
        ("P(78463572256)", tableau_of(u).rows, ((2, 2, 5, 6), (3, 5, 7), (4, 6), (7, 8))),
        ("w_{3,5}(1535372549)", wis_length((1, 5, 3, 5, 3, 7, 2, 5, 4, 9), 3, 5), 3),
        ("restriction to [6,8]", bar, (7, 8, 6, 7, 6)),
        ("bottom row of P(78676)", tableau_of(bar).bottom_row, (6, 6)),
        ("row action on 666", act_word((0, 0, 0, 0, 0, 3, 0, 0), u), (0, 2, 0, 0, 1, 2, 0, 0)),
        ("chseq(82456137)", charge_sequence((8, 2, 4, 5, 6, 1, 3, 7)), (0, 0, 1, 1, 2, 3, 4, 4)),
        ("charge(82456137)", charge((8, 2, 4, 5, 6, 1, 3, 7)), 15),
        ("chseq(3412)", charge_sequence((3, 4, 1, 2)), (0, 1, 1, 2)),
        ("chseq(1324)", charge_sequence((1, 3, 2, 4)), (0, 1, 1, 2)),
        ("3412 vs 1324", equiv((3, 4, 1, 2), (1, 3, 2, 4), 4), False),
    ]
    for label, got, want in expectations:
        res.checked += 1
        if got != want:
            res.passed = False
            res.detail.append(f"{label}: got {got}, want {want}")
    return res


@_timed
def rank3_presentation(kmax=6) -> CheckResult:
    res = CheckResult("rank-3 presentation", True)
    rels = knuth_relations(3) | choffrut_rank3()
    for k in range(kmax + 1):
        res.checked += 1
        gap = presentation_gap(rels, 3, k)
        if gap:
            res.passed = False
            res.detail.append(f"k={k}: {len(gap)} missing pairs")
    gap = presentation_gap(knuth_relations(3), 3, 4)
    res.checked += 1
    if ((2, 1, 3, 2), (3, 2, 1, 2)) not in gap:
        res.passed = False
        res.detail.append("Knuth relations alone do not leave (3212, 2132) apart")
    return res


@_timed
def compatibility(n=3, k=5) -> CheckResult:
    report = compatibility_suite(n, k)
    return CheckResult("compatibility (restriction, packing, std, involution)",
                       report.ok, report.checked, report.violations[:5])


@_timed
def relation_families(max_n=4, max_m=3, fuzz=1000, seed=2) -> CheckResult:
    res = CheckResult("relation families", True)
    for n in range(1, max_n + 1):
        for lhs, rhs in (knuth_relations(n) | lps_relations(n, max_m)).pairs:
            res.checked += 1
            if not equiv(lhs, rhs, n):
                res.passed = False
                res.detail.append((n, lhs, rhs))
    rng = random.Random(seed)
    done = 0
    while done < fuzz:
        w, u, v, n = random_prop_rel_triple(rng)
        try:
            ok = prop_rel_check(w, u, v, n)
        except HypothesisError:
            continue
        done += 1
        res.checked += 1
        if not ok:
            res.passed = False
            res.detail.append(("prop", w, u, v))
    for lhs, rhs in choffrut_rank4_pairs(4):
        res.checked += 1
        if not equiv(lhs, rhs, 4):
            res.passed = False
            res.detail.append(("choffrut", lhs, rhs))
    return res


def random_prop_rel_triple(rng, max_rank=7):
    """A random (w, u, v, n) satisfying the wuv == wvu hypotheses."""
    n = rng.randint(2, max_rank)
    y = rng.randint(2, n)
    v = tuple(rng.randint(1, y - 1) for _ in range(rng.randint(0, 4)))
    u = tuple(rng.randint(y, n) for _ in range(rng.randint(0, 5)))
    w = [y] * max(1, len(v) + rng.randint(0, 2))
    w += [rng.randint(y, n) for _ in range(rng.randint(0, 4))]
    rng.shuffle(w)
    return tuple(w), u, v, n


@_timed
def charge_sequences(k=6) -> CheckResult:
    report = charge_check(k)
    return CheckResult("charge sequences", report.ok, report.checked, report.violations[:5])


@_timed
def identity_corollaries(ranks=(3, 4, 5)) -> CheckResult:
    res = CheckResult("identity corollaries", True)
    for identity in identities_up_to(5):
        if len(identity.variables) > 3 or is_balanced(identity):
            continue
        for n in (1, 2, 3):
            res.checked += 1
            try:
                falsify_unbalanced(identity, n)
            except AssertionError as exc:
                res.passed = False
                res.detail.append(str(exc))
    for n in ranks:
        report = min_length_check(n)
        res.checked += len(report.witnesses) + len(report.unresolved)
        if not report.ok:
            res.passed = False
            res.detail.extend(f"n={n}: {i}" for i in report.unresolved)
    return res


@_timed
def shift_graph(n=3, kmax=7) -> CheckResult:
    res = CheckResult(f"shift graph diameters in [{n - 1}, {2 * n - 3}]", True)
    best = 0
    for k in range(1, kmax + 1):
        for c in contents_of_length(n, k):
            res.checked += 1
            best = max(best, max(d for _, d in component_diameters(build_graph(n, c))))
    res.detail.append(f"max diameter {best}")
    res.passed = n - 1 <= best <= 2 * n - 3
    return res


@_timed
def rank_stability_check(n=3, kmax=4) -> CheckResult:
    res = CheckResult("rank stability of the oracle", True)
    for k in range(kmax + 1):
        words = list(words_of_length(n, k))
        low = {w: oracle_signature(w, n) for w in words}
        high = {w: oracle_signature(w, n + 1) for w in words}
        for u, v in itertools.product(words, repeat=2):
            res.checked += 1
            if (low[u] == low[v]) != (high[u] == high[v]):
                res.passed = False
                res.detail.append((u, v))
    return res


CHECKS = [
    main_theorem,
    morphism,
    bottom_row_identity,
    worked_examples,
    rank3_presentation,
    compatibility,
    relation_families,
    charge_sequences,
    identity_corollaries,
    shift_graph,
    rank_stability_check,
]


def run_all(report=print) -> list[CheckResult]:
    results = []
    for check in CHECKS:
        result = check()
        results.append(result)
        if report:
            report(result.line())
    return results
