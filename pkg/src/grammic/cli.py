"""Command-line interface: ``grammic <subcommand> ...``.

Exit status is 0 on success, 1 when a checked property is violated and 2 on
usage or budget errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass

from . import relations as rel
from .congruence import act_word, enumerate_classes, equiv, equiv_oracle
from .errors import Budget, BudgetExceeded, GrammicError, budget_from_env
from .identities import Identity, falsify, falsify_unbalanced, is_balanced
from .shiftgraph import build_graph
from .suite import run_all
from .tableau import tableau_of
from .tropical import fingerprint
from .words import (charge, charge_sequence, check_rank, involute, pack, rank_of, restrict,
                    standardise)


class UsageError(GrammicError):
    pass


@dataclass(frozen=True)
class Config:
    rank: int | None = None
    budget: Budget = Budget()
    json: bool = False
    jobs: int = 1

    def __post_init__(self):
        if self.rank is not None and self.rank < 1:
            raise UsageError("--rank must be >= 1")
        if self.jobs < 1:
            raise UsageError("--jobs must be >= 1")


def parse_word(text: str, rank: int | None = None) -> tuple[int, ...]:
    """Comma/whitespace separated integers, or a bare digit string when the
    rank is at most 9. ``""`` and ``"e"`` denote the empty word."""
    text = text.strip()
    if text in ("", "e", "ε"):
        return ()
    if re.search(r"[\s,]", text):
        parts = [p for p in re.split(r"[\s,]+", text) if p]
        if not all(p.isdigit() for p in parts):
            raise UsageError(f"malformed word {text!r}")
        w = tuple(int(p) for p in parts)
    elif text.isdigit():
        if rank is not None and rank > 9:
            raise UsageError(
                f"bare digit string {text!r} is ambiguous for rank {rank}; separate letters with commas"
            )
        w = tuple(int(ch) for ch in text)
    else:
        raise UsageError(f"malformed word {text!r}")
    if any(a < 1 for a in w):
        raise UsageError(f"letters must be positive in {text!r}")
    return w


def format_word(w) -> str:
    if not w:
        return "ε"
    if max(w) <= 9:
        return "".join(map(str, w))
    return ",".join(map(str, w))


def _emit(cfg: Config, data, human: str) -> None:
    if cfg.json:
        print(json.dumps(data, separators=(",", ":")))
    else:
        print(human)


def _rank(cfg: Config, *words) -> int:
    n = cfg.rank if cfg.rank is not None else rank_of(*words)
    for w in words:
        check_rank(w, n)
    return n


def _words(cfg: Config, *texts):
    return [parse_word(t, cfg.rank) for t in texts]


def cmd_insert(args, cfg):
    (w,) = _words(cfg, args.word)
    t = tableau_of(w)
    _emit(cfg, {"rows": [list(r) for r in t.rows]}, str(t) if t.rows else "∅")
    return 0


def cmd_fingerprint(args, cfg):
    (w,) = _words(cfg, args.word)
    print(fingerprint(w, _rank(cfg, w)).to_json())
    return 0


def cmd_equiv(args, cfg, decide=equiv):
    u, v = _words(cfg, args.u, args.v)
    n = _rank(cfg, u, v)
    if decide is equiv_oracle:
        same = decide(u, v, n, cfg.budget)
    else:
        same = decide(u, v, n)
    _emit(cfg, {"u": list(u), "v": list(v), "rank": n, "equivalent": same},
          "equivalent" if same else "not equivalent")
    return 0


def cmd_act(args, cfg):
    gamma = tuple(int(x) for x in re.split(r"[\s,]+", args.gamma.strip()) if x)
    if any(g < 0 for g in gamma) or not gamma:
        raise UsageError(f"malformed row {args.gamma!r}")
    w = parse_word(args.word, len(gamma))
    out = act_word(gamma, w)
    _emit(cfg, {"gamma": list(gamma), "word": list(w), "result": list(out)},
          ",".join(map(str, out)))
    return 0


def cmd_chseq(args, cfg):
    (w,) = _words(cfg, args.word)
    seq = charge_sequence(w)
    _emit(cfg, {"chseq": list(seq), "charge": charge(w)},
          f"{''.join(map(str, seq)) if max(seq, default=0) <= 9 else seq} (charge {sum(seq)})")
    return 0


def cmd_transform(args, cfg):
    (w,) = _words(cfg, args.word)
    if args.kind == "pack":
        out = pack(w)
    elif args.kind == "std":
        out = standardise(w)
    elif args.kind == "involute":
        if cfg.rank is None:
            raise UsageError("involute needs an explicit --rank")
        out = involute(w, cfg.rank)
    else:
        out = restrict(w, args.lo, args.hi)
    _emit(cfg, {"word": list(out)}, format_word(out))
    return 0


def cmd_classes(args, cfg):
    classes = enumerate_classes(args.n, args.k, cfg.budget, jobs=cfg.jobs)
    data = [
        {"fingerprint": json.loads(c.canonical.to_json()),
         "words": [list(w) for w in sorted(c.representatives)]}
        for c in classes
    ]
    human = "\n".join(" ".join(format_word(w) for w in sorted(c.representatives))
                      for c in classes)
    _emit(cfg, {"n": args.n, "k": args.k, "classes": data}, human)
    return 0


def load_relset(name: str, n: int) -> rel.RelationSet:
    """``knuth``, ``lps``, ``choffrut3``, ``choffrut4``, unions joined by
    ``+``, or a path to a JSON file of [lhs, rhs] pairs."""
    out = None
    for part in name.split("+"):
        if part == "knuth":
            rs = rel.knuth_relations(n)
        elif part == "lps":
            rs = rel.lps_relations(n)
        elif part == "choffrut3":
            rs = rel.choffrut_rank3()
        elif part == "choffrut4":
            rs = rel.relation_set("choffrut4", rel.choffrut_rank4_pairs(n), n)
        else:
            try:
                with open(part) as fh:
                    rs = rel.RelationSet.from_json(fh.read(), name=part, rank=n)
            except OSError as exc:
                raise UsageError(f"unknown relation set {part!r}") from exc
        out = rs if out is None else out | rs
    return out


def cmd_presentation(args, cfg):
    rels = load_relset(args.relset, args.n)
    gap = sorted(rel.presentation_gap(rels, args.n, args.k, cfg.budget))
    human = (f"no gap up to length {args.k}" if not gap else
             "\n".join(f"{format_word(u)} {format_word(v)}" for u, v in gap))
    _emit(cfg, {"relations": rels.name, "n": args.n, "k": args.k,
                "gap": [[list(u), list(v)] for u, v in gap]}, human)
    return 0


def cmd_relations(args, cfg):
    if args.family == "knuth":
        rs = rel.knuth_relations(args.n)
    elif args.family == "lps":
        rs = rel.lps_relations(args.n, args.max_m)
    elif args.family == "m-column":
        report = rel.enumerate_mcolumn_relations(args.n, args.m, cfg.budget)
        human = "\n".join(f"{format_word(w)} {format_word(v)}" for w, v in report.pairs)
        _emit(cfg, report.to_dict(), human)
        return 0
    else:
        c1, c2, d1, d2 = _words(cfg, *args.columns)
        n = _rank(cfg, c1, c2, d1, d2)
        try:
            result = rel.two_column_check(c1, c2, d1, d2, n)
        except AssertionError as exc:
            print(f"violation: {exc}", file=sys.stderr)
            return 1
        _emit(cfg, {"equivalent": result}, "equivalent" if result else "not equivalent")
        return 0
    print(rs.to_json() if cfg.json else
          "\n".join(f"{format_word(l)} {format_word(r)}" for l, r in sorted(rs.pairs)))
    return 0


def cmd_identity(args, cfg):
    identity = Identity.parse(args.identity)
    n = cfg.rank or 2
    balanced = is_balanced(identity)
    if args.action == "falsify" and not balanced:
        witness = falsify_unbalanced(identity, n)
    else:
        witness = falsify(identity, n, args.max_len, cfg.budget)
    data = {
        "identity": str(identity),
        "rank": n,
        "balanced": balanced,
        "max_len": args.max_len,
        "witness": None if witness is None else {x: list(w) for x, w in witness.items()},
    }
    if witness is None:
        human = f"no counterexample with words of length <= {args.max_len}"
    else:
        human = "falsified by " + ", ".join(f"{x}->{format_word(w)}" for x, w in witness.items())
    _emit(cfg, data, human)
    return 0


def parse_content(text: str) -> dict[int, int]:
    """``1:1,2:2,3:1`` or a plain count vector ``1,2,1``."""
    items = [p for p in re.split(r"[\s,]+", text.strip()) if p]
    try:
        if all(":" in p for p in items):
            return {int(a): int(c) for a, c in (p.split(":") for p in items)}
        return {a: int(c) for a, c in enumerate(items, start=1)}
    except ValueError as exc:
        raise UsageError(f"malformed content {text!r}") from exc


def cmd_shiftgraph(args, cfg):
    g = build_graph(args.n, parse_content(args.content), budget=cfg.budget)
    if args.edges:
        with open(args.edges, "w") as fh:
            fh.write(g.edge_list())
    summary = g.summary()
    human = "\n".join(f"component size {c['size']} diameter {c['diameter']}"
                      for c in summary["components"])
    _emit(cfg, summary, human)
    return 0


def cmd_verify(args, cfg):
    if cfg.json:
        results = run_all(report=None)
        print(json.dumps([r.to_dict() for r in results], separators=(",", ":")))
    else:
        results = run_all()
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank", type=int, default=argparse.SUPPRESS)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="grammic", description=__doc__.splitlines()[0])
    parser.add_argument("--rank", type=int, default=None)
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--jobs", type=int, default=1)
    sub = parser.add_subparsers(dest="command", required=True)

    def sub_parser(group, name, **kw):
        return group.add_parser(name, parents=[common], **kw)

    def add(name, fn, *positionals, **kw):
        p = sub_parser(sub, name, **kw)
        for pos in positionals:
            p.add_argument(pos)
        p.set_defaults(func=fn)
        return p

    add("insert", cmd_insert, "word", help="Schensted tableau P(word)")
    add("fingerprint", cmd_fingerprint, "word", help="tropical fingerprint as JSON")
    add("equiv", cmd_equiv, "u", "v", help="grammic equivalence via fingerprints")
    add("oracle", lambda a, c: cmd_equiv(a, c, equiv_oracle), "u", "v",
        help="grammic equivalence via the row action")
    add("act", cmd_act, "gamma", "word", help="act on a bottom row")
    add("chseq", cmd_chseq, "word", help="charge sequence of a standard word")

    p = sub_parser(sub, "transform", help="pack, std, involute or restrict a word")
    tsub = p.add_subparsers(dest="kind", required=True)
    for kind in ("pack", "std", "involute"):
        sub_parser(tsub, kind).add_argument("word")
    r = sub_parser(tsub, "restrict")
    r.add_argument("lo", type=int)
    r.add_argument("hi", type=int)
    r.add_argument("word")
    p.set_defaults(func=cmd_transform)

    p = add("classes", cmd_classes, help="grammic classes of [n]^k")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)

    p = add("presentation", cmd_presentation, "relset",
            help="equivalent pairs not identified by a relation set")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)

    p = sub_parser(sub, "relations", help="relation families")
    rsub = p.add_subparsers(dest="family", required=True)
    k = sub_parser(rsub, "knuth")
    k.add_argument("n", type=int)
    lp = sub_parser(rsub, "lps")
    lp.add_argument("n", type=int)
    lp.add_argument("--max-m", type=int, default=None)
    tc = sub_parser(rsub, "two-column")
    tc.add_argument("columns", nargs=4, metavar="COL")
    mc = sub_parser(rsub, "m-column")
    mc.add_argument("n", type=int)
    mc.add_argument("m", type=int)
    p.set_defaults(func=cmd_relations)

    p = add("identity", cmd_identity, help="falsification search for an identity")
    p.add_argument("action", choices=["check", "falsify"])
    p.add_argument("identity")
    p.add_argument("--max-len", type=int, default=2)

    p = add("shiftgraph", cmd_shiftgraph, help="cyclic shift graph of a content")
    p.add_argument("n", type=int)
    p.add_argument("content")
    p.add_argument("--edges", help="write the edge list to this file")

    add("verify-suite", cmd_verify, help="run every bounded verification check")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = Config(args.rank, budget_from_env(), args.json, args.jobs)
        return args.func(args, cfg)
    except BudgetExceeded as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"property violation: {exc}", file=sys.stderr)
        return 1
    except GrammicError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
