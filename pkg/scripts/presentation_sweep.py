"""Does closing under Knuth + left patience sorting relations give the
grammic congruence? Sweep ranks and lengths and report any gap."""

import argparse
import json

from grammic.errors import budget_from_env
from grammic.relations import knuth_relations, lps_relations, presentation_gap


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-rank", type=int, default=4)
    ap.add_argument("--max-len", type=int, default=6)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    budget = budget_from_env()
    rows = []
    for n in range(1, args.max_rank + 1):
        rels = knuth_relations(n) | lps_relations(n)
        for k in range(args.max_len + 1):
            gap = sorted(presentation_gap(rels, n, k, budget))
            rows.append({"n": n, "k": k, "gap": len(gap),
                         "examples": [[list(u), list(v)] for u, v in gap[:3]]})
            if not args.json:
                ex = " ".join(f"{''.join(map(str, u))}~{''.join(map(str, v))}" for u, v in gap[:3])
                print(f"n={n} k={k} gap={len(gap)} {ex}")
    if args.json:
        print(json.dumps(rows))


if __name__ == "__main__":
    main()
