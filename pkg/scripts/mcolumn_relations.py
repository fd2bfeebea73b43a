"""List m-column grammic relations and flag those not explained by the
two-column lemma."""

import argparse
import json

from grammic.errors import budget_from_env
from grammic.relations import enumerate_mcolumn_relations


def fmt(w):
    return "".join(map(str, w)) if max(w, default=0) <= 9 else ",".join(map(str, w))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("n", type=int)
    ap.add_argument("m", type=int)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    report = enumerate_mcolumn_relations(args.n, args.m, budget_from_env())
    if args.json:
        print(json.dumps(report.to_dict()))
        return
    print(f"{len(report.pairs)} relations, {len(report.explained)} explained, "
          f"{len(report.unexplained)} unexplained")
    for w, v in report.unexplained:
        print(f"  {fmt(w)} {fmt(v)}")


if __name__ == "__main__":
    main()
