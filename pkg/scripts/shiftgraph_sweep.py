"""Maximum component diameter of the grammic cyclic shift graph over all
contents of bounded length."""

import argparse

from grammic.errors import budget_from_env
from grammic.shiftgraph import build_graph, component_diameters
from grammic.words import contents_of_length


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("n", type=int)
    ap.add_argument("--max-len", type=int, default=7)
    args = ap.parse_args()
    budget = budget_from_env()
    for k in range(1, args.max_len + 1):
        best, where = -1, None
        for c in contents_of_length(args.n, k):
            d = max(d for _, d in component_diameters(build_graph(args.n, c, budget=budget)))
            if d > best:
                best, where = d, c
        print(f"k={k} max diameter {best} at content {where}")


if __name__ == "__main__":
    main()
