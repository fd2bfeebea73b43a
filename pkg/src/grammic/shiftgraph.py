"""Cyclic shift graphs on the classes of a fixed content.

Vertices are the classes of all words with a given content; classes A and B
are joined when some u v lies in A and v u lies in B for non-empty u, v.
The same construction with ``key=tableau_of`` gives the plactic graph.
"""

from __future__ import annotations

import json
from math import factorial
from dataclasses import dataclass
from typing import Callable, Mapping

import networkx as nx

from .congruence import cached_fingerprint
from .errors import DEFAULT_BUDGET, Budget
from .tableau import tableau_of
from .words import Word, check_rank, words_with_content


@dataclass
class ShiftGraph:
    content: dict
    graph: nx.Graph
    members: dict  # vertex key -> list of words

    def edge_list(self) -> str:
        lines = sorted(f"{a} {b}" for a, b in (sorted(e) for e in self.graph.edges))
        return "\n".join(lines) + ("\n" if lines else "")

    def summary(self) -> dict:
        return {
            "content": {str(a): c for a, c in self.content.items()},
            "components": [
                {"size": size, "diameter": d} for size, d in component_diameters(self)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.summary(), separators=(",", ":"))


def grammic_key(n: int) -> Callable[[Word], str]:
    return lambda w: cached_fingerprint(w, n).key()


def plactic_key(w: Word) -> str:
    return ",".join(".".join(map(str, r)) for r in tableau_of(w).rows)


def _multinomial(counts) -> int:
    total = factorial(sum(counts))
    for c in counts:
        total //= factorial(c)
    return total


def build_graph(n: int, content: Mapping[int, int], key=None,
                budget: Budget = DEFAULT_BUDGET) -> ShiftGraph:
    content = {a: c for a, c in sorted(content.items()) if c}
    check_rank(tuple(content), n)
    budget.check("words", _multinomial(content.values()))
    key = key or grammic_key(n)
    g = nx.Graph()
    members: dict = {}
    for w in words_with_content(content):
        a = key(w)
        g.add_node(a)
        members.setdefault(a, []).append(w)
        for i in range(1, len(w)):
            b = key(w[i:] + w[:i])
            if a != b:
                g.add_edge(a, b)
    return ShiftGraph(content, g, members)


def component_diameters(sg: ShiftGraph) -> list[tuple[int, int]]:
    """(size, diameter) for each connected component, largest first."""
    out = []
    for nodes in nx.connected_components(sg.graph):
        sub = sg.graph.subgraph(nodes)
        out.append((len(nodes), nx.diameter(sub) if len(nodes) > 1 else 0))
    out.sort(reverse=True)
    return out


def is_contraction(fine: ShiftGraph, coarse: ShiftGraph, project) -> bool:
    """Whether every edge of ``fine`` maps, under ``project`` applied to a
    member word, to an edge or a single vertex of ``coarse``."""
    image = {v: project(words[0]) for v, words in fine.members.items()}
    for a, b in fine.graph.edges:
        ia, ib = image[a], image[b]
        if ia != ib and not coarse.graph.has_edge(ia, ib):
            return False
    return True
