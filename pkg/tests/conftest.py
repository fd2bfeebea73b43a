import itertools

import hypothesis.strategies as st
from hypothesis import settings

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@st.composite
def ranked_words(draw, max_rank=6, max_len=20, min_len=0):
    n = draw(st.integers(1, max_rank))
    w = draw(st.lists(st.integers(1, n), min_size=min_len, max_size=max_len))
    return tuple(w), n


def words_over(n, max_len=12, min_len=0):
    return st.lists(st.integers(1, n), min_size=min_len, max_size=max_len).map(tuple)


def brute_wis(w, p, q):
    """Longest weakly increasing subsequence in [p, q] by trying every subset."""
    best = 0
    for size in range(len(w), 0, -1):
        for idx in itertools.combinations(range(len(w)), size):
            s = [w[i] for i in idx]
            if all(p <= a <= q for a in s) and all(a <= b for a, b in zip(s, s[1:])):
                return size
    return best
