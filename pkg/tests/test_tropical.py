import itertools

import pytest
from hypothesis import given
import hypothesis.strategies as st

from grammic.errors import EmptyWordError, InvalidIntervalError, RankError
from grammic.tableau import bottom_row_vector, tableau_of
from grammic.tropical import (UTMatrix, anti_diagonal_flip, bottom_via_X,
                              check_fingerprint_shape, fingerprint, fingerprint_dp, generator,
                              identity, t_add, t_mul, top_row, trop_mul, wis_length)
from grammic.words import content, involute, words_of_length, words_up_to

from conftest import brute_wis, ranked_words

U = (7, 8, 4, 6, 3, 5, 7, 2, 2, 5, 6)
W = (1, 5, 3, 5, 3, 7, 2, 5, 4, 9)


def test_semiring_ops():
    assert t_add(None, 3) == t_add(3, None) == 3
    assert t_add(None, None) is None
    assert t_mul(None, 3) is None and t_mul(2, None) is None
    assert t_mul(2, 3) == 5 and t_add(2, 3) == 3


def test_identity_is_two_sided():
    for n in range(1, 5):
        for w in words_up_to(n, 3):
            a = fingerprint(w, n)
            assert trop_mul(a, identity(n)) == a == trop_mul(identity(n), a)


def test_trop_mul_small_case():
    prod = trop_mul(fingerprint((1, 2), 2), fingerprint((1,), 2))
    assert prod[1, 2] == 2 and prod[1, 1] == 2 and prod[2, 2] == 1
    assert prod == fingerprint_dp((1, 2, 1), 2)


def test_neg_inf_row_absorbs():
    a = UTMatrix(2, ((None, None), (None, 0)))
    b = fingerprint((1, 2, 2), 2)
    assert trop_mul(a, b).entries[0] == (None, None)


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        trop_mul(identity(2), identity(3))


def test_below_diagonal_must_be_neg_inf():
    with pytest.raises(ValueError):
        UTMatrix(2, ((0, 0), (0, 0)))


def test_wis_length_examples():
    assert wis_length(W, 3, 5) == 3
    assert wis_length((), 1, 4) == 0
    assert wis_length(U, 6, 8) == 2
    assert wis_length((1, 3, 2, 4), 1, 4) == 3
    with pytest.raises(InvalidIntervalError):
        wis_length(W, 5, 3)


def test_wis_length_against_subset_enumeration():
    for k in range(8):
        for w in words_of_length(3, k):
            for p in range(1, 4):
                for q in range(p, 4):
                    assert wis_length(w, p, q) == brute_wis(w, p, q)


def test_fingerprint_examples():
    assert fingerprint((), 3) == identity(3)
    assert fingerprint((3, 4, 1, 2), 4)[1, 4] == 2
    assert fingerprint((1, 3, 2, 4), 4)[1, 4] == 3
    assert fingerprint(W, 9)[3, 5] == 3
    with pytest.raises(RankError):
        fingerprint((5,), 4)


@pytest.mark.parametrize("n", [1, 3, 5])
def test_single_letter_fingerprints(n):
    for a in range(1, n + 1):
        m = fingerprint((a,), n)
        assert m == generator(a, n)
        for p in range(1, n + 1):
            for q in range(p, n + 1):
                assert m[p, q] == int(p <= a <= q)


def test_top_row_and_bottom_via_x():
    assert top_row(U, 8) == (0, 2, 2, 2, 3, 4, 4, 4)
    assert top_row((1,), 4) == (1, 1, 1, 1)
    assert top_row((7, 8, 6, 7, 6), 8) == (0, 0, 0, 0, 0, 2, 2, 2)
    assert bottom_via_X(U, 8) == (0, 2, 0, 0, 1, 1, 0, 0)
    assert bottom_via_X((7, 8, 6, 7, 6), 8) == (0, 0, 0, 0, 0, 2, 0, 0)
    for a in range(1, 6):
        assert bottom_via_X((a,), 5) == tuple(int(i == a) for i in range(1, 6))
    with pytest.raises(EmptyWordError):
        top_row((), 3)


def test_morphism_exhaustive_rank4():
    words = list(words_up_to(4, 3))
    fps = {w: fingerprint(w, 4) for w in words}
    for u, v in itertools.product(words, repeat=2):
        assert fingerprint(u + v, 4) == trop_mul(fps[u], fps[v])


@given(ranked_words(max_len=30), st.data())
def test_product_equals_dp(wn, data):
    w, n = wn
    assert fingerprint(w, n) == fingerprint_dp(w, n)


@given(ranked_words(max_len=25))
def test_fingerprint_invariants(wn):
    w, n = wn
    assert check_fingerprint_shape(fingerprint(w, n), len(w), content(w)) == []


@given(ranked_words(max_len=25))
def test_anti_diagonal_flip_matches_involution(wn):
    w, n = wn
    assert fingerprint(involute(w, n), n) == anti_diagonal_flip(fingerprint(w, n))


def test_bottom_row_identity_exhaustive_rank5():
    for k in range(1, 7):
        for w in words_of_length(5, k):
            assert bottom_via_X(w, 5) == bottom_row_vector(tableau_of(w), 5)


def test_plactic_invariance_under_knuth_rewrites():
    n = 4
    moves = []
    for x, y, z in itertools.product(range(1, n + 1), repeat=3):
        if x < y <= z:
            moves.append(((y, z, x), (y, x, z)))
        if x <= y < z:
            moves.append(((z, x, y), (x, z, y)))
    for k in range(3, 8):
        words = words_of_length(n, k) if k <= 6 else _sample(n, k)
        for w in words:
            fw = fingerprint(w, n)
            for i in range(k - 2):
                for l, r in moves:
                    if w[i:i + 3] == l:
                        rewritten = w[:i] + r + w[i + 3:]
                        assert tableau_of(rewritten) == tableau_of(w)
                        assert fingerprint(rewritten, n) == fw


def _sample(n, k, count=3000):
    import random
    rng = random.Random(k)
    return [tuple(rng.randint(1, n) for _ in range(k)) for _ in range(count)]


def test_json_round_trip():
    for w, n in [((), 3), (W, 9), ((2, 1), 2)]:
        m = fingerprint(w, n)
        text = m.to_json()
        assert UTMatrix.from_json(text) == m
        assert UTMatrix.from_json(text).to_json() == text
    assert '"entries":[[0,null],[null,0]]' in identity(2).to_json()
