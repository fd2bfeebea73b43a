import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from grammic.errors import GrammicError, MisuseError
from grammic.identities import (Identity, falsify, falsify_unbalanced, holds_under,
                                identities_up_to, is_balanced, min_length_check, substitute)


def test_parse_and_validate():
    i = Identity.parse("xyyx = yxxy")
    assert (i.lhs, i.rhs) == ("xyyx", "yxxy")
    with pytest.raises(GrammicError):
        Identity.parse("xy")
    with pytest.raises(GrammicError):
        Identity.parse("=x")
    with pytest.raises(GrammicError):
        Identity.parse("x1=x")


def test_substitute():
    assert substitute(Identity("xy", "yx"), {"x": (1,), "y": (2,)}) == ((1, 2), (2, 1))
    u, v = substitute(Identity("x", "x"), {"x": (3, 1)})
    assert u == v
    with pytest.raises(GrammicError):
        substitute(Identity("xy", "yx"), {"x": (1,)})
    with pytest.raises(GrammicError):
        substitute(Identity("xy", "yx"), {"x": (1,), "y": ()})


def test_commuting_equivalent_words():
    asg = {"x": (3, 2, 1, 2), "y": (2, 1, 3, 2)}
    assert holds_under(Identity("x", "y"), asg, 3)


@given(st.text("xyz", min_size=1, max_size=6), st.text("xyz", min_size=1, max_size=6),
       st.lists(st.integers(1, 3), min_size=1, max_size=3))
def test_substitute_is_homomorphic(lhs, rhs, piece):
    asg = {x: tuple(piece) + (i + 1,) for i, x in enumerate("xyz")}
    u, _ = substitute(Identity(lhs, rhs), asg)
    assert u == tuple(a for x in lhs for a in asg[x])


def test_is_balanced():
    assert is_balanced(Identity("xy", "yx"))
    assert not is_balanced(Identity("xxy", "xyy"))
    assert is_balanced(Identity("xyyxxyxyyx", "xyyxyxxyyx"))


def test_falsify_examples():
    assert falsify(Identity("xy", "yx"), 2, 1) == {"x": (1,), "y": (2,)}
    assert falsify(Identity("x", "x"), 3, 2) is None


def test_falsify_deterministic():
    i = Identity("xyx", "xxy")
    assert falsify(i, 4, 2) == falsify(i, 4, 2)


def test_falsify_unbalanced_examples():
    assert falsify_unbalanced(Identity("xxy", "xyy"), 3) == {"x": (1, 1), "y": (1,)}
    assert falsify_unbalanced(Identity("xy", "x"), 2) == {"x": (1,), "y": (1,)}
    with pytest.raises(MisuseError):
        falsify_unbalanced(Identity("xyx", "xxy"), 3)


def test_every_short_unbalanced_identity_falsified():
    count = 0
    for i in identities_up_to(5):
        if len(i.variables) <= 3 and not is_balanced(i):
            assert not holds_under(i, falsify_unbalanced(i, 2), 2)
            count += 1
    assert count > 0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_min_length(n):
    report = min_length_check(n)
    assert report.ok
    assert report.witnesses


def test_min_length_rank3_commutation():
    report = min_length_check(3)
    witnesses = {str(i): a for i, a in report.witnesses}
    assert witnesses["ab=ba"] == {"a": (1,), "b": (2,)}


def test_rank4_identity_falsified():
    assert falsify(Identity("xyx", "xxy"), 4, 1) is not None


@settings(max_examples=60)
@given(st.text("xy", min_size=1, max_size=10), st.text("xy", min_size=1, max_size=10))
def test_identities_surviving_search_are_balanced(lhs, rhs):
    identity = Identity(lhs, rhs)
    if falsify(identity, 2, 2) is None:
        assert is_balanced(identity)
