import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planarpalf import freegroup as fg


def w(text, rank=3):
    return fg.parse_word(text, rank)


def letters(rank):
    return st.lists(st.integers(1, rank).flatmap(lambda i: st.sampled_from((i, -i))), max_size=30)


def test_reduce_examples():
    assert fg.reduce([(1, "+"), (1, "-"), (2, "+")], 2).letters == (2,)
    assert fg.reduce([], 2).letters == ()
    assert fg.reduce([(1, "+"), (2, "+"), (2, "-"), (1, "-"), (3, "+")], 3).letters == (3,)


def test_reduce_rejects_out_of_range():
    with pytest.raises(fg.RankError):
        fg.reduce([4], 3)


def test_word_must_be_reduced():
    with pytest.raises(ValueError):
        fg.Word((1, -1), 2)


def test_concat_examples():
    assert fg.concat(w("x1"), w("X1")).is_identity()
    assert str(fg.concat(w("x1"), w("x2"))) == "x1x2"
    assert str(fg.concat(w("x1x2"), w("X2x3"))) == "x1x3"


def test_concat_rank_mismatch():
    with pytest.raises(fg.RankError):
        fg.concat(w("x1", 2), w("x1", 3))


def test_word_text_round_trip():
    assert str(w("x1x2X1")) == "x1x2X1"
    assert str(w("1")) == "1"
    with pytest.raises(ValueError):
        fg.parse_word("x1y2", 3)


@settings(max_examples=1000)
@given(letters(3))
def test_reduction_is_idempotent_and_confluent(raw):
    once = fg.free_reduce(raw)
    assert fg.free_reduce(once) == once
    assert all(a != -b for a, b in zip(once, once[1:]))
    # reducing any split separately and then together gives the same word
    k = len(raw) // 2
    assert fg.free_reduce(fg.free_reduce(raw[:k]) + fg.free_reduce(raw[k:])) == once


@given(letters(3), letters(3), letters(3))
def test_concat_associative(a, b, c):
    a, b, c = (fg.reduce(x, 3) for x in (a, b, c))
    assert (a * b) * c == a * (b * c)


@given(letters(3))
def test_inverse_word(raw):
    u = fg.reduce(raw, 3)
    assert (u * u.inverse()).is_identity()


def test_apply_examples():
    phi = fg.automorphism(2, [[1, 2], [2]], [[1, -2], [2]])
    assert str(fg.apply(phi, w("X1", 2))) == "X2X1"
    swap = fg.automorphism(2, [[2], [1]], [[2], [1]])
    assert str(fg.apply(swap, w("x1x2", 2))) == "x2x1"
    assert fg.apply(fg.identity(3), w("x1X3x2")) == w("x1X3x2")


def test_construction_checks_inverse():
    with pytest.raises(ValueError):
        fg.automorphism(2, [[1, 2], [2]], [[1, 2], [2]])


@given(letters(2), letters(2))
def test_apply_is_a_homomorphism(a, b):
    phi = fg.automorphism(2, [[1, 2, -1], [1]], [[2], [-2, 1, 2]])
    u, v = fg.reduce(a, 2), fg.reduce(b, 2)
    assert fg.apply(phi, u * v) == fg.apply(phi, u) * fg.apply(phi, v)


def test_compose_laws():
    phi = fg.automorphism(2, [[1, 2], [2]], [[1, -2], [2]])
    assert fg.equals(fg.compose(phi, fg.identity(2)), phi)
    assert fg.compose(phi, phi.inverse()).is_identity()
    u, v = w("x1x2"), w("X3")
    assert fg.equals(fg.compose(fg.conjugation(u), fg.conjugation(v)), fg.conjugation(u * v))


def test_compose_order():
    phi = fg.automorphism(2, [[1, 2], [2]], [[1, -2], [2]])
    swap = fg.automorphism(2, [[2], [1]], [[2], [1]])
    x1 = w("x1", 2)
    assert fg.apply(fg.compose(phi, swap), x1) == fg.apply(phi, fg.apply(swap, x1))


def test_equals_examples():
    phi = fg.conjugation(w("x2x1"))
    assert fg.equals(phi, phi)
    assert fg.equals(fg.identity(1), fg.conjugation(fg.generator(1, 1)))
    assert not fg.equals(fg.conjugation(fg.generator(1, 2)), fg.conjugation(fg.generator(2, 2)))
