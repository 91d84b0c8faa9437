import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from planarpalf import freegroup as fg
from planarpalf.curves import FiberModel, StandardCurve, all_curves, disjoint
from planarpalf.mcg import (
    BraidError,
    BraidWord,
    artin_action,
    braid_mapping_class,
    compose_all_mc,
    compose_mc,
    dehn_twist,
    equals_mc,
    gathering_braid,
    identity_mc,
    lantern_sides,
)


def t(*holes, h=3, sign=1):
    return dehn_twist(StandardCurve(holes), FiberModel(h), sign)


def images(g):
    return [str(x) for x in g.aut.forward]


def test_artin_generator():
    a = artin_action(BraidWord([1], 2))
    assert [str(x) for x in a.forward] == ["x1x2X1", "x1"]
    assert artin_action(BraidWord([1, -1], 2)).is_identity()


def test_braid_relation_rank3():
    assert fg.equals(artin_action(BraidWord([1, 2, 1], 3)), artin_action(BraidWord([2, 1, 2], 3)))


def test_braid_letter_out_of_range():
    with pytest.raises(BraidError):
        BraidWord([3], 3)


def test_braid_mapping_class_needs_pure_braid():
    with pytest.raises(BraidError):
        braid_mapping_class(BraidWord([1], 2))
    assert braid_mapping_class(BraidWord([1, 1], 2)).framing == (0, 0)


def test_boundary_parallel_twist():
    g = t(1, h=4)
    assert g.aut.is_identity()
    assert g.framing == (1, 0, 0, 0)


def test_block_twist_formula():
    g = t(1, 2, h=2)
    # x2 -> (x1x2) x2 (x1x2)^-1 reduces to x1x2X1
    assert images(g) == ["x1x2x1X2X1", "x1x2X1"]
    assert g.framing == (1, 1)


def test_gathering_braid_moves_strands_into_a_block():
    braid, block = gathering_braid(StandardCurve([1, 3, 5]), 5)
    assert block.enclosed == (1, 2, 3)
    assert all(x > 0 for x in braid.letters)


def test_lantern():
    lhs, rhs = lantern_sides()
    assert equals_mc(lhs, rhs)
    assert lhs.framing == rhs.framing == (2, 2, 2)


def test_lantern_fails_for_a_wrong_order_of_an_inner_curve():
    # a sanity check that the comparison is not vacuous
    lhs, _ = lantern_sides()
    wrong = compose_all_mc([t(1, 3), t(1, 2), t(2, 3)], 3)
    assert wrong.framing == lhs.framing
    assert not equals_mc(lhs, wrong)


def test_compose_examples():
    g = t(1, 3, h=4)
    assert equals_mc(compose_mc(g, identity_mc(4)), g)
    assert compose_mc(g, t(1, 3, h=4, sign=-1)).is_identity()
    assert compose_mc(t(1), t(1)).framing == (2, 0, 0)
    assert not equals_mc(t(1, 3), t(2))


def test_compose_rank_mismatch():
    with pytest.raises(fg.RankError):
        compose_mc(t(1, h=2), t(1, h=3))


@pytest.mark.parametrize("h", [1, 2, 3, 4, 5])
def test_disjoint_twists_commute(h):
    f = FiberModel(h)
    for a, b in itertools.combinations(all_curves(f), 2):
        if disjoint(a, b, f):
            ta, tb = dehn_twist(a, f), dehn_twist(b, f)
            assert equals_mc(compose_mc(ta, tb), compose_mc(tb, ta)), (a, b)


def test_overlapping_twists_do_not_commute():
    ta, tb = t(1, 2), t(2, 3)
    assert not equals_mc(compose_mc(ta, tb), compose_mc(tb, ta))


@pytest.mark.parametrize("h", [2, 3, 4, 5])
def test_twists_fix_generators_outside_the_curve(h):
    f = FiberModel(h)
    for c in all_curves(f):
        g = dehn_twist(c, f)
        for i in range(1, h + 1):
            if i not in c.enclosed:
                assert g.aut.forward[i - 1].letters == (i,)


@given(st.integers(1, 6).flatmap(lambda h: st.tuples(st.just(h), st.sets(st.integers(1, h), min_size=1))))
def test_twist_acts_trivially_on_homology(data):
    h, holes = data
    g = dehn_twist(StandardCurve(holes), FiberModel(h))
    assert g.homology_action() == [[int(i == j) for j in range(h)] for i in range(h)]


@given(st.integers(1, 6).flatmap(lambda h: st.tuples(st.just(h), st.sets(st.integers(1, h), min_size=1))))
def test_twist_then_inverse(data):
    h, holes = data
    c, f = StandardCurve(holes), FiberModel(h)
    assert compose_mc(dehn_twist(c, f), dehn_twist(c, f, -1)).is_identity()
    assert compose_mc(dehn_twist(c, f).inverse(), dehn_twist(c, f)).is_identity()


def test_composition_associative():
    rng = random.Random(3)
    f = FiberModel(4)
    cs = all_curves(f)
    for _ in range(30):
        a, b, c = (dehn_twist(rng.choice(cs), f, rng.choice((1, -1))) for _ in range(3))
        assert equals_mc(compose_mc(compose_mc(a, b), c), compose_mc(a, compose_mc(b, c)))


def test_conjugation_by_a_braid_preserving_the_curve():
    # a full twist of strands i, i+1 fixes every standard curve that nests with or avoids {i, i+1}
    h = 4
    f = FiberModel(h)
    for i in range(1, h):
        g = braid_mapping_class(BraidWord([i, i], h))
        block = {i, i + 1}
        for c in all_curves(f):
            s = set(c.enclosed)
            if block <= s or not (block & s) and disjoint(c, StandardCurve(block), f):
                tc = dehn_twist(c, f)
                assert equals_mc(compose_all_mc([g, tc, g.inverse()], h), tc), (i, c)


def test_describe_lists_images_and_framing():
    text = t(1, 2, h=2).describe()
    assert "x1 -> " in text and text.endswith("framing (1,1)")
