import itertools
import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kla2 import coxeter as cx
from kla2 import hecke as hk
from kla2 import leaves as lv
from kla2.coxeter import IDENTITY
from kla2.hecke import HeckeElt
from kla2.laurent import LPoly, ONE, V
from kla2.leaves import Decoration as D

words = st.lists(st.sampled_from([1, 2, 3]), max_size=10).map(tuple)


def test_stroll_examples():
    p = lv.stroll("1", "0")
    assert p.decorations == (D.U0,) and p.endpoint == IDENTITY and p.defect == 1
    p = lv.stroll("11", "10")
    assert p.decorations == (D.U1, D.D0) and p.endpoint == cx.from_word("1") and p.defect == -1
    p = lv.stroll("12", "11")
    assert p.endpoint == cx.from_word("12") and p.defect == 0
    with pytest.raises(ValueError):
        lv.stroll("12", "1")
    with pytest.raises(ValueError):
        lv.stroll("12", "12")


def test_leaf_character_examples():
    s1 = cx.from_word("1")
    assert lv.leaf_character("11") == HeckeElt({s1: V + V.bar(), IDENTITY: 1 + V**2})
    assert lv.leaf_character("12") == HeckeElt({
        cx.from_word("12"): ONE, s1: V, cx.from_word("2"): V, IDENTITY: V**2})
    assert len(lv.enumerate_leaves("1231")) == 16


def test_bound():
    with pytest.raises(ValueError):
        lv.enumerate_leaves("12" * 11)
    assert len(lv.enumerate_leaves("123", bound=3)) == 8


@given(words)
def test_enumeration_matches_stroll(word):
    leaves = lv.enumerate_leaves(word)
    assert len(leaves) == 2 ** len(word)
    assert [p.bits for p in leaves] == sorted(p.bits for p in leaves)
    for p in leaves:
        assert p == lv.stroll(word, p.bits)
        assert -len(word) <= p.defect <= len(word)


@given(words)
def test_defect_and_decorations_rule(word):
    for p in lv.enumerate_leaves(word):
        z = IDENTITY
        for s, b, d in zip(p.word, p.bits, p.decorations):
            assert d.up == (cx.length(cx.mul_right_gen(z, s)) > cx.length(z))
            assert d.bit == b
            if b:
                z = cx.mul_right_gen(z, s)
        assert z == p.endpoint
        assert p.defect == p.decorations.count(D.U0) - p.decorations.count(D.D0)


def test_u_leaves():
    assert {p.bits for p in lv.u_leaves("11")} == {(0, 0), (0, 1)}
    assert len(lv.u_leaves("123")) == 8
    for p in lv.u_leaves("1213123"):
        assert p.defect >= 0 and all(d.up for d in p.decorations)


def test_leafpath_json_roundtrip():
    for p in lv.enumerate_leaves("12131"):
        obj = json.loads(p.to_json())
        assert set(obj) == {"word", "bits", "decorations", "endpoint", "defect"}
        assert lv.LeafPath.from_json_obj(obj) == p
    bad = lv.stroll("11", "10").to_json_obj()
    bad["defect"] = 0
    with pytest.raises(ValueError):
        lv.LeafPath.from_json_obj(bad)


def test_deodhar_examples_and_exhaustive():
    assert lv.deodhar_check("11").passed
    assert lv.deodhar_check("123123").passed
    for L in range(7):
        for w in itertools.product((1, 2, 3), repeat=L):
            assert lv.deodhar_check(w).passed


def test_deodhar_random_long_words():
    rng = random.Random(7)
    for _ in range(200):
        w = [rng.choice((1, 2, 3)) for _ in range(rng.randint(0, 10))]
        assert lv.deodhar_check(w).passed


def test_tree_families():
    counts = {}
    for n in range(4, 17):
        rep = lv.tree_classify(n)
        assert rep.passed, rep.mismatches[:3]
        counts[n] = rep.info["family_counts"]
    assert counts[5]["1101"] > 0
    assert counts[6]["10(11)^k0"] > 0
    with pytest.raises(ValueError):
        lv.tree_classify(3)


def test_tree_patterns_reject_other_endings():
    pats = lv.TREE_FAMILIES.values()
    assert not any(p.search("011") for p in pats)
    assert not any(p.search("1011") for p in pats)
    assert sum(bool(p.search("10110")) for p in pats) == 1


def test_bounds_beyond():
    rep = lv.verify_bounds_beyond(1, 1)
    assert rep.passed
    assert hk.hom_rank(cx.theta_elt(1, 1), cx.theta_elt(0, 0)).coeff(2) == 1
    assert lv.verify_bounds_beyond(2, 1).passed
    for m in range(4):
        assert lv.verify_bounds_beyond(m, 0).passed


def test_little_leaves_examples():
    assert lv.verify_threelittleleaves(2, 1).info["dim"] == 2
    assert lv.verify_threelittleleaves(2, 2).info["dim"] == 3
    assert lv.verify_fourlittleleaves(2, 2, 1).info["dim"] == 3
    assert lv.verify_fourlittleleaves(2, 3, 2).info["dim"] == 4
    with pytest.raises(ValueError):
        lv.verify_threelittleleaves(1, 2)
    with pytest.raises(ValueError):
        lv.verify_fourlittleleaves(2, 2, 2)


def test_little_leaves_suffix():
    for m in range(5):
        for n in range(1, 5):
            s, t, ch = lv.little_leaves_setup(m, n)
            assert cx.mul(cx.theta_elt(m, n - 1), cx.from_word([s, t])) == cx.theta_elt(m, n)
            assert ch == hk.mul_kl_word(hk.kl_basis(cx.theta_elt(m, n - 1)), [s, t])


def test_deg0_wall():
    for n in range(5, 11):
        assert lv.verify_deg0_wall(n).passed
    with pytest.raises(ValueError):
        lv.verify_deg0_wall(4)
