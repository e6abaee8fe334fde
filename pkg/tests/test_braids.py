from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liftmod.braids import (BraidWord, MarkedClassVector, braid_free_reduce, braid_permutation,
                            compose, cycle_notation, delta_lift, delta_project, identity_perm,
                            is_pure, k2_generators, lifts_agree, parse_braid,
                            stab_beta12_contains, stabilizer_generators, tau_word,
                            verify_k2_generators)
from liftmod.homology import iota_matrix
from liftmod.words import WordIndexError, WordSyntaxError, evaluate, format_word, parse_word


@st.composite
def braids(draw, n=6, max_len=15):
    k = draw(st.integers(0, max_len))
    return BraidWord(n, tuple((draw(st.integers(1, n - 1)), draw(st.sampled_from((1, -1, 2, -3))))
                              for _ in range(k)))


def P(text, n=6):
    return parse_braid(text, n)


def test_permutation_examples():
    assert cycle_notation(braid_permutation(P("s1"))) == "(1,2)"
    assert cycle_notation(braid_permutation(P("s1 s2 s1"))) == "(1,3)"
    assert braid_permutation(P("s1 s2 s1")) == braid_permutation(P("s2 s1 s2"))
    assert is_pure(P("s2 s1^2 s2^-1"))


def test_parse_errors():
    with pytest.raises(WordIndexError):
        P("s6")
    with pytest.raises(WordSyntaxError):
        P("Ta1")
    with pytest.raises(WordSyntaxError):
        P("s1^0")


def test_homomorphism():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.choice((4, 6, 8))
        u = BraidWord(n, tuple((rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(rng.randint(0, 12))))
        v = BraidWord(n, tuple((rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(rng.randint(0, 12))))
        assert braid_permutation(u * v) == compose(braid_permutation(u), braid_permutation(v))


@given(braids())
def test_free_reduce_and_inverse(w):
    assert braid_permutation(braid_free_reduce(w)) == braid_permutation(w)
    assert braid_permutation(w * ~w) == identity_perm(6)


def test_stab_examples():
    assert stab_beta12_contains(P("s1"))
    assert not stab_beta12_contains(P("s2"))
    assert stab_beta12_contains(P("s3"))
    assert stab_beta12_contains(P("s2 s1^2 s2^-1"))
    with pytest.raises(ValueError):
        stab_beta12_contains(P("s1", 4))


def test_tau_examples():
    assert str(tau_word(1, 2, 6)) == "s1^2"
    assert str(tau_word(2, 3, 6, reading="shifted")) == "s2 s1^2 s2^-1"
    assert str(tau_word(1, 3, 6)) == "s2 s1^2 s2^-1"
    with pytest.raises(ValueError):
        tau_word(3, 3, 6)
    with pytest.raises(ValueError):
        tau_word(1, 3, 6, reading="shifted")


@pytest.mark.parametrize("reading", ["standard", "shifted"])
def test_all_tau_pure(reading):
    lo = 1 if reading == "standard" else 2
    for i in range(lo, 7):
        for j in range(i + 1, 7):
            t = tau_word(i, j, 6, reading)
            assert is_pure(t) and stab_beta12_contains(t)


@pytest.mark.parametrize("g", [2, 3])
def test_stabilizer_family(g):
    for w in stabilizer_generators(g):
        assert stab_beta12_contains(w)


@given(braids(8))
def test_class_action_matches_stab(w):
    beta12 = MarkedClassVector.of_points(8, (1, 2))
    assert (beta12.act(w) == beta12) == stab_beta12_contains(w)


def test_marked_class_canonical():
    assert MarkedClassVector((1, 1, 0, 0, 0, 0)) == MarkedClassVector((0, 0, 1, 1, 1, 1))
    v = MarkedClassVector.of_points(6, (1,))
    assert v.act(P("s1")) == MarkedClassVector.of_points(6, (2,))


def test_delta_lift():
    assert format_word(delta_lift(P("s1"), 2)) == "Ta1"
    assert format_word(delta_lift(P("s1 s2 s3 s4 s5"), 2)) == "Ta1 Tb1 Tc1 Tb2 Ta2"
    assert len(delta_lift(P(""), 2)) == 0
    assert lifts_agree(P("s2 s1^2 s2^-1"), P("s1^-1 s2^2 s1"), 2)
    with pytest.raises(ValueError):
        delta_lift(P("s1", 8), 2)


def test_delta_project_inverts_lift():
    w = P("s1 s3^2 s5^-1 s4")
    assert delta_project(delta_lift(w, 2)) == w
    assert delta_project(parse_word("iota Ta1", 2)) == P("s1")
    with pytest.raises(ValueError):
        delta_project(parse_word("Ta2 Tb1 Ta1 Tc1^2 Tb2 Ta2 Tb2", 3))


def test_braid_relations_lift_up_to_sign():
    assert lifts_agree(P("s1 s2 s1"), P("s2 s1 s2"), 2)
    assert lifts_agree(P("s1 s3"), P("s3 s1"), 2)


def test_iota_words():
    assert evaluate(parse_word("(Ta1 Tb1)^3 (Ta2 Tb2)^-3", 2)) == iota_matrix(2)
    assert evaluate(parse_word("(Ta1 Tb1^2)^2 (Ta2 Tb2)^-3", 2)) == iota_matrix(2)


@pytest.mark.parametrize("g", [2, 3])
def test_verify_k2(g):
    rep = verify_k2_generators(g)
    assert rep.ok
    if g == 2:
        assert rep.perm_group_order == 48 and rep.index_in_symmetric == 15 and rep.iota_identity
    assert len(k2_generators(g)) == 4 + (g - 1) + (g - 1)
