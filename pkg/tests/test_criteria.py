from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import twist_words
from liftmod.congruence import coset_word
from liftmod.criteria import (CoverParams, PreconditionError, lcm_law, lmod_contains,
                              lmod_contains_mod, lmod_contains_orbit, stab_e1_contains,
                              stabilizes_Vg, umod_contains, word_verdict)
from liftmod.homology import iota_matrix, twist_matrix
from liftmod.linalg import IntMatrix
from liftmod.words import evaluate, parse_word


def E(text, g=2):
    return evaluate(parse_word(text, g))


def oracle_lmod(m, g, k):
    # row 2 of M is (0, u, 0, ..., 0) mod k with u a unit
    row = m.row(1)
    return all(x % k == 0 for i, x in enumerate(row) if i != 1) and math.gcd(row[1], k) == 1


def test_cover_params():
    assert CoverParams(2, 3).covering_genus == 4
    assert CoverParams(1, 5).covering_genus == 1
    with pytest.raises(PreconditionError):
        CoverParams(2, 1)


def test_lmod_examples():
    assert not lmod_contains(E("Tb1"), CoverParams(2, 2))
    v = lmod_contains(E("Tb1"), CoverParams(2, 2))
    assert v.failing_entry == (2, 1)
    assert lmod_contains(E("Tb1^2"), CoverParams(2, 2))
    for k in (2, 3, 5, 12):
        v = lmod_contains(iota_matrix(2), CoverParams(2, k))
        assert v.member and v.unit == k - 1


def test_lmod_unit_is_the_e1_eigenvalue():
    for k in (3, 5, 7, 12):
        for ell in range(2, k):
            if math.gcd(ell, k) != 1:
                continue
            m = evaluate(coset_word(ell, k, 2))
            v = lmod_contains(m, CoverParams(2, k))
            assert v.member and v.unit == ell
            assert m.col(0)[0] % k == ell and m.col(0)[1] % k == 0


def test_stab_e1_examples():
    assert stab_e1_contains(iota_matrix(2), CoverParams(2, 2))
    assert not stab_e1_contains(iota_matrix(2), CoverParams(2, 3))
    for k in (2, 3, 7):
        assert stab_e1_contains(E("Ta1"), CoverParams(2, k))
        assert not stab_e1_contains(E("Tb1"), CoverParams(2, k))


def test_umod_and_vg_examples():
    assert umod_contains(iota_matrix(2), 2)
    for m in (1, 2, 5):
        assert not umod_contains(E(f"Tb1^{m}"), 2)
    assert umod_contains(E("Ta2"), 2)
    assert stabilizes_Vg(E("Tc1"), 2)
    assert not stabilizes_Vg(E("Tb1"), 2)
    assert stabilizes_Vg(IntMatrix.identity(4), 2)


def test_lcm_examples():
    assert lcm_law(E("Tb1^6"), 2, 2, 3) == (True, True, True)
    assert lcm_law(E("Tb1^2"), 2, 2, 3) == (True, False, False)


def test_non_symplectic_rejected():
    with pytest.raises(PreconditionError):
        lmod_contains(IntMatrix.from_rows([[1, 1], [1, 1]]), CoverParams(1, 2))
    with pytest.raises(PreconditionError):
        umod_contains(IntMatrix.identity(4), 3)


def test_word_verdict():
    assert word_verdict(lmod_contains, parse_word("Tb1^2", 2), CoverParams(2, 2)).member


@given(twist_words(max_len=20, gs=(1, 2, 3)), st.sampled_from((2, 3, 4, 6)))
def test_three_criteria_agree_with_oracle(w, k):
    m = evaluate(w)
    cover = CoverParams(w.genus, k)
    a = lmod_contains(m, cover).member
    assert a == lmod_contains_mod(m, cover) == lmod_contains_orbit(m, cover) == oracle_lmod(m, w.genus, k)


@given(twist_words(max_len=20, gs=(1, 2, 3)))
def test_umod_is_all_k(w):
    m = evaluate(w)
    g = w.genus
    u = umod_contains(m, g).member
    assert u == stabilizes_Vg(m, g)
    assert u == all(lmod_contains(m, CoverParams(g, k)).member for k in range(2, 13))


@given(twist_words(max_len=20, gs=(1, 2, 3)), st.integers(2, 8), st.integers(2, 8))
def test_lcm_contract(w, k, l):
    x, y, z = lcm_law(evaluate(w), w.genus, k, l)
    assert (x and y) == z
    if k == l:
        assert x == z


@given(twist_words(max_len=20, gs=(2, 3)), st.sampled_from((2, 3, 4, 6)))
def test_stab_is_lmod_with_unit_one(w, k):
    m = evaluate(w)
    cover = CoverParams(w.genus, k)
    v = lmod_contains(m, cover)
    assert stab_e1_contains(m, cover).member == (v.member and v.unit == 1)


def test_umod_members_fix_e1_up_to_iota():
    for text in ("iota Ta1 Tb2 Tc1", "Ta1^5 Tc1^-2 Ta2", "iota"):
        m = E(text)
        assert umod_contains(m, 2)
        assert m.col(0) in ((1, 0, 0, 0), (-1, 0, 0, 0))
