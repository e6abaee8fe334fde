from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liftmod.homology import (bounding_pair, curve_class, eta_embed, iota_matrix,
                              standard_chain, torelli_family, transvection, twist_matrix,
                              validate_chain)
from liftmod.linalg import IntMatrix, is_symplectic, pairing, symplectic_form
from liftmod.words import evaluate, parse_word, twist_letters


def oracle_transvection(c):
    # x -> x - <x, c> c, built column by column
    n = len(c)
    cols = []
    for j in range(n):
        e = [int(i == j) for i in range(n)]
        p = pairing(e, c)
        cols.append([e[i] - p * c[i] for i in range(n)])
    return IntMatrix.from_rows([[cols[j][i] for j in range(n)] for i in range(n)])


def test_twist_examples():
    assert twist_matrix("Ta1", 1) == IntMatrix.from_rows([[1, 1], [0, 1]])
    assert twist_matrix("Tb1", 2) == IntMatrix.from_rows(
        [[1, 0, 0, 0], [-1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert twist_matrix("Tc1", 2) == IntMatrix.from_rows(
        [[1, 1, 0, -1], [0, 1, 0, 0], [0, -1, 1, 1], [0, 0, 0, 1]])


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_twists_match_oracle_and_are_symplectic(g):
    for sym in twist_letters(g):
        m = twist_matrix(sym, g)
        assert m == oracle_transvection(curve_class(sym.kind[1], sym.index, g))
        assert is_symplectic(m, g) and m.determinant() == 1


def test_twist_depends_only_on_class_up_to_sign():
    c = curve_class("c", 1, 3)
    assert transvection(c) == transvection(tuple(-x for x in c))


def test_twist_index_errors():
    with pytest.raises(IndexError):
        twist_matrix("Tc2", 2)
    with pytest.raises(IndexError):
        twist_matrix("Ta0", 2)


def test_convention_lock_against_reference_multipliers():
    m2 = evaluate(parse_word("(Tc1 Ta1^-1 Ta2^-1)^-1", 2))
    assert m2.tolist() == [[1, 0, 0, 1], [0, 1, 0, 0], [0, 1, 1, 0], [0, 0, 0, 1]]
    c = evaluate(parse_word("Ta2 Tb2 Ta2", 2))
    assert (c @ m2 @ c.inverse()).tolist() == [[1, 0, 1, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, -1, 0, 1]]
    assert twist_matrix("Tb1", 2).inverse().tolist() == [[1, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    m5 = evaluate(parse_word("Tb1^-1 Ta2^-1", 2)) @ m2 @ twist_matrix("Tb1", 2) @ m2.inverse()
    assert m5.tolist() == [[1, 0, 0, 0], [0, 1, 0, 1], [-1, 0, 1, 0], [0, 0, 0, 1]]
    assert (c @ m5 @ c.inverse()).tolist() == [[1, 0, 0, 0], [0, 1, 1, 0], [0, 0, 1, 0], [1, 0, 0, 1]]


def test_c1_image_of_a_span_vector():
    # Tc1 sends alpha a1 + beta b1 to alpha a1 + beta (b1 + a1 - a2)
    for alpha, beta in [(1, 1), (2, -3), (0, 5)]:
        assert twist_matrix("Tc1", 2) @ (alpha, beta, 0, 0) == (alpha + beta, beta, -beta, 0)


def test_iota():
    assert iota_matrix(2) == -IntMatrix.identity(4)
    assert iota_matrix(3).determinant() == 1
    assert evaluate(parse_word("(Ta1 Tb1)^3 (Ta2 Tb2)^-3", 2)) == iota_matrix(2)


def test_eta_embed():
    assert eta_embed(IntMatrix.identity(2), 3) == IntMatrix.identity(6)
    assert eta_embed(IntMatrix.from_rows([[0, 1], [-1, 0]]), 2).tolist() == [
        [0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    with pytest.raises(ValueError):
        eta_embed(IntMatrix.from_rows([[2, 0], [0, 1]]), 2)


def test_standard_chain_g2():
    ch = standard_chain(2)
    assert ch.classes == ((1, 0, 0, 0), (0, 1, 0, 0), (-1, 0, 1, 0), (0, 0, 0, 1), (0, 0, -1, 0))
    rep = ch.report()
    assert rep.consecutive_plus_one and rep.nonadjacent_zero and not rep.independent
    assert ch.sub([1, 2]).report().valid
    bad = validate_chain([curve_class("a", 1, 2), curve_class("a", 2, 2)])
    assert not bad.consecutive_plus_one
    with pytest.raises(ValueError):
        standard_chain(1)


@pytest.mark.parametrize("g", [2, 3, 4])
def test_standard_chain_conditions(g):
    ch = standard_chain(g)
    assert len(ch) == 2 * g + 1
    rep = ch.report()
    assert rep.consecutive_plus_one and rep.nonadjacent_zero and not rep.independent


def test_bounding_pair_examples():
    ch = standard_chain(2)
    bp = bounding_pair(ch, (1, 2, 3))
    assert bp.boundary == (0, 0, 1, 0) and bp.genus == 1
    assert all(pairing(bp.boundary, c) == 0 for c in bp.derived)
    assert bp.matrix() == IntMatrix.identity(4)
    bp14 = bounding_pair(ch, (1, 4))
    assert bp14.derived == ((0, 1, 1, 0),)
    with pytest.raises(ValueError):
        bounding_pair(ch, (1, 3, 4))    # odd selection, not contiguous
    with pytest.raises(ValueError):
        bounding_pair(ch.sub([1, 2, 3, 4]))  # even full chain


@pytest.mark.parametrize("g", [2, 3, 4])
def test_every_odd_subchain_bounds(g):
    ch = standard_chain(g)
    n = len(ch)
    for start in range(1, n + 1):
        for length in range(1, n - start + 2, 2):
            bp = bounding_pair(ch, tuple(range(start, start + length)))
            assert all(pairing(bp.boundary, c) == 0 for c in bp.derived)
            assert bp.matrix() == IntMatrix.identity(2 * g)


@given(st.integers(2, 4), st.data())
def test_even_selections(g, data):
    ch = standard_chain(g)
    size = data.draw(st.sampled_from([s for s in (2, 4, 6) if s <= len(ch)]))
    sel = data.draw(st.sampled_from(list(combinations(range(1, len(ch) + 1), size))))
    try:
        bp = bounding_pair(ch, sel)
    except ValueError:
        return
    assert len(bp.derived) == size - 1
    assert all(pairing(bp.boundary, c) == 0 for c in bp.derived)


@pytest.mark.parametrize("g", [2, 3, 4, 5])
def test_torelli_family(g):
    fam = torelli_family(g)
    assert [bp.name for bp in fam] == [f"F{i}" for i in range(1, g)]
    for i, bp in enumerate(fam, start=1):
        assert bp.genus == i
        assert pairing(curve_class("a", 1, g), bp.boundary) != 0
        assert bp.matrix() == IntMatrix.identity(2 * g)
