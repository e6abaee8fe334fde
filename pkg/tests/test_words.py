from __future__ import annotations

import pytest
from hypothesis import given

from conftest import twist_words
from liftmod.homology import iota_matrix
from liftmod.linalg import IntMatrix
from liftmod.words import (Ta, Tb, Word, WordIndexError, WordSyntaxError, combine_powers,
                           evaluate, format_word, free_reduce, parse_word, word_concat)


def test_parse_and_format_roundtrip_simple():
    w = parse_word("Ta1 Tb1^-2 Tc1", 2)
    assert w.letters == ((Ta(1), 1), (Tb(1), -2), (w.letters[2][0], 1))
    assert format_word(w) == "Ta1 Tb1^-2 Tc1"


def test_group_exponents_expand():
    w = parse_word("(Ta1 Tb1)^-2", 1)
    assert format_word(w) == "Tb1^-1 Ta1^-1 Tb1^-1 Ta1^-1"
    assert evaluate(parse_word("(Ta1 Tb1)^3 (Ta2 Tb2)^-3", 2)) == iota_matrix(2)


@pytest.mark.parametrize("text, offset", [("Ta1 (Tb1", 8), ("Ta1^0", 4), ("Tx1", 0), ("Ta1)", 3),
                                          ("Ta^2", 2)])
def test_syntax_errors_carry_offsets(text, offset):
    with pytest.raises(WordSyntaxError) as exc:
        parse_word(text, 2)
    assert exc.value.offset == offset


@pytest.mark.parametrize("text", ["Tc9", "Ta3", "Tc2", "F2", "s6"])
def test_index_errors(text):
    with pytest.raises(WordIndexError):
        parse_word(text, 2)


def test_torelli_letters_evaluate_to_identity():
    assert evaluate(parse_word("F1 F2^3", 3)) == IntMatrix.identity(6)


def test_genus_mismatch():
    with pytest.raises(ValueError):
        word_concat(Word(2), Word(3))


def test_zero_exponent_rejected():
    with pytest.raises(ValueError):
        Word(1, ((Ta(1), 0),))


@given(twist_words())
def test_inverse_word_inverts_matrix(w):
    assert evaluate(w) @ evaluate(~w) == IntMatrix.identity(2 * w.genus)


@given(twist_words(), twist_words())
def test_evaluation_is_a_homomorphism(u, v):
    if u.genus != v.genus:
        return
    assert evaluate(u * v) == evaluate(u) @ evaluate(v)


@given(twist_words())
def test_format_parse_roundtrip(w):
    assert parse_word(format_word(w), w.genus) == w


@given(twist_words())
def test_reductions_preserve_value(w):
    assert evaluate(free_reduce(w)) == evaluate(w)
    assert evaluate(combine_powers(w)) == evaluate(w)
    assert len(combine_powers(w)) <= len(w)
