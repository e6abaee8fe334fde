"""Assembled generating sets for LMod_{p_k}(S_g) and UMod(S_g)."""

from __future__ import annotations

from dataclasses import dataclass

from .congruence import coset_word, gamma1_generators, units
from .words import IOTA, Ta, Tb, Tc, Word, bp_symbol


@dataclass(frozen=True)
class GeneratingSet:
    genus: int
    sheets: int | None
    coset_words: tuple[Word, ...]
    gamma1_words: tuple[Word, ...]
    torelli: tuple[Word, ...]
    twists: tuple[Word, ...]

    def words(self) -> list[Word]:
        return [*self.coset_words, *self.gamma1_words, *self.torelli, *self.twists]

    def __len__(self) -> int:
        return len(self.words())


def _single(g: int, sym) -> Word:
    return Word(g, ((sym, 1),))


def s_twists(g: int) -> tuple[Word, ...]:
    """Ta2, Tb2, ..., Tag, Tbg, Tc1, ..., Tc(g-1)."""
    out = []
    for i in range(2, g + 1):
        out += [_single(g, Ta(i)), _single(g, Tb(i))]
    out += [_single(g, Tc(i)) for i in range(1, g)]
    return tuple(out)


def torelli_letters(g: int) -> tuple[Word, ...]:
    return tuple(_single(g, bp_symbol(i, g)) for i in range(1, g))


def lmod_coset_words(k: int, g: int) -> tuple[Word, ...]:
    # the unit 1 is represented by the empty word
    return tuple(Word(g) if ell == 1 else coset_word(ell, k, g) for ell in units(k))


def generating_set_lmod_parts(g: int, k: int) -> GeneratingSet:
    if g < 3:
        raise ValueError("the LMod generating set is stated for genus >= 3; "
                         "use the braid module for (g, k) = (2, 2)")
    if k < 2:
        raise ValueError("k must be >= 2")
    gam = tuple(Word(g, gen.word.letters) for gen in gamma1_generators(k))
    return GeneratingSet(g, k, lmod_coset_words(k, g), gam, torelli_letters(g), s_twists(g))


def generating_set_lmod(g: int, k: int) -> list[Word]:
    return generating_set_lmod_parts(g, k).words()


def generating_set_umod(g: int) -> list[Word]:
    """F_1..F_{g-1}, iota, Ta1 and the twist letters of S^(g)."""
    if g < 3:
        raise ValueError("the UMod generating set is stated for genus >= 3")
    return [*torelli_letters(g), _single(g, IOTA), _single(g, Ta(1)), *s_twists(g)]
