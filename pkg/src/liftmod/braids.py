"""Braid words on the sphere with 2g+2 marked points, their permutation and
Z/2-class actions, pure-braid generators, and lifting to twist words."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from sympy.combinatorics import Permutation, PermutationGroup

from .criteria import CoverParams, lmod_contains
from .homology import chain_twist_symbol, iota_matrix
from .words import (GeneratorSymbol, Word, WordIndexError, WordSyntaxError, _Parser,
                    evaluate, format_word, parse_word)

BraidLetter = tuple[int, int]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("need at least two strands")
        for i, e in self.letters:
            if not 1 <= i <= self.strands - 1:
                raise WordIndexError(f"s{i} is out of range for {self.strands} strands")
            if e == 0:
                raise ValueError("zero exponent")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def __invert__(self) -> "BraidWord":
        return BraidWord(self.strands, tuple((i, -e) for i, e in reversed(self.letters)))

    def __str__(self) -> str:
        return format_braid(self)


def format_braid(w: BraidWord) -> str:
    return " ".join(f"s{i}" if e == 1 else f"s{i}^{e}" for i, e in w.letters)


def parse_braid(text: str, n: int) -> BraidWord:
    """Same grammar as twist words, letters s1 .. s(n-1)."""
    p = _Parser(text, max(1, n // 2), ("s",))
    letters = []
    for sym, e in p.word(0):
        if sym.index > n - 1:
            raise WordIndexError(f"s{sym.index} is out of range for {n} strands")
        letters.append((sym.index, e))
    return BraidWord(n, tuple(letters))


def braid_free_reduce(w: BraidWord) -> BraidWord:
    out: list[BraidLetter] = []
    for i, e in w.letters:
        if out and out[-1][0] == i:
            e += out.pop()[1]
            if e == 0:
                continue
        out.append((i, e))
    return BraidWord(w.strands, tuple(out))


# --- permutation image ----------------------------------------------------
# A permutation is a tuple p with p[x-1] = image of point x.  Words act
# right to left, like mapping classes.

def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """p after q."""
    return tuple(p[q[x] - 1] for x in range(len(q)))


def braid_permutation(w: BraidWord) -> tuple[int, ...]:
    n = w.strands
    perm = identity_perm(n)
    for i, e in reversed(w.letters):
        if e % 2:
            t = list(range(1, n + 1))
            t[i - 1], t[i] = t[i], t[i - 1]
            perm = compose(tuple(t), perm)
    return perm


def cycle_notation(p: Sequence[int]) -> str:
    seen, parts = set(), []
    for start in range(1, len(p) + 1):
        if start in seen or p[start - 1] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = p[x - 1]
        parts.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def is_pure(w: BraidWord) -> bool:
    return braid_permutation(w) == identity_perm(w.strands)


def stab_beta12_contains(w: BraidWord) -> bool:
    """Whether w fixes the class beta1 + beta2, read on permutations."""
    if w.strands < 6:
        raise ValueError("the stabilizer criterion needs at least 6 strands")
    p = braid_permutation(w)
    return {p[0], p[1]} == {1, 2}


@dataclass(frozen=True)
class MarkedClassVector:
    """A sum of the beta_i over Z/2, modulo beta_1 + ... + beta_n = 0."""
    bits: tuple[int, ...]

    def __post_init__(self):
        b = tuple(x % 2 for x in self.bits)
        flipped = tuple(1 - x for x in b)
        object.__setattr__(self, "bits", min(b, flipped))

    @classmethod
    def of_points(cls, n: int, points: Sequence[int]) -> "MarkedClassVector":
        return cls(tuple(int(i + 1 in points) for i in range(n)))

    def act(self, w: BraidWord) -> "MarkedClassVector":
        p = braid_permutation(w)
        out = [0] * len(self.bits)
        for x, b in enumerate(self.bits):
            out[p[x] - 1] = b
        return MarkedClassVector(tuple(out))


# --- pure braid generators ------------------------------------------------

def tau_word(i: int, j: int, n: int, reading: str = "standard") -> BraidWord:
    """tau_ij = C s^2 C^-1.

    standard: C = s(j-1) ... s(i+1), square s_i (tau_13 = s2 s1^2 s2^-1).
    shifted:  C = s(j-1) ... s(i),   square s(i-1), defined for i >= 2;
              it gives tau_23 = s2 s1^2 s2^-1.
    """
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= {n}, got ({i}, {j})")
    if reading == "standard":
        conj, sq = list(range(j - 1, i, -1)), i
    elif reading == "shifted":
        if i < 2:
            raise ValueError("the shifted reading needs i >= 2")
        conj, sq = list(range(j - 1, i - 1, -1)), i - 1
    else:
        raise ValueError(f"unknown reading {reading!r}")
    c = BraidWord(n, tuple((x, 1) for x in conj))
    return c * BraidWord(n, ((sq, 2),)) * ~c


def stabilizer_generators(g: int) -> list[BraidWord]:
    """s1, s3, ..., s(2g+1) and all tau_ij."""
    n = 2 * g + 2
    gens = [BraidWord(n, ((1, 1),))] + [BraidWord(n, ((i, 1),)) for i in range(3, n)]
    gens += [tau_word(i, j, n) for i, j in combinations(range(1, n + 1), 2)]
    return gens


# --- lifting through the hyperelliptic cover --------------------------------

def delta_lift(w: BraidWord, g: int) -> Word:
    if w.strands != 2 * g + 2:
        raise ValueError(f"expected {2 * g + 2} strands for genus {g}")
    text = " ".join(f"{chain_twist_symbol(i, g)}^{e}" for i, e in w.letters)
    return parse_word(text, g)


def delta_project(w: Word) -> BraidWord:
    """Inverse substitution on chain twists; iota maps to the trivial braid."""
    g = w.genus
    position = {chain_twist_symbol(p, g): p for p in range(1, 2 * g + 2)}
    letters = []
    for sym, e in w.letters:
        if sym.kind == "iota":
            continue
        if str(sym) not in position:
            raise ValueError(f"{sym} is not a chain twist")
        letters.append((position[str(sym)], e))
    return BraidWord(2 * g + 2, tuple(letters))


def lifts_agree(u: BraidWord, v: BraidWord, g: int) -> bool:
    """Psi of the two lifts agree up to sign (the lift is defined up to iota)."""
    mu, mv = evaluate(delta_lift(u, g)), evaluate(delta_lift(v, g))
    return mu == mv or mu == -mv


# --- the k = 2 generating set -------------------------------------------

def k2_generators(g: int) -> list[Word]:
    """iota, Ta1, Tag, Tb1^2, Tb2, ..., Tbg, Tc1, ..., Tc(g-1)."""
    text = ["iota", "Ta1", f"Ta{g}", "Tb1^2"] + [f"Tb{i}" for i in range(2, g + 1)]
    text += [f"Tc{i}" for i in range(1, g)]
    return [parse_word(t, g) for t in text]


def genus2_extra_generators() -> list[Word]:
    return [parse_word(t, 2) for t in ("Ta1", "Tb1^2", "Tc1", "Ta2", "Tb2")]


@dataclass(frozen=True)
class K2Report:
    genus: int
    non_members: tuple[str, ...]
    iota_identity: bool | None
    perm_group_order: int
    expected_order: int
    index_in_symmetric: int
    projections_in_stab: bool

    @property
    def ok(self) -> bool:
        return (not self.non_members and self.iota_identity is not False
                and self.perm_group_order == self.expected_order and self.projections_in_stab)

    def to_json(self) -> dict:
        return {"genus": self.genus, "non_members": list(self.non_members),
                "iota_identity": self.iota_identity, "perm_group_order": self.perm_group_order,
                "expected_order": self.expected_order, "index": self.index_in_symmetric,
                "projections_in_stab": self.projections_in_stab, "ok": self.ok}


def verify_k2_generators(g: int) -> K2Report:
    import math

    if g < 2:
        raise ValueError("genus must be >= 2")
    cover = CoverParams(g, 2)
    gens = k2_generators(g) + (genus2_extra_generators() if g == 2 else [])
    bad = tuple(format_word(w) for w in gens if not lmod_contains(evaluate(w), cover).member)
    iota_ok = None
    if g == 2:
        iota_ok = evaluate(parse_word("(Ta1 Tb1^2)^2 (Ta2 Tb2)^-3", 2)) == iota_matrix(2)
    n = 2 * g + 2
    perms = [Permutation([x - 1 for x in braid_permutation(w)]) for w in stabilizer_generators(g)]
    order = int(PermutationGroup(perms).order())
    proj = all(stab_beta12_contains(delta_project(w)) for w in k2_generators(g))
    return K2Report(g, bad, iota_ok, order, 2 * math.factorial(2 * g),
                    math.factorial(n) // order, proj)
