"""Primitive vectors mod k, the orbit of e1, index tables, and witness
search for self-normalization of LMod_{p_k}(S_g) in Mod(S_g)."""

from __future__ import annotations

import itertools
import math
import random
from collections import deque
from dataclasses import dataclass, field

from sympy import primefactors, totient

from .criteria import CoverParams, PreconditionError, lmod_contains
from .homology import twist_matrix
from .linalg import IntMatrix
from .words import GeneratorSymbol, Ta, Tb, Tc, Word, evaluate, format_word

FEASIBLE_STATES = 10**6

Vector = tuple[int, ...]


def _check_k(k: int) -> None:
    if k < 2:
        raise ValueError("modulus must be >= 2")


def is_primitive(v: Vector, k: int) -> bool:
    return math.gcd(k, *v) == 1


def count_primitive(k: int, n: int) -> int:
    """k^n * prod_{p | k} (1 - p^-n), in exact integers."""
    _check_k(k)
    if n < 1:
        raise ValueError("dimension must be >= 1")
    count = k**n
    for p in primefactors(k):
        count = count // p**n * (p**n - 1)
    return count


def enumerate_primitive(k: int, n: int) -> list[Vector]:
    _check_k(k)
    return [v for v in itertools.product(range(k), repeat=n) if is_primitive(v, k)]


def twist_alphabet(g: int) -> list[GeneratorSymbol]:
    syms = []
    for i in range(1, g + 1):
        syms += [Ta(i), Tb(i)]
    return syms + [Tc(i) for i in range(1, g)]


def _apply_mod(m: IntMatrix, v: Vector, k: int) -> Vector:
    return tuple(x % k for x in m @ v)


def _feasible(g: int, k: int) -> None:
    if k ** (2 * g) > FEASIBLE_STATES:
        raise PreconditionError(f"k^(2g) = {k ** (2 * g)} exceeds the bound {FEASIBLE_STATES}")


def orbit_e1(g: int, k: int) -> set[Vector]:
    """Closure of {e1} mod k under all twist matrices and their inverses."""
    _check_k(k)
    if g < 1:
        raise ValueError("genus must be >= 1")
    _feasible(g, k)
    mats = []
    for sym in twist_alphabet(g):
        m = twist_matrix(sym, g)
        mats += [m, m.inverse()]
    start = tuple(int(i == 0) for i in range(2 * g))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for m in mats:
            w = _apply_mod(m, v, k)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


@dataclass(frozen=True)
class IndexTable:
    genus: int
    sheets: int
    phi: int
    primitive: int
    index_lmod: int

    @property
    def index_stab_e1(self) -> int:
        return self.primitive


def index_table(g: int, k: int) -> IndexTable:
    _check_k(k)
    phi = int(totient(k))
    prim = count_primitive(k, 2 * g)
    index, r = divmod(prim, phi)
    if r:
        raise AssertionError("primitive count is not divisible by phi(k)")
    return IndexTable(g, k, phi, prim, index)


# --- self-normalization witnesses -----------------------------------------

def unit_line(v: Vector, k: int) -> set[Vector]:
    return {tuple(u * x % k for x in v) for u in range(1, k) if math.gcd(u, k) == 1}


def witness_alphabet(g: int, k: int) -> list[tuple[GeneratorSymbol, int]]:
    """LMod letters in search order: Ta1, Tb1^k, then Ta_j, Tb_j (j >= 2), then Tc_i."""
    letters = [(Ta(1), 1), (Tb(1), k)]
    for i in range(2, g + 1):
        letters += [(Ta(i), 1), (Tb(i), 1)]
    return letters + [(Tc(i), 1) for i in range(1, g)]


@dataclass(frozen=True)
class WitnessReport:
    vector: Vector
    sheets: int
    word: Word | None
    image: Vector | None
    method: str
    explored: int = 0

    @property
    def found(self) -> bool:
        return self.word is not None

    def recheck(self) -> bool:
        """Independent check: one product mod k and the LMod criterion."""
        if self.word is None:
            return False
        g = self.word.genus
        m = evaluate(self.word)
        img = _apply_mod(m, self.vector, self.sheets)
        return (img == self.image and img not in unit_line(self.vector, self.sheets)
                and lmod_contains(m, CoverParams(g, self.sheets)).member)

    def to_json(self) -> dict:
        return {"vector": list(self.vector), "sheets": self.sheets, "method": self.method,
                "word": None if self.word is None else format_word(self.word),
                "image": None if self.image is None else list(self.image),
                "explored": self.explored}


def witness_self_normalizing(v, g: int, k: int, max_len: int = 4) -> WitnessReport:
    _check_k(k)
    v = tuple(int(x) % k for x in v)
    if len(v) != 2 * g:
        raise ValueError(f"vector must have length {2 * g}")
    if not is_primitive(v, k):
        raise PreconditionError(f"{v} is not primitive mod {k}")
    e1 = tuple(int(i == 0) for i in range(2 * g))
    if v in unit_line(e1, k):
        raise PreconditionError("vector is a unit multiple of e1 and is excluded")
    cover = CoverParams(g, k)
    line = unit_line(v, k)

    if g >= 2 and all(x == 0 for x in v[2:]) and v[1] != 0:
        w = Word(g, ((Tc(1), 1),))
        img = _apply_mod(evaluate(w), v, k)
        return WitnessReport(v, k, w, img, "case2", 1)

    steps = []
    for sym, e in witness_alphabet(g, k):
        for sign in (1, -1):
            steps.append(((sym, sign * e), evaluate(Word(g, ((sym, sign * e),)))))
    # breadth-first over images; each node remembers its word and matrix
    seen = {v: (Word(g), IntMatrix.identity(2 * g))}
    frontier = [v]
    explored = 0
    for _ in range(max_len):
        nxt = []
        for u in frontier:
            word, mat = seen[u]
            for letter, lm in steps:
                explored += 1
                w2 = Word(g, (letter,) + word.letters)
                m2 = lm @ mat
                img = _apply_mod(m2, v, k)
                if img in seen:
                    continue
                if not lmod_contains(m2, cover).member:
                    raise AssertionError(f"prefix {format_word(w2)} left LMod")
                if img not in line:
                    return WitnessReport(v, k, w2, img, "search", explored)
                seen[img] = (w2, m2)
                nxt.append(img)
        frontier = nxt
    return WitnessReport(v, k, None, None, "exhausted", explored)


@dataclass
class SelfNormalizingSummary:
    genus: int
    sheets: int
    max_len: int
    eligible: int
    witnessed: int
    max_witness_length: int
    sampled: bool
    failures: list[Vector] = field(default_factory=list)
    reports: list[WitnessReport] = field(default_factory=list, repr=False)

    @property
    def success(self) -> bool:
        return not self.failures and self.witnessed == self.eligible

    def to_json(self) -> dict:
        return {"genus": self.genus, "sheets": self.sheets, "max_len": self.max_len,
                "eligible": self.eligible, "witnessed": self.witnessed,
                "max_witness_length": self.max_witness_length, "sampled": self.sampled,
                "success": self.success, "failures": [list(v) for v in self.failures]}


def verify_self_normalizing(g: int, k: int, max_len: int = 4, sample: int | None = None,
                            seed: int = 0) -> SelfNormalizingSummary:
    """Witness every primitive v off the unit line of e1.

    With ``sample`` set, only that many random eligible vectors are tried and
    the summary is flagged as sampled (evidence, not a proof).
    """
    if g < 2:
        raise PreconditionError("self-normalization is stated for genus >= 2")
    _check_k(k)
    n = 2 * g
    e1 = tuple(int(i == 0) for i in range(n))
    excluded = unit_line(e1, k)
    if sample is None:
        _feasible(g, k)
        vectors = [v for v in enumerate_primitive(k, n) if v not in excluded]
    else:
        rng = random.Random(seed)
        vectors = []
        while len(vectors) < sample:
            v = tuple(rng.randrange(k) for _ in range(n))
            if is_primitive(v, k) and v not in excluded:
                vectors.append(v)
    summary = SelfNormalizingSummary(g, k, max_len, len(vectors), 0, 0, sample is not None)
    for v in vectors:
        rep = witness_self_normalizing(v, g, k, max_len)
        summary.reports.append(rep)
        if rep.found and rep.recheck():
            summary.witnessed += 1
            summary.max_witness_length = max(summary.max_witness_length, len(rep.word))
        else:
            summary.failures.append(v)
    return summary
