"""Generator alphabet, the word DSL, and evaluation under Psi.

Grammar (whitespace optional between tokens)::

    word    := item*
    item    := atom ('^' int)?
    atom    := 'Ta'<i> | 'Tb'<i> | 'Tc'<i> | 'iota' | 'F'<i> | 's'<i> | '(' word ')'

A word ``g1 g2 ... gn`` evaluates to Psi(g1) Psi(g2) ... Psi(gn); the rightmost
letter acts first on column vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .homology import (curve_class, eta_embed, iota_matrix, torelli_family, transvection)
from .linalg import IntMatrix, mat_power

TWIST_KINDS = ("Ta", "Tb", "Tc")


class WordSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class WordIndexError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorSymbol:
    """One letter of the mapping-class alphabet.

    ``kind`` is one of Ta, Tb, Tc, iota, F (bounding pair), s (half twist) or
    G (a Gamma_1(k) generator from a fixed table, carried with its matrix).
    """
    kind: str
    index: int = 0
    modulus: int = 0
    payload: object = field(default=None, compare=False, hash=False)

    def __str__(self) -> str:
        if self.kind == "iota":
            return "iota"
        return f"{self.kind}{self.index}"

    @property
    def is_twist(self) -> bool:
        return self.kind in TWIST_KINDS


def Ta(i: int) -> GeneratorSymbol:
    return GeneratorSymbol("Ta", i)


def Tb(i: int) -> GeneratorSymbol:
    return GeneratorSymbol("Tb", i)


def Tc(i: int) -> GeneratorSymbol:
    return GeneratorSymbol("Tc", i)


IOTA = GeneratorSymbol("iota")


def check_symbol(sym: GeneratorSymbol, g: int) -> None:
    k, i = sym.kind, sym.index
    if k in ("Ta", "Tb"):
        ok = 1 <= i <= g
    elif k == "Tc":
        ok = 1 <= i <= g - 1
    elif k == "F":
        ok = 1 <= i <= g - 1
    elif k == "s":
        ok = 1 <= i <= 2 * g + 1
    elif k == "iota":
        ok = True
    elif k == "G":
        ok = sym.payload is not None
    else:
        raise ValueError(f"unknown generator kind {k!r}")
    if not ok:
        raise WordIndexError(f"{sym} is out of range for genus {g}")


Letter = tuple[GeneratorSymbol, int]


@dataclass(frozen=True)
class Word:
    genus: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for sym, e in self.letters:
            if e == 0:
                raise ValueError(f"zero exponent on {sym}")
            check_symbol(sym, self.genus)

    @classmethod
    def of(cls, g: int, letters: Iterable[tuple[GeneratorSymbol | str, int]]) -> "Word":
        out = []
        for sym, e in letters:
            if isinstance(sym, str):
                sym = parse_word(sym, g).letters[0][0]
            if e:
                out.append((sym, e))
        return cls(g, tuple(out))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return format_word(self)

    def __mul__(self, other: "Word") -> "Word":
        return word_concat(self, other)

    def __invert__(self) -> "Word":
        return word_invert(self)

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else word_invert(self)
        return Word(self.genus, base.letters * abs(n))

    def matrix(self) -> IntMatrix:
        return evaluate(self)

    def syllable_length(self) -> int:
        return sum(abs(e) for _, e in self.letters)


def format_word(w: Word) -> str:
    parts = []
    for sym, e in w.letters:
        parts.append(str(sym) if e == 1 else f"{sym}^{e}")
    return " ".join(parts)


# --- parsing --------------------------------------------------------------

class _Parser:
    def __init__(self, text: str, g: int, allowed: Sequence[str] | None):
        self.s = text
        self.pos = 0
        self.g = g
        self.allowed = allowed

    def error(self, msg: str, pos: int | None = None):
        raise WordSyntaxError(msg, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.s) and self.s[self.pos].isspace():
            self.pos += 1

    def integer(self, signed: bool) -> int:
        start = self.pos
        if signed and self.pos < len(self.s) and self.s[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.s) and self.s[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.error("expected an integer", start)
        return int(self.s[start:self.pos])

    def exponent(self) -> int:
        self.skip()
        if self.pos < len(self.s) and self.s[self.pos] == "^":
            self.pos += 1
            self.skip()
            start = self.pos
            e = self.integer(signed=True)
            if e == 0:
                self.error("exponent zero is not allowed", start)
            return e
        return 1

    def word(self, depth: int) -> list[Letter]:
        out: list[Letter] = []
        while True:
            self.skip()
            if self.pos >= len(self.s):
                if depth:
                    self.error("unclosed parenthesis")
                return out
            ch = self.s[self.pos]
            if ch == ")":
                if not depth:
                    self.error("unbalanced ')'")
                return out
            if ch == "(":
                self.pos += 1
                inner = self.word(depth + 1)
                self.pos += 1
                e = self.exponent()
                block = inner if e > 0 else [(s, -x) for s, x in reversed(inner)]
                out.extend(block * abs(e))
                continue
            start = self.pos
            sym = self.atom()
            if self.allowed is not None and sym.kind not in self.allowed:
                self.error(f"generator {sym} not allowed here", start)
            try:
                check_symbol(sym, self.g)
            except WordIndexError as exc:
                raise WordIndexError(f"{exc} (offset {start})") from None
            out.append((sym, self.exponent()))

    def atom(self) -> GeneratorSymbol:
        s, p = self.s, self.pos
        if s.startswith("iota", p):
            self.pos += 4
            return IOTA
        for prefix in ("Ta", "Tb", "Tc", "F", "s"):
            if s.startswith(prefix, p):
                self.pos += len(prefix)
                idx = self.integer(signed=False)
                if prefix == "F":
                    return bp_symbol(idx, self.g)
                return GeneratorSymbol(prefix, idx)
        self.error(f"unexpected character {s[p]!r}")


def bp_symbol(i: int, g: int) -> GeneratorSymbol:
    if g < 2 or not 1 <= i <= g - 1:
        raise WordIndexError(f"F{i} is out of range for genus {g}")
    return GeneratorSymbol("F", i, payload=torelli_family(g)[i - 1])


def parse_word(text: str, g: int, allowed: Sequence[str] | None = None) -> Word:
    """Parse the word DSL.  Parentheses are expanded; nothing is reduced."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    p = _Parser(text, g, allowed)
    return Word(g, tuple(p.word(0)))


# --- evaluation -----------------------------------------------------------

def letter_matrix(sym: GeneratorSymbol, e: int, g: int) -> IntMatrix:
    if sym.is_twist:
        return transvection(curve_class(sym.kind[1], sym.index, g), e)
    if sym.kind == "iota":
        return iota_matrix(g) if e % 2 else IntMatrix.identity(2 * g)
    if sym.kind == "F":
        return IntMatrix.identity(2 * g)
    if sym.kind == "G":
        return mat_power(eta_embed(sym.payload, g), e)
    raise ValueError(f"{sym} has no symplectic image")


def evaluate(w: Word) -> IntMatrix:
    g = w.genus
    n = 2 * g
    rows = [list(r) for r in IntMatrix.identity(n).entries]
    # fold from the right: result = L1 (L2 (... Ln))
    for sym, e in reversed(w.letters):
        m = letter_matrix(sym, e, g).entries
        rows = [[sum(m[i][t] * rows[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
    return IntMatrix(tuple(tuple(r) for r in rows))


def word_invert(w: Word) -> Word:
    return Word(w.genus, tuple((s, -e) for s, e in reversed(w.letters)))


def word_concat(u: Word, v: Word) -> Word:
    if u.genus != v.genus:
        raise ValueError(f"genus mismatch: {u.genus} vs {v.genus}")
    return Word(u.genus, u.letters + v.letters)


def free_reduce(w: Word) -> Word:
    """Cancel adjacent pairs s^e s^-e, repeatedly."""
    stack: list[Letter] = []
    for sym, e in w.letters:
        if stack and stack[-1][0] == sym and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((sym, e))
    return Word(w.genus, tuple(stack))


def combine_powers(w: Word) -> Word:
    """Merge adjacent powers of the same symbol, dropping zero exponents."""
    stack: list[Letter] = []
    for sym, e in w.letters:
        if stack and stack[-1][0] == sym:
            e += stack.pop()[1]
            if e == 0:
                continue
        stack.append((sym, e))
    return Word(w.genus, tuple(stack))


def word_to_json(w: Word) -> dict:
    return {"genus": w.genus, "text": format_word(w),
            "letters": [[str(s), e] for s, e in w.letters]}


def twist_letters(g: int) -> list[GeneratorSymbol]:
    out = []
    for i in range(1, g + 1):
        out += [Ta(i), Tb(i)]
    return out + [Tc(i) for i in range(1, g)]


def random_word(g: int, max_len: int, rng, alphabet: Sequence[Letter] | None = None) -> Word:
    """A word of uniform random length in [0, max_len] over ``alphabet``
    (default: all twist letters), each letter used with a random sign."""
    if alphabet is None:
        alphabet = [(s, 1) for s in twist_letters(g)]
    n = rng.randint(0, max_len)
    letters = []
    for _ in range(n):
        sym, e = alphabet[rng.randrange(len(alphabet))]
        letters.append((sym, e if rng.random() < 0.5 else -e))
    return Word(g, tuple(letters))
