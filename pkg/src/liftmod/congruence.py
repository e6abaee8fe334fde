"""Gamma_1(k) in SL(2, Z): membership, Schreier generators, rewriting,
Euclidean decomposition, and the coset words for LMod / Mod(e1).

SL(2, Z) is generated here by A = Psi(Ta1) = [[1, 1], [0, 1]] and
B = Psi(Tb1) = [[1, 0], [-1, 1]].
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .linalg import IntMatrix, as_matrix
from .words import GeneratorSymbol, Ta, Tb, Word, combine_powers, evaluate, free_reduce

A_MAT = IntMatrix(((1, 1), (0, 1)))
B_MAT = IntMatrix(((1, 0), (-1, 1)))


def _det2(m: IntMatrix) -> int:
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]


def _check_sl2(m: IntMatrix) -> IntMatrix:
    m = as_matrix(m)
    if m.shape != (2, 2):
        raise ValueError("expected a 2x2 matrix")
    if _det2(m) != 1:
        raise ValueError(f"matrix is not in SL(2, Z) (det = {_det2(m)})")
    return m


def gamma1_contains(m: IntMatrix, k: int) -> bool:
    m = _check_sl2(m)
    if k < 2:
        raise ValueError("modulus must be >= 2")
    return (m[0, 0] - 1) % k == 0 and (m[1, 1] - 1) % k == 0 and m[1, 0] % k == 0


def gamma0_contains(m: IntMatrix, k: int) -> bool:
    m = _check_sl2(m)
    return m[1, 0] % k == 0


# --- Euclid ---------------------------------------------------------------

def _tdiv(x: int, y: int) -> int:
    q = abs(x) // abs(y)
    return q if (x >= 0) == (y >= 0) else -q


def euclid_steps(a: int, c: int) -> list[tuple[str, int]]:
    """Steps ('a', n): a += n*c  and ('b', n): c -= n*a  that clear c.

    These are the row operations of left multiplication by A^n and B^n on a
    column (a, c).  Afterwards |a| = gcd(a, c).
    """
    steps = []
    while c != 0:
        if a == 0:
            n = 1 if c > 0 else -1
            steps.append(("a", n))
            a += n * c
        elif abs(c) >= abs(a):
            q = _tdiv(c, a)
            steps.append(("b", q))
            c -= q * a
        else:
            q = _tdiv(a, c)
            steps.append(("a", -q))
            a -= q * c
    return steps


def sl2_decompose(m: IntMatrix) -> Word:
    """Write m in SL(2, Z) as a word in Ta1, Tb1 (genus 1)."""
    m = _check_sl2(m)
    a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    applied: list[tuple[GeneratorSymbol, int]] = []
    for kind, n in euclid_steps(a, c):
        if kind == "a":
            a, b = a + n * c, b + n * d
            applied.append((Ta(1), n))
        else:
            c, d = c - n * a, d - n * b
            applied.append((Tb(1), n))
    if a == -1:
        # (Ta1 Tb1 Ta1)^2 = -I
        applied += [(Ta(1), 1), (Tb(1), 1), (Ta(1), 1)] * 2
        a, b, d = 1, -b, 1
    if b:
        applied.append((Ta(1), -b))
    # applied_n ... applied_1 m = I
    return combine_powers(Word(1, tuple((s, -e) for s, e in applied)))


# --- coset table and Schreier generators -----------------------------------

def _act(row: tuple[int, int], m: IntMatrix, k: int) -> tuple[int, int]:
    c, d = row
    return ((c * m[0, 0] + d * m[1, 0]) % k, (c * m[0, 1] + d * m[1, 1]) % k)


_GENS = ((Ta(1), A_MAT), (Tb(1), B_MAT))


@dataclass(frozen=True)
class Gamma1Generator:
    index: int
    modulus: int
    matrix: IntMatrix
    word: Word

    def symbol(self) -> GeneratorSymbol:
        return GeneratorSymbol("G", self.index, self.modulus, payload=self.matrix)


@dataclass
class CosetTable:
    """Right cosets of Gamma_1(k) in SL(2, Z), labelled by bottom rows mod k."""
    modulus: int
    states: list[tuple[int, int]]
    index: dict[tuple[int, int], int]
    forward: dict[tuple[int, str], int]
    backward: dict[tuple[int, str], int]
    transversal: list[Word]
    generators: list[Gamma1Generator]
    schreier: dict[tuple[int, str], int | None]

    def __len__(self) -> int:
        return len(self.states)

    def coset_of(self, m: IntMatrix) -> int:
        return self.index[(m[1, 0] % self.modulus, m[1, 1] % self.modulus)]


@lru_cache(maxsize=None)
def coset_table(k: int) -> CosetTable:
    if k < 2:
        raise ValueError("modulus must be >= 2")
    start = (0, 1 % k)
    states = [start]
    index = {start: 0}
    transversal = [Word(1)]
    forward: dict[tuple[int, str], int] = {}
    backward: dict[tuple[int, str], int] = {}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for sym, mat in _GENS:
            for e in (1, -1):
                m = mat if e == 1 else as_matrix(((mat[1, 1], -mat[0, 1]), (-mat[1, 0], mat[0, 0])))
                nxt = _act(states[i], m, k)
                if nxt not in index:
                    index[nxt] = len(states)
                    states.append(nxt)
                    transversal.append(combine_powers(transversal[i] * Word(1, ((sym, e),))))
                    queue.append(index[nxt])
                j = index[nxt]
                if e == 1:
                    forward[(i, sym.kind)] = j
                else:
                    backward[(i, sym.kind)] = j

    generators: list[Gamma1Generator] = []
    by_matrix: dict[IntMatrix, int] = {}
    schreier: dict[tuple[int, str], int | None] = {}
    for i in range(len(states)):
        for sym, _ in _GENS:
            j = forward[(i, sym.kind)]
            w = free_reduce(transversal[i] * Word(1, ((sym, 1),)) * ~transversal[j])
            if not w.letters:
                schreier[(i, sym.kind)] = None
                continue
            m = evaluate(w)
            if m.is_identity():
                schreier[(i, sym.kind)] = None
                continue
            if m not in by_matrix:
                by_matrix[m] = len(generators)
                generators.append(Gamma1Generator(len(generators) + 1, k, m, combine_powers(w)))
            schreier[(i, sym.kind)] = by_matrix[m]
    return CosetTable(k, states, index, forward, backward, transversal, generators, schreier)


def gamma1_generators(k: int) -> list[Gamma1Generator]:
    """A finite generating set of Gamma_1(k), each with a witness word in Ta1, Tb1."""
    return list(coset_table(k).generators)


def gamma1_rewrite(m: IntMatrix, k: int) -> list[tuple[Gamma1Generator, int]]:
    """Express m in Gamma_1(k) as a product of the Schreier generators."""
    m = as_matrix(m)
    if not gamma1_contains(m, k):
        raise ValueError(f"matrix is not in Gamma_1({k})")
    table = coset_table(k)
    gens = table.generators
    out: list[tuple[Gamma1Generator, int]] = []

    def emit(idx: int | None, e: int) -> None:
        if idx is None:
            return
        if out and out[-1][0].index == idx + 1:
            e += out.pop()[1]
            if e == 0:
                return
        out.append((gens[idx], e))

    state = 0
    for sym, e in sl2_decompose(m).letters:
        kind = sym.kind
        # the walk under one letter is periodic; find the cycle through `state`
        path: list[tuple[int | None, int]] = []
        visited = [state]
        cycled = False
        s = state
        for _ in range(abs(e)):
            if e > 0:
                path.append((table.schreier[(s, kind)], 1))
                s = table.forward[(s, kind)]
            else:
                s = table.backward[(s, kind)]
                path.append((table.schreier[(s, kind)], -1))
            visited.append(s)
            if s == state:
                cycled = True
                break
        reps, rest = divmod(abs(e), len(path))
        live = {idx for idx, _ in path if idx is not None}
        if len(live) == 1 and reps > 1:
            # one generator per cycle: emit its total power at once
            (only,) = live
            emit(only, reps * sum(x for idx, x in path if idx == only))
        else:
            for _ in range(reps):
                for idx, x in path:
                    emit(idx, x)
        for idx, x in path[:rest]:
            emit(idx, x)
        state = visited[rest] if cycled else visited[-1]
    if state != 0:
        raise AssertionError("rewriting did not return to the identity coset")
    return out


def rewrite_word(m: IntMatrix, k: int, g: int = 1) -> Word:
    """gamma1_rewrite as a Word of G-letters (genus g)."""
    return Word(g, tuple((gen.symbol(), e) for gen, e in gamma1_rewrite(m, k)))


def _conjugate_split(letters):
    """letters = u c u^-1 with c cyclically reduced; returns (u, c)."""
    c = list(letters)
    u = []
    while len(c) >= 2 and c[0][0] == c[-1][0] and c[0][1] == -c[-1][1]:
        u.append(c.pop(0))
        c.pop()
    return u, c


def expand_gamma_letters(w: Word, max_letters: int = 10**6) -> Word:
    """Replace every G-letter by its witness word in Ta1, Tb1.

    G^e is written u c^e u^-1, which stays short when the cyclic core c of
    the witness is a single letter.
    """
    out = []
    for sym, e in w.letters:
        if sym.kind != "G":
            out.append((sym, e))
            continue
        gen = coset_table(sym.modulus).generators[sym.index - 1]
        u, c = _conjugate_split(free_reduce(gen.word).letters)
        if len(c) == 1:
            core = [(c[0][0], c[0][1] * e)]
        elif len(c) * abs(e) > max_letters:
            raise ValueError(f"expanding {sym}^{e} exceeds {max_letters} letters")
        else:
            core = (c if e > 0 else [(s, -x) for s, x in reversed(c)]) * abs(e)
        out.extend(u + core + [(s, -x) for s, x in reversed(u)])
        if len(out) > max_letters:
            raise ValueError(f"expanded word exceeds {max_letters} letters")
    return combine_powers(Word(w.genus, tuple(out)))


# --- coset representatives ---------------------------------------------------

def units(k: int) -> list[int]:
    return [u for u in range(1, k) if math.gcd(u, k) == 1]


def coset_word(ell: int, k: int, g: int = 1) -> Word:
    """Tb1^(lbar - 1) Ta1^-1 Tb1^(ell - 1), with ell * lbar = 1 mod k."""
    ell %= k
    if math.gcd(ell, k) != 1:
        raise ValueError(f"{ell} is not a unit mod {k}")
    lbar = pow(ell, -1, k)
    letters = [(Tb(1), lbar - 1), (Ta(1), -1), (Tb(1), ell - 1)]
    return Word(g, tuple((s, e) for s, e in letters if e))


def coset_reps_Sk(k: int, g: int = 1) -> list[tuple[int, Word]]:
    if k < 2:
        raise ValueError("modulus must be >= 2")
    return [(ell, coset_word(ell, k, g)) for ell in units(k)]
