"""Constructive factorization of symplectic matrices that fix e1 mod k.

For ``A`` in Psi(Mod_{p_k}(S_g, e1)) we multiply ``A`` on the left by
elements of the generating set

    eta_g(Gamma_1(k))  u  {Ta2, Tb2, ..., Tag, Tbg, Tc1, ..., Tc(g-1)}

until the identity is reached, then invert the recorded product.  Handle-1
twists Ta1 and Tb1^(multiple of k) are kept as Gamma_1(k) matrices and are
rewritten through the Schreier generators at the end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from sympy import isprime

from .congruence import coset_word, gamma1_contains, rewrite_word
from .criteria import CoverParams, PreconditionError, lmod_contains, stab_e1_contains
from .homology import curve_class, eta_embed, transvection
from .linalg import IntMatrix, as_matrix, bezout_vector, ext_gcd, is_symplectic, vector_gcd
from .words import GeneratorSymbol, Word, combine_powers, evaluate, format_word


class FactorizationError(AssertionError):
    """An intermediate claim of the reduction failed; carries the trace."""

    def __init__(self, message: str, trace=()):
        super().__init__(message)
        self.trace = list(trace)


# --- number theory ----------------------------------------------------------

def lemma1_completion(a: Sequence[int], k: int | None = None) -> tuple[int, ...]:
    """B with a . B = 1 and gcd(B1, B2) = 1.

    If ``k`` is given and a = e1 mod k then also B1 = 1 mod k.
    """
    a = [int(x) for x in a]
    if vector_gcd(a) != 1:
        raise ValueError(f"gcd of {tuple(a)} is not 1")
    n = len(a)
    if n == 1:
        return (a[0],)
    a11, a21 = a[0], a[1]
    delta = vector_gcd(a[1:])
    if delta == 0:
        return tuple([a11] + [0] * (n - 1))
    _, x1, x2 = ext_gcd(a11, delta)
    if x1 == 0:
        x1, x2 = x1 + delta, x2 - a11
    gamma = vector_gcd(a[2:])
    if x2 == 0:
        lam = [x1] + [0] * (n - 1)
    elif gamma == 0:
        lam = [x1, x2 * (1 if a21 > 0 else -1)] + [0] * (n - 2)
    else:
        tail = bezout_vector(a[2:])
        _, b1, b2 = ext_gcd(a21, gamma)
        step = gamma // delta
        big = abs(x1)
        # Dirichlet: b1 + N*step is prime for some N, since gcd(b1, step) = 1
        N = 0
        while not (b1 + N * step > big and isprime(b1 + N * step)):
            N += 1
        beta1 = b1 + N * step
        beta2 = b2 - N * (a21 // delta)
        lam = [x1, x2 * beta1] + [x2 * beta2 * t for t in tail]
    if sum(x * y for x, y in zip(a, lam)) != 1 or math.gcd(lam[0], lam[1]) != 1:
        raise AssertionError(f"completion failed for {tuple(a)}")
    if k is not None and (a11 - 1) % k == 0 and all(x % k == 0 for x in a[1:]):
        if (lam[0] - 1) % k:
            raise AssertionError("B1 is not 1 mod k")
    return tuple(lam)


def lemma2_bezout(l1: int, l2: int, k: int) -> tuple[int, int]:
    """(alpha1, alpha2) with l1*alpha2 + l2*alpha1 = 1 and alpha1 = 0 mod k.

    alpha1 = k*i for the least i >= 0 that works.
    """
    if math.gcd(l1, l2) != 1:
        raise ValueError(f"{l1} and {l2} are not coprime")
    if (l1 - 1) % k:
        raise ValueError(f"{l1} is not 1 mod {k}")
    n = abs(l1)
    i = 0 if n == 1 else pow(l2 * k % n, -1, n)
    alpha1 = k * i
    alpha2, r = divmod(1 - l2 * alpha1, l1)
    if r:
        raise AssertionError("lemma 2 division was not exact")
    return alpha1, alpha2


# --- multiplier words -------------------------------------------------------
# An atom is ("t", symbol, e) for a twist letter or ("g", 2x2 matrix) for an
# element of eta_g(Gamma_1(k)).

def _tw(kind: str, i: int, e: int):
    return ("t", GeneratorSymbol(kind, i), e)


def _inv_atoms(atoms):
    out = []
    for at in reversed(atoms):
        if at[0] == "t":
            out.append(("t", at[1], -at[2]))
        else:
            m = at[1]
            out.append(("g", IntMatrix(((m[1, 1], -m[0, 1]), (-m[1, 0], m[0, 0])))))
    return out


def _ta1(e: int):
    return ("g", IntMatrix(((1, e), (0, 1))))


def _tb1(e: int):
    return ("g", IntMatrix(((1, 0), (-e, 1))))


def _a(h: int, e: int, handle1_gamma: bool):
    return _ta1(e) if h == 1 and handle1_gamma else _tw("Ta", h, e)


def _b(h: int, e: int, handle1_gamma: bool):
    return _tb1(e) if h == 1 and handle1_gamma else _tw("Tb", h, e)


def _rot(h: int, gam: bool):
    """Ta_h Tb_h Ta_h, acting as [[0, 1], [-1, 0]] on handle h."""
    return [_a(h, 1, gam), _b(h, 1, gam), _a(h, 1, gam)]


def m2_atoms(h: int, n: int, gam: bool):
    """M2^n across handles (h, h+1): a_h += n b_{h+1}, a_{h+1} += n b_h."""
    return [_tw("Ta", h + 1, n), _a(h, n, gam), _tw("Tc", h, -n)]


def m3_atoms(h: int, n: int, gam: bool):
    """M3^n: a_h += n a_{h+1}, b_{h+1} -= n b_h."""
    c = [_tw("Ta", h + 1, 1), _tw("Tb", h + 1, 1), _tw("Ta", h + 1, 1)]
    return c + m2_atoms(h, n, gam) + _inv_atoms(c)


def y_atoms(h: int, n: int, gam: bool):
    """Rot_h^-1 M2^n Rot_h: a_{h+1} -= n a_h, b_h += n b_{h+1}."""
    r = _rot(h, gam)
    return _inv_atoms(r) + m2_atoms(h, n, gam) + r


def m5_atoms(n: int):
    """M5^n = M2 Tb1^n M2^-1 Tb1^-n Ta2^-n (handles 1, 2)."""
    m2 = m2_atoms(1, 1, True)
    return m2 + [_tb1(n)] + _inv_atoms(m2) + [_tb1(-n), _tw("Ta", 2, -n)]


def m6_atoms(n: int):
    c = [_tw("Ta", 2, 1), _tw("Tb", 2, 1), _tw("Ta", 2, 1)]
    return c + m5_atoms(n) + _inv_atoms(c)


def atoms_matrix(atoms, g: int) -> IntMatrix:
    m = IntMatrix.identity(2 * g)
    for at in atoms:
        if at[0] == "t":
            sym = at[1]
            m = m @ transvection(curve_class(sym.kind[1], sym.index, g), at[2])
        else:
            m = m @ eta_embed(at[1], g)
    return m


@dataclass(frozen=True)
class MultiplierTable:
    M1: IntMatrix
    M2: IntMatrix
    M3: IntMatrix
    M4: IntMatrix
    M5: IntMatrix
    M6: IntMatrix
    words: dict = field(compare=False)


def multiplier_tables(l1: int, l2: int, a1: int, a2: int, g: int = 2) -> MultiplierTable:
    """The six multipliers, each built from its defining twist word."""
    if l1 * a2 + l2 * a1 != 1:
        raise ValueError("need l1*a2 + l2*a1 = 1")
    from .words import parse_word

    m2w = parse_word("(Tc1 Ta1^-1 Ta2^-1)^-1", g)
    c = parse_word("Ta2 Tb2 Ta2", g)
    m3w = c * m2w * ~c
    m4w = parse_word("Tb1^-1", g)
    m5w = parse_word("Tb1^-1 Ta2^-1", g) * m2w * parse_word("Tb1", g) * ~m2w
    m6w = c * m5w * ~c
    words = {"M2": m2w, "M3": m3w, "M4": m4w, "M5": m5w, "M6": m6w}
    mats = {name: evaluate(w) for name, w in words.items()}
    m1 = eta_embed(IntMatrix(((l1, l2), (-a1, a2))), g)
    return MultiplierTable(m1, mats["M2"], mats["M3"], mats["M4"], mats["M5"], mats["M6"], words)


# --- reduction engine --------------------------------------------------------

class _Reducer:
    """Left-multiplies a working matrix and records the multipliers."""

    def __init__(self, a: IntMatrix, g: int, k: int | None):
        self.g = g
        self.k = k
        self.cur = a
        self.applied: list[list] = []
        self.trace: list[tuple[str, int]] = []

    def fail(self, msg: str):
        raise FactorizationError(f"{msg}; trace = {self.trace}", self.trace)

    def apply(self, name: str, exponent: int, atoms) -> None:
        self.trace.append((name, exponent))
        if exponent == 0:
            return
        self.cur = atoms_matrix(atoms, self.g) @ self.cur
        self.applied.append(atoms)

    def gam(self) -> bool:
        return self.k is not None

    # Euclid inside handle h on column j, then make the a-entry >= 0
    def _handle_euclid(self, j: int, h: int) -> None:
        from .congruence import euclid_steps

        ra, rb = 2 * h - 2, 2 * h - 1
        gam = self.gam()
        for kind, n in euclid_steps(self.cur[ra, j], self.cur[rb, j]):
            if kind == "a":
                self.apply(f"Ta{h}", n, [_a(h, n, gam)])
            else:
                if h == 1 and gam:
                    self.fail("Tb1 is not available inside Mod(e1)")
                self.apply(f"Tb{h}", n, [_b(h, n, gam)])
        if self.cur[ra, j] < 0:
            self.apply(f"Rot{h}^2", 1, _rot(h, gam) * 2)

    def compress_tail(self, j: int, h: int) -> None:
        """Bring rows of handles >= h in column j to (d, 0, ..., 0)."""
        g = self.g
        for t in range(h, g + 1):
            self._handle_euclid(j, t)
        from .congruence import euclid_steps

        gam = self.gam()
        for t in range(g, h, -1):
            x, y = 2 * t - 4, 2 * t - 2
            for kind, n in euclid_steps(self.cur[x, j], self.cur[y, j]):
                if kind == "a":
                    self.apply(f"X{t - 1}", n, m3_atoms(t - 1, n, gam))
                else:
                    self.apply(f"Y{t - 1}", n, y_atoms(t - 1, n, gam))
            if self.cur[x, j] < 0:
                self.apply(f"Rot{t - 1}^2", 1, _rot(t - 1, gam) * 2)

    def factor_block(self, h0: int) -> None:
        """Reduce diag(I, S) with S symplectic on handles h0..g to I."""
        g = self.g
        gam = self.gam()
        for h in range(h0, g + 1):
            ca, cb = 2 * h - 2, 2 * h - 1
            self.compress_tail(ca, h)
            if self.cur.col(ca) != _unit(ca, 2 * g):
                self.fail(f"column a{h} did not reduce to a unit vector")
            if self.cur.row(cb) != _unit(cb, 2 * g):
                self.fail(f"row b{h} is not a unit vector")
            if h < g:
                self.compress_tail(cb, h + 1)
                q = self.cur[2 * h, cb]
                self.apply(f"M2[{h}]", -q, m2_atoms(h, -q, gam))
            p = self.cur[ca, cb]
            self.apply(f"Ta{h}", -p, [_a(h, -p, gam)])
            if self.cur.col(cb) != _unit(cb, 2 * g):
                self.fail(f"column b{h} did not reduce to a unit vector")
        if not self.cur.is_identity():
            self.fail("block reduction did not reach the identity")

    def word(self, k: int | None) -> Word:
        """The word for the original matrix: inverses of the multipliers in order."""
        atoms = []
        for block in self.applied:
            atoms.extend(_inv_atoms(block))
        return assemble(atoms, self.g, k)


def _unit(i: int, n: int) -> tuple[int, ...]:
    return tuple(int(j == i) for j in range(n))


def assemble(atoms, g: int, k: int | None) -> Word:
    """Merge runs of Gamma_1(k) atoms and rewrite them through the Schreier
    generators (or through Ta1/Tb1 when k is None)."""
    letters: list = []
    run: IntMatrix | None = None

    def flush():
        nonlocal run
        if run is not None and not run.is_identity():
            if k is None:
                from .congruence import sl2_decompose
                letters.extend(sl2_decompose(run).letters)
            else:
                if not gamma1_contains(run, k):
                    raise FactorizationError("a handle-1 block left Gamma_1(k)")
                letters.extend(rewrite_word(run, k, g).letters)
        run = None

    for at in atoms:
        if at[0] == "g":
            run = at[1] if run is None else run @ at[1]
        else:
            flush()
            letters.append((at[1], at[2]))
    flush()
    return combine_powers(Word(g, tuple(letters)))


# --- public API --------------------------------------------------------------

@dataclass(frozen=True)
class FactorizationResult:
    matrix: IntMatrix
    cover: CoverParams
    word: Word
    trace: tuple[tuple[str, int], ...]
    unit: int = 1
    coset_word: Word | None = None
    stab_word: Word | None = None

    def verify(self) -> bool:
        return evaluate(self.word) == self.matrix

    def alphabet_violations(self) -> list[str]:
        return alphabet_violations(self)

    def to_json(self) -> dict:
        from .congruence import coset_table

        gens = {}
        for sym, _ in self.word.letters:
            if sym.kind == "G":
                gen = coset_table(sym.modulus).generators[sym.index - 1]
                gens[str(sym)] = {"matrix": gen.matrix.tolist(), "word": format_word(gen.word)}
        out = {"genus": self.cover.g, "sheets": self.cover.k, "unit": self.unit,
               "word": format_word(self.word), "gamma1_letters": gens,
               "trace": [[n, e] for n, e in self.trace], "matrix": self.matrix.tolist()}
        if self.coset_word is not None:
            out["coset_word"] = format_word(self.coset_word)
        return out


def _symplectic_or_raise(a, g: int) -> IntMatrix:
    a = as_matrix(a)
    if a.shape != (2 * g, 2 * g) or not is_symplectic(a, g):
        raise PreconditionError("input is not a symplectic matrix of the right size")
    return a


def factor_stab_e1(a, cover: CoverParams) -> FactorizationResult:
    g, k = cover.g, cover.k
    a = _symplectic_or_raise(a, g)
    if g < 2:
        raise PreconditionError("factor_stab_e1 needs genus >= 2")
    if not stab_e1_contains(a, cover).member:
        raise PreconditionError(f"matrix does not fix e1 mod {k}")
    r = _Reducer(a, g, k)

    if g >= 3:
        r.compress_tail(0, 2)

    lam = lemma1_completion(r.cur.col(0), k)
    al1, al2 = lemma2_bezout(lam[0], lam[1], k)
    m1 = IntMatrix(((lam[0], lam[1]), (-al1, al2)))
    if not gamma1_contains(m1, k):
        r.fail("M1 is not in Gamma_1(k)")
    r.apply("M1", 1, [("g", m1)])
    l3, l4 = lam[2], lam[3]
    r.apply("M2", l4, m2_atoms(1, l4, True))
    r.apply("M3", l3, m3_atoms(1, l3, True))
    r.apply("Ta1", -l3 * l4, [_ta1(-l3 * l4)])
    if r.cur[0, 0] != 1:
        r.fail(f"A1(1,1) = {r.cur[0, 0]}, expected 1")

    y, z = r.cur[2, 0], r.cur[3, 0]
    if y % k or z % k:
        r.fail("M5/M6 exponents are not multiples of k")
    r.apply("M6", -z, m6_atoms(-z))
    r.apply("M5", y, m5_atoms(y))
    x = r.cur[1, 0]
    if x % k:
        r.fail("M4 exponent is not a multiple of k")
    r.apply("M4", -x, [_tb1(x)])
    if r.cur.col(0) != _unit(0, 2 * g):
        r.fail("column 1 of A3 is not e1")
    if r.cur.row(1) != _unit(1, 2 * g):
        r.fail("row 2 of A3 is not e2")

    if g >= 3:
        r.compress_tail(1, 2)
    q, s = r.cur[2, 1], r.cur[3, 1]
    r.apply("M3", s, m3_atoms(1, s, True))
    r.apply("M2", -q, m2_atoms(1, -q, True))
    if any(r.cur[i, 1] for i in range(2, 2 * g)):
        r.fail("column 2 of A4 is not cleared below row 2")
    p = r.cur[0, 1]
    r.apply("Ta1", -p, [_ta1(-p)])
    if r.cur.col(1) != _unit(1, 2 * g) or r.cur.row(0) != _unit(0, 2 * g):
        r.fail("A5 is not block diagonal")

    r.factor_block(2)
    word = r.word(k)
    res = FactorizationResult(a, cover, word, tuple(r.trace), 1, None, word)
    if not res.verify():
        raise FactorizationError("round trip failed", r.trace)
    return res


def factor_lmod(a, cover: CoverParams) -> FactorizationResult:
    """Split off the coset word R_ell, then factor the Mod(e1) part."""
    g, k = cover.g, cover.k
    a = _symplectic_or_raise(a, g)
    v = lmod_contains(a, cover)
    if not v.member:
        raise PreconditionError(f"matrix is not liftable for k = {k} (fails {v.requirement})")
    ell = v.unit
    # ell = 1 needs no coset shift
    rw = coset_word(ell, k, g) if ell != 1 else Word(g)
    rest = evaluate(~rw) @ a
    stab = factor_stab_e1(rest, cover)
    word = rw * stab.word
    res = FactorizationResult(a, cover, word, stab.trace, ell, rw, stab.word)
    if not res.verify():
        raise FactorizationError("round trip failed", stab.trace)
    return res


def factor_symplectic(a, g: int) -> Word:
    """Any element of Sp(2g, Z) as a word in Ta_i, Tb_i, Tc_i."""
    a = _symplectic_or_raise(a, g)
    r = _Reducer(a, g, None)
    r.factor_block(1)
    w = r.word(None)
    if evaluate(w) != a:
        raise FactorizationError("round trip failed", r.trace)
    return w


def alphabet_violations(res: FactorizationResult) -> list[str]:
    """Letters of the stabilizer word outside eta(Gamma_1(k)) u {Ta_j, Tb_j (j >= 2), Tc_i}."""
    from .congruence import coset_table

    k = res.cover.k
    bad = []
    word = res.stab_word if res.stab_word is not None else res.word
    for sym, e in word.letters:
        if sym.kind == "G":
            if sym.modulus != k:
                bad.append(f"{sym} belongs to modulus {sym.modulus}")
            elif not gamma1_contains(coset_table(k).generators[sym.index - 1].matrix, k):
                bad.append(f"{sym} is not in Gamma_1({k})")
        elif sym.kind in ("Ta", "Tb"):
            if sym.index < 2:
                bad.append(f"bare {sym}^{e}")
        elif sym.kind != "Tc":
            bad.append(f"unexpected letter {sym}")
    for name, e in res.trace:
        if name in ("M4", "M5", "M6") and e % k:
            bad.append(f"{name}^{e} with exponent not divisible by {k}")
    return bad
