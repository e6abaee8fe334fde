"""The eight acceptance checks, each a seeded function returning a result."""

from __future__ import annotations

import math
import random
import time
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Callable

from sympy import primefactors

from .braids import lifts_agree, parse_braid, verify_k2_generators
from .census import count_primitive, enumerate_primitive, orbit_e1, verify_self_normalizing
from .congruence import coset_reps_Sk, coset_table, gamma1_contains, gamma1_rewrite, units
from .criteria import (CoverParams, lcm_law, lmod_contains, lmod_contains_mod,
                       lmod_contains_orbit, stab_e1_contains, stabilizes_Vg, umod_contains)
from .factorization import factor_stab_e1, lemma1_completion, lemma2_bezout, multiplier_tables
from .homology import eta_embed, iota_matrix
from .linalg import IntMatrix
from .words import (IOTA, Ta, Tb, Tc, Word, evaluate, parse_word, random_word,
                    twist_letters)

# Reference multipliers, 1-based (row, col, value) off the identity.
REFERENCE_MULTIPLIERS = {
    "M2": ((1, 4, 1), (3, 2, 1)),
    "M3": ((1, 3, 1), (4, 2, -1)),
    "M4": ((2, 1, 1),),
    "M5": ((2, 4, 1), (3, 1, -1)),
    "M6": ((2, 3, 1), (4, 1, 1)),
}


def reference_matrix(name: str) -> IntMatrix:
    rows = [[int(i == j) for j in range(4)] for i in range(4)]
    for i, j, v in REFERENCE_MULTIPLIERS[name]:
        rows[i - 1][j - 1] = v
    return IntMatrix.from_rows(rows)


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number}: {self.name} ({self.detail}; {self.seconds:.2f}s)"

    def to_json(self) -> dict:
        return {"criterion": self.number, "name": self.name, "passed": self.passed,
                "detail": self.detail, "seconds": round(self.seconds, 3),
                "failures": [str(f) for f in self.failures[:20]]}


def _timed(number: int, name: str, fn: Callable[[], tuple[bool, str, list]]) -> CriterionResult:
    t0 = time.perf_counter()
    ok, detail, failures = fn()
    return CriterionResult(number, name, ok, detail, time.perf_counter() - t0, failures)


# --- corpora ----------------------------------------------------------------

def lmod_alphabet(g: int, k: int):
    """Letters that stay inside LMod_{p_k}, plus a few that do not."""
    letters = [(Ta(1), 1), (Tb(1), k)] + [(s, 1) for s in twist_letters(g) if s.index > 1 or s.kind == "Tc"]
    return letters


def mixed_corpus(n: int, seed: int, ks=(2, 3, 4, 6), gs=(1, 2, 3)) -> list[tuple[int, int, Word]]:
    """Random words; half over all twists, a quarter over LMod letters, a
    quarter over UMod letters (iota, Ta1 and the handle >= 2 twists)."""
    rng = random.Random(seed)
    out = []
    for i in range(n):
        g, k = rng.choice(gs), rng.choice(ks)
        mode = i % 4
        if mode in (0, 1):
            w = random_word(g, 20, rng)
        elif mode == 2:
            w = random_word(g, 20, rng, lmod_alphabet(g, k))
        else:
            alpha = [(IOTA, 1), (Ta(1), 1)] + [(s, 1) for s in twist_letters(g) if s.index > 1 or s.kind == "Tc"]
            w = random_word(g, 20, rng, alpha)
        out.append((g, k, w))
    return out


def stab_samples(g: int, k: int, count: int, rng: random.Random, max_len: int = 20):
    """Random twist words of length <= max_len filtered by the Mod(e1) criterion."""
    cover = CoverParams(g, k)
    found = []
    while len(found) < count:
        m = evaluate(random_word(g, max_len, rng))
        if stab_e1_contains(m, cover).member:
            found.append(m)
    return found


# --- criteria ---------------------------------------------------------------

def criterion_1(seed: int = 0) -> CriterionResult:
    def run():
        bad = []
        tab = multiplier_tables(1, 0, 0, 1)
        for name in REFERENCE_MULTIPLIERS:
            if getattr(tab, name) != reference_matrix(name):
                bad.append(name)
        # M1 shape and membership from the two lemmas on sample columns
        rng = random.Random(seed)
        for k in (2, 3, 4, 6):
            for m in stab_samples(2, k, 5, rng):
                lam = lemma1_completion(m.col(0), k)
                a1, a2 = lemma2_bezout(lam[0], lam[1], k)
                m1 = multiplier_tables(lam[0], lam[1], a1, a2).M1
                block = IntMatrix(((lam[0], lam[1]), (-a1, a2)))
                if m1 != eta_embed(block, 2) or not gamma1_contains(block, k):
                    bad.append(("M1", k, lam))
        ok = not bad
        return ok, "M2..M6 entry-exact, M1 in eta(Gamma_1(k))" if ok else f"mismatch {bad}", bad
    return _timed(1, "multiplier constants", run)


def criterion_2(seed: int = 0) -> CriterionResult:
    def run():
        rng = random.Random(seed)
        bad = []
        total = 0
        plan = [(2, k, 100) for k in (2, 3, 4, 6)] + [(3, 2, 25)]
        t0 = time.perf_counter()
        for g, k, n in plan:
            for m in stab_samples(g, k, n, rng):
                total += 1
                try:
                    res = factor_stab_e1(m, CoverParams(g, k))
                except AssertionError as exc:
                    bad.append((g, k, m.tolist(), str(exc)))
                    continue
                if not res.verify() or res.alphabet_violations():
                    bad.append((g, k, m.tolist(), res.alphabet_violations()))
        elapsed = time.perf_counter() - t0
        ok = not bad and elapsed <= 60
        return ok, f"{total - len(bad)}/{total} exact", bad
    return _timed(2, "factorization round-trip", run)


def criterion_3(seed: int = 0) -> CriterionResult:
    def run():
        bad = []
        for g, k, w in mixed_corpus(500, seed):
            m = evaluate(w)
            c = CoverParams(g, k)
            a, b, d = lmod_contains(m, c).member, lmod_contains_mod(m, c), lmod_contains_orbit(m, c)
            if not a == b == d:
                bad.append((g, k, str(w)))
        return not bad, f"{len(bad)} disagreements on 500 words", bad
    return _timed(3, "criterion equivalence", run)


def criterion_4(seed: int = 0) -> CriterionResult:
    def run():
        bad = []
        cases = [(1, k) for k in range(2, 7)] + [(2, 2), (2, 3), (3, 2)]
        for g, k in cases:
            n = 2 * g
            formula = Fraction(k**n)
            for p in primefactors(k):
                formula *= 1 - Fraction(1, p**n)
            orbit = orbit_e1(g, k)
            if orbit != set(enumerate_primitive(k, n)):
                bad.append(("orbit", g, k))
            if not len(orbit) == count_primitive(k, n) == formula:
                bad.append(("count", g, k))
        for k in range(2, 13):
            reps = coset_reps_Sk(k)
            seen = set()
            for ell, w in reps:
                col = evaluate(w).col(0)
                if (col[0] - ell) % k or col[1] % k:
                    bad.append(("coset", k, ell))
                seen.add(ell % k)
            phi = sum(1 for u in range(1, k) if math.gcd(u, k) == 1)
            if len(reps) != phi or len(seen) != phi:
                bad.append(("phi", k))
        return not bad, "orbits, counts and coset words exact" if not bad else str(bad), bad
    return _timed(4, "indices and orbits", run)


def criterion_5(seed: int = 0) -> CriterionResult:
    def run():
        bad = []
        members = 0
        for g, k, w in mixed_corpus(500, seed + 1):
            m = evaluate(w)
            u = umod_contains(m, g).member
            members += u
            if u != stabilizes_Vg(m, g):
                bad.append(("Vg", str(w)))
            if u != all(lmod_contains(m, CoverParams(g, j)).member for j in range(2, 13)):
                bad.append(("sweep", str(w)))
            for l in (2, 3, 4, 6):
                x, y, z = lcm_law(m, g, k, l)
                if (x and y) != z:
                    bad.append(("lcm", k, l, str(w)))
            e1 = tuple(int(i == 0) for i in range(2 * g))
            if u and m.col(0) != e1 and (-m).col(0) != e1:
                bad.append(("iota coset", str(w)))
        return not bad, f"{len(bad)} violations on 500 words, {members} UMod members", bad
    return _timed(5, "UMod equivalences", run)


def criterion_6(seed: int = 0) -> CriterionResult:
    def run():
        bad = []
        minus = iota_matrix(2)
        for text in ("(Ta1 Tb1)^3 (Ta2 Tb2)^-3", "(Ta1 Tb1^2)^2 (Ta2 Tb2)^-3"):
            if evaluate(parse_word(text, 2)) != minus:
                bad.append(text)
        if not lifts_agree(parse_braid("s2 s1^2 s2^-1", 6), parse_braid("s1^-1 s2^2 s1", 6), 2):
            bad.append("lift rewrite")
        rep = verify_k2_generators(2)
        if rep.perm_group_order != 48 or rep.index_in_symmetric != 15:
            bad.append(("order", rep.perm_group_order))
        if rep.non_members or not rep.iota_identity:
            bad.append(("members", rep.non_members))
        return not bad, "iota words, lift rewrite, order 48 / index 15, five generators" if not bad else str(bad), bad
    return _timed(6, "hyperelliptic identities", run)


def criterion_7(seed: int = 0) -> CriterionResult:
    def run():
        bad = []
        t0 = time.perf_counter()
        parts = []
        for g, k, expect in ((2, 2, 14), (2, 3, 78)):
            s = verify_self_normalizing(g, k, max_len=4)
            independent = all(r.recheck() for r in s.reports)
            if not s.success or s.eligible != expect or s.max_witness_length > 4 or not independent:
                bad.append((g, k, s.to_json()))
            parts.append(f"({g},{k}): {s.witnessed}/{s.eligible}, max len {s.max_witness_length}")
        elapsed = time.perf_counter() - t0
        return not bad and elapsed <= 10, "; ".join(parts), bad
    return _timed(7, "self-normalizing witnesses", run)


def criterion_8(seed: int = 0) -> CriterionResult:
    def run():
        rng = random.Random(seed)
        bad = []
        counts = []
        for k in (2, 3, 4, 5, 6, 12):
            table = coset_table(k)
            for gen in table.generators:
                if not gamma1_contains(gen.matrix, k) or evaluate(gen.word) != gen.matrix:
                    bad.append(("generator", k, gen.index))
            done = 0
            while done < 100:
                w = random_word(1, 20, rng)
                m = evaluate(w)
                if not gamma1_contains(m, k):
                    continue
                done += 1
                prod = IntMatrix.identity(2)
                for gen, e in gamma1_rewrite(m, k):
                    prod = prod @ (gen.matrix ** e)
                if prod != m:
                    bad.append(("rewrite", k, m.tolist()))
            counts.append(f"k={k}: {len(table.generators)} gens")
        return not bad, ", ".join(counts), bad
    return _timed(8, "Gamma_1(k) machinery", run)


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4,
            criterion_5, criterion_6, criterion_7, criterion_8)

SUITES = {
    "all": (1, 2, 3, 4, 5, 6, 7, 8),
    "criteria": (3, 5),
    "factor": (1, 2, 8),
    "census": (4, 7),
    "braid": (6,),
}


def run_suite(name: str = "all", seed: int = 0) -> list[CriterionResult]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return [CRITERIA[i - 1](seed) for i in SUITES[name]]
