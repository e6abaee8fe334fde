from __future__ import annotations

import pytest

from liftmod.braids import genus2_extra_generators
from liftmod.criteria import CoverParams, lmod_contains, umod_contains
from liftmod.gensets import (generating_set_lmod, generating_set_lmod_parts,
                             generating_set_umod)
from liftmod.linalg import IntMatrix
from liftmod.words import evaluate


def _columns_mod2(m: IntMatrix) -> tuple[int, ...]:
    n = m.shape[0]
    return tuple(sum(((m[i, j] % 2) << i) for i in range(n)) for j in range(n))


def _mul(a, b):
    # columns of a @ b, matrices stored as column bitmasks over F_2
    out = []
    for col in b:
        acc, i = 0, 0
        while col:
            if col & 1:
                acc ^= a[i]
            col >>= 1
            i += 1
        out.append(acc)
    return tuple(out)


def group_order_mod2(mats) -> int:
    gens = [_columns_mod2(m) for m in mats]
    ident = tuple(1 << j for j in range(mats[0].shape[0]))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _mul(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_every_generator_is_liftable(k):
    for w in generating_set_lmod(3, k):
        assert lmod_contains(evaluate(w), CoverParams(3, k)).member


def test_parts_g3_k2():
    parts = generating_set_lmod_parts(3, 2)
    assert [len(w) for w in parts.coset_words] == [0]
    assert len(parts.torelli) == 2
    for w in parts.torelli:
        assert evaluate(w) == IntMatrix.identity(6)
    assert len(parts.twists) == 6


def test_coset_part_size_is_phi():
    assert len(generating_set_lmod_parts(3, 12).coset_words) == 4
    assert len(generating_set_lmod_parts(4, 7).coset_words) == 6


def test_genus_scope():
    with pytest.raises(ValueError):
        generating_set_lmod(2, 2)
    with pytest.raises(ValueError):
        generating_set_umod(2)


def test_umod_set():
    ws = generating_set_umod(3)
    assert all(umod_contains(evaluate(w), 3).member for w in ws)


def test_generates_stabilizer_mod2_genus3():
    # |Sp(6, F_2)| / 63 primitive vectors
    mats = [evaluate(w) for w in generating_set_lmod(3, 2)]
    assert group_order_mod2(mats) == 1451520 // 63


def test_genus2_k2_generators_mod2():
    mats = [evaluate(w) for w in genus2_extra_generators()]
    assert group_order_mod2(mats) == 720 // 15
