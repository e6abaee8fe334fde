from __future__ import annotations

import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liftmod.census import (count_primitive, enumerate_primitive, index_table, is_primitive,
                            orbit_e1, unit_line, verify_self_normalizing,
                            witness_self_normalizing)
from liftmod.criteria import CoverParams, PreconditionError, lmod_contains
from liftmod.words import evaluate


def brute_count(k, n):
    return sum(1 for v in itertools.product(range(k), repeat=n) if math.gcd(k, *v) == 1)


def test_count_examples():
    assert count_primitive(2, 4) == 15
    assert count_primitive(6, 2) == 24
    assert count_primitive(3, 2) == 8
    with pytest.raises(ValueError):
        count_primitive(1, 2)


@given(st.integers(2, 12), st.integers(1, 4))
def test_count_matches_enumeration(k, n):
    if k**n > 30000:
        return
    assert count_primitive(k, n) == len(enumerate_primitive(k, n)) == brute_count(k, n)


@given(st.integers(2, 9), st.data())
def test_primitive_set_unit_closed(k, data):
    v = data.draw(st.tuples(*[st.integers(0, k - 1)] * 4))
    if not is_primitive(v, k):
        return
    for w in unit_line(v, k):
        assert is_primitive(w, k)


@pytest.mark.parametrize("g,k", [(g, k) for g in (1, 2, 3) for k in (2, 3, 4, 5)])
def test_orbit_is_primitive_set(g, k):
    orb = orbit_e1(g, k)
    assert orb == set(enumerate_primitive(k, 2 * g))
    assert tuple(int(i == 1) for i in range(2 * g)) in orb


def test_orbit_examples():
    assert len(orbit_e1(1, 3)) == 8
    assert len(orbit_e1(2, 2)) == 15


def test_index_tables():
    t = index_table(2, 2)
    assert (t.phi, t.primitive, t.index_lmod) == (1, 15, 15)
    t = index_table(1, 5)
    assert (t.phi, t.primitive, t.index_lmod) == (4, 24, 6)
    for g in (1, 2, 3):
        for k in range(2, 13):
            t = index_table(g, k)
            assert t.primitive == t.phi * t.index_lmod
            if k == 2:
                assert t.index_lmod == t.index_stab_e1


def test_witness_examples():
    r = witness_self_normalizing((0, 1, 0, 0), 2, 2)
    assert str(r.word) == "Tc1" and r.image == (1, 1, 1, 0) and r.method == "case2"
    r = witness_self_normalizing((0, 0, 1, 0), 2, 2)
    assert str(r.word) == "Tb2" and r.image == (0, 0, 1, 1)
    assert r.recheck()
    with pytest.raises(PreconditionError):
        witness_self_normalizing((1, 0, 0, 0), 2, 2)
    with pytest.raises(PreconditionError):
        witness_self_normalizing((2, 0, 0, 0), 2, 3)   # 2 e1 is on the unit line
    with pytest.raises(PreconditionError):
        witness_self_normalizing((0, 2, 0, 2), 2, 4)   # not primitive


def test_exhaustion_is_reported():
    r = witness_self_normalizing((0, 0, 1, 0), 2, 3, max_len=0)
    assert not r.found and r.method == "exhausted" and not r.recheck()


@pytest.mark.parametrize("g,k,n", [(2, 2, 14), (2, 3, 78), (3, 2, 62), (2, 4, 238)])
def test_verify_self_normalizing(g, k, n):
    s = verify_self_normalizing(g, k, max_len=4)
    assert s.success and s.eligible == n and s.max_witness_length <= 4
    for rep in s.reports:
        m = evaluate(rep.word)
        assert lmod_contains(m, CoverParams(g, k)).member
        img = tuple(x % k for x in m @ rep.vector)
        assert img == rep.image and img not in unit_line(rep.vector, k)


def test_selfnorm_scope_and_bound():
    with pytest.raises(PreconditionError):
        verify_self_normalizing(1, 3)
    with pytest.raises(PreconditionError):
        verify_self_normalizing(4, 6)
    s = verify_self_normalizing(4, 6, sample=10, seed=1)
    assert s.sampled and s.success and s.eligible == 10
