"""Liftability predicates for the cyclic covers p_k : S_{k(g-1)+1} -> S_g.

All criteria read the second row of Psi(f), i.e. the row of the b1
coordinate: row 2 must vanish mod k off the diagonal with a unit on it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .linalg import IntMatrix, as_matrix, is_symplectic, mod_reduce


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class CoverParams:
    g: int
    k: int

    def __post_init__(self):
        if self.g < 1:
            raise PreconditionError("genus must be >= 1")
        if self.k < 2:
            raise PreconditionError("number of sheets must be >= 2")

    @property
    def covering_genus(self) -> int:
        return self.k * (self.g - 1) + 1


@dataclass(frozen=True)
class MembershipVerdict:
    predicate: str
    member: bool
    subject: IntMatrix = field(repr=False)
    # (row, col) 1-based and the violated requirement, for non-members
    failing_entry: tuple[int, int] | None = None
    requirement: str = ""
    unit: int | None = None

    def __bool__(self) -> bool:
        return self.member

    def to_json(self) -> dict:
        out = {"predicate": self.predicate, "member": self.member}
        if self.failing_entry is not None:
            out["failing_entry"] = list(self.failing_entry)
            out["requirement"] = self.requirement
        if self.unit is not None:
            out["unit"] = self.unit
        return out


def _checked(m, g: int) -> IntMatrix:
    m = as_matrix(m)
    if m.shape != (2 * g, 2 * g):
        raise PreconditionError(f"expected a {2 * g}x{2 * g} matrix, got {m.shape}")
    if not is_symplectic(m, g):
        raise PreconditionError("matrix is not symplectic")
    return m


def lmod_contains(m, cover: CoverParams) -> MembershipVerdict:
    """k | d_{2i} for i != 2 and gcd(d_22, k) = 1.

    ``unit`` is ell = d_11 mod k, the unit with M e1 = ell e1 mod k (its
    inverse mod k is d_22).
    """
    g, k = cover.g, cover.k
    m = _checked(m, g)
    row = m.row(1)
    for j, x in enumerate(row):
        if j != 1 and x % k:
            return MembershipVerdict("lmod", False, m, (2, j + 1), f"{k} | d_2{j + 1}")
    if math.gcd(row[1], k) != 1:
        return MembershipVerdict("lmod", False, m, (2, 2), f"gcd(d_22, {k}) = 1")
    return MembershipVerdict("lmod", True, m, unit=m[0, 0] % k)


def lmod_contains_mod(m, cover: CoverParams) -> bool:
    """The same criterion read on Psi_k(f)."""
    g, k = cover.g, cover.k
    r = mod_reduce(_checked(m, g), k)
    row = r.entries[1]
    return all(x == 0 for j, x in enumerate(row) if j != 1) and math.gcd(row[1], k) == 1


def lmod_contains_orbit(m, cover: CoverParams) -> bool:
    """M e1 lies in {ell e1 : ell a unit mod k}."""
    g, k = cover.g, cover.k
    col = [x % k for x in _checked(m, g).col(0)]
    return all(x == 0 for x in col[1:]) and math.gcd(col[0], k) == 1


def stab_e1_contains(m, cover: CoverParams) -> MembershipVerdict:
    g, k = cover.g, cover.k
    m = _checked(m, g)
    col = m.col(0)
    if (col[0] - 1) % k:
        return MembershipVerdict("stab_e1", False, m, (1, 1), f"d_11 = 1 mod {k}")
    for i, x in enumerate(col[1:], start=2):
        if x % k:
            return MembershipVerdict("stab_e1", False, m, (i, 1), f"{k} | d_{i}1")
    return MembershipVerdict("stab_e1", True, m, unit=1)


def umod_contains(m, g: int) -> MembershipVerdict:
    """Integral criterion: row 2 is (0, +-1, 0, ..., 0)."""
    m = _checked(m, g)
    row = m.row(1)
    for j, x in enumerate(row):
        if j != 1 and x != 0:
            return MembershipVerdict("umod", False, m, (2, j + 1), f"d_2{j + 1} = 0")
    if row[1] not in (1, -1):
        return MembershipVerdict("umod", False, m, (2, 2), "d_22 = +-1")
    return MembershipVerdict("umod", True, m, unit=row[1])


def stabilizes_Vg(m, g: int) -> bool:
    """M maps span{e_j : j != 2} = <a1..ag, b2..bg> into itself."""
    m = _checked(m, g)
    return all(m[1, j] == 0 for j in range(2 * g) if j != 1)


def lcm_law(m, g: int, k: int, l: int) -> tuple[bool, bool, bool]:
    d = k * l // math.gcd(k, l)
    return (lmod_contains(m, CoverParams(g, k)).member,
            lmod_contains(m, CoverParams(g, l)).member,
            lmod_contains(m, CoverParams(g, d)).member)


def word_verdict(predicate, word, *args):
    """Evaluate a word first, then apply a matrix predicate."""
    from .words import evaluate
    return predicate(evaluate(word), *args)
