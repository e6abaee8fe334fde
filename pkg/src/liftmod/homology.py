"""Homology classes, Dehn twist matrices, chains and bounding pairs.

Basis order is (a1, b1, ..., ag, bg) = (e1, ..., e2g).  The curve c_i has
class a_i - a_{i+1}; a twist about a curve with class c acts by the
transvection x -> x - <x, c> c.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .linalg import IntMatrix, pairing, rank

_TWIST_RE = re.compile(r"^T([abc])(\d+)$")


def basis_vector(i: int, n: int) -> tuple[int, ...]:
    """Unit vector e_i (1-based) of length n."""
    return tuple(int(j == i - 1) for j in range(n))


def curve_class(kind: str, index: int, g: int) -> tuple[int, ...]:
    """Homology class of the standard curve a_i, b_i or c_i."""
    n = 2 * g
    if kind == "a":
        if not 1 <= index <= g:
            raise IndexError(f"a{index} needs 1 <= i <= {g}")
        return basis_vector(2 * index - 1, n)
    if kind == "b":
        if not 1 <= index <= g:
            raise IndexError(f"b{index} needs 1 <= i <= {g}")
        return basis_vector(2 * index, n)
    if kind == "c":
        if not 1 <= index <= g - 1:
            raise IndexError(f"c{index} needs 1 <= i <= {g - 1}")
        v = [0] * n
        v[2 * index - 2] = 1
        v[2 * index] = -1
        return tuple(v)
    raise ValueError(f"unknown curve kind {kind!r}")


def transvection(c: Sequence[int], power: int = 1) -> IntMatrix:
    """Matrix of x -> x - power * <x, c> c."""
    n = len(c)
    # <x, c> = sum_j x_j (J c)_j ; (J c) pairs a_i with b_i
    jc = [0] * n
    for i in range(n // 2):
        jc[2 * i] = c[2 * i + 1]
        jc[2 * i + 1] = -c[2 * i]
    return IntMatrix(tuple(tuple(int(r == s) - power * c[r] * jc[s] for s in range(n))
                           for r in range(n)))


def _split_symbol(symbol) -> tuple[str, int]:
    if isinstance(symbol, str):
        m = _TWIST_RE.match(symbol.strip())
        if not m:
            raise ValueError(f"not a twist symbol: {symbol!r}")
        return m.group(1), int(m.group(2))
    kind = symbol.kind
    if kind not in ("Ta", "Tb", "Tc"):
        raise ValueError(f"not a twist symbol: {symbol}")
    return kind[1], symbol.index


@lru_cache(maxsize=None)
def _twist(kind: str, index: int, g: int) -> IntMatrix:
    return transvection(curve_class(kind, index, g))


def twist_matrix(symbol, g: int) -> IntMatrix:
    """Psi of the Dehn twist about a_i, b_i or c_i (``"Ta1"``, ``"Tc2"``, ...)."""
    kind, index = _split_symbol(symbol)
    return _twist(kind, index, g)


def iota_matrix(g: int) -> IntMatrix:
    if g < 1:
        raise ValueError("genus must be >= 1")
    return IntMatrix.identity(2 * g).scale(-1)


def eta_embed(a: IntMatrix, g: int) -> IntMatrix:
    """Embed a 2x2 unimodular matrix into the top-left block of I_{2g}."""
    if a.shape != (2, 2):
        raise ValueError("eta_embed needs a 2x2 matrix")
    if a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0] != 1:
        raise ValueError("eta_embed needs determinant 1")
    rows = IntMatrix.identity(2 * g).tolist()
    rows[0][0], rows[0][1] = a[0, 0], a[0, 1]
    rows[1][0], rows[1][1] = a[1, 0], a[1, 1]
    return IntMatrix.from_rows(rows)


# --- chains ---------------------------------------------------------------

@dataclass(frozen=True)
class ChainReport:
    consecutive_plus_one: bool
    nonadjacent_zero: bool
    independent: bool
    failures: tuple[str, ...] = ()

    @property
    def valid(self) -> bool:
        return self.consecutive_plus_one and self.nonadjacent_zero and self.independent


@dataclass(frozen=True)
class Chain:
    """Ordered homology classes of an oriented chain of curves."""
    genus: int
    classes: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.classes)

    def sub(self, indices: Sequence[int]) -> "Chain":
        """Subtuple by 1-based positions."""
        labels = tuple(self.labels[i - 1] for i in indices) if self.labels else ()
        return Chain(self.genus, tuple(self.classes[i - 1] for i in indices), labels)

    def report(self) -> ChainReport:
        return validate_chain(self.classes)


def validate_chain(classes: Sequence[Sequence[int]]) -> ChainReport:
    """Check the algebraic chain conditions.

    Linear independence is reported honestly; it necessarily fails for a
    chain longer than the rank 2g.
    """
    classes = [tuple(c) for c in classes]
    fails = []
    a = True
    for i in range(len(classes) - 1):
        p = pairing(classes[i], classes[i + 1])
        if p != 1:
            a = False
            fails.append(f"<g{i + 1}, g{i + 2}> = {p}, expected +1")
    b = True
    for i in range(len(classes)):
        for j in range(i + 2, len(classes)):
            p = pairing(classes[i], classes[j])
            if p != 0:
                b = False
                fails.append(f"<g{i + 1}, g{j + 1}> = {p}, expected 0")
    c = rank(classes) == len(classes)
    if not c:
        fails.append("classes are linearly dependent")
    return ChainReport(a, b, c, tuple(fails))


def standard_chain(g: int) -> Chain:
    """The chain (a1, b1, c1, b2, ..., c_{g-1}, bg, ag), oriented so that
    consecutive pairings are +1: classes (a1, b1, a2-a1, b2, ..., bg, -ag)."""
    if g < 2:
        raise ValueError("standard chain needs genus >= 2")
    n = 2 * g
    classes = [basis_vector(1, n), basis_vector(2, n)]
    labels = ["a1", "b1"]
    for i in range(1, g):
        classes.append(tuple(-x for x in curve_class("c", i, g)))
        classes.append(basis_vector(2 * i + 2, n))
        labels += [f"c{i}", f"b{i + 1}"]
    classes.append(tuple(-x for x in basis_vector(n - 1, n)))
    labels.append(f"a{g}")
    return Chain(g, tuple(classes), tuple(labels))


# the curves of the standard chain, position -> twist symbol
def chain_twist_symbol(position: int, g: int) -> str:
    if not 1 <= position <= 2 * g + 1:
        raise IndexError(f"chain position {position} outside 1..{2 * g + 1}")
    if position == 1:
        return "Ta1"
    if position == 2 * g + 1:
        return f"Ta{g}"
    if position % 2 == 0:
        return f"Tb{position // 2}"
    return f"Tc{(position - 1) // 2}"


# --- bounding pairs -------------------------------------------------------

@dataclass(frozen=True)
class BoundingPairSpec:
    source: Chain
    selection: tuple[int, ...]
    derived: tuple[tuple[int, ...], ...]
    boundary: tuple[int, ...]
    genus: int
    name: str = field(default="", compare=False)

    def matrix(self) -> IntMatrix:
        """Psi(T_d1 T_d2^{-1}); both curves carry the class d, so this is I."""
        return transvection(self.boundary) @ transvection(self.boundary, -1)


def derived_chain(chain: Chain, selection: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """eta_j = gamma_{i_j} + ... + gamma_{i_{j+1} - 1} for an even-length selection."""
    sel = list(selection)
    if any(b <= a for a, b in zip(sel, sel[1:])):
        raise ValueError("selection positions must be strictly increasing")
    if sel and not (1 <= sel[0] and sel[-1] <= len(chain)):
        raise IndexError("selection outside the chain")
    n = 2 * chain.genus
    out = []
    for lo, hi in zip(sel, sel[1:]):
        v = [0] * n
        for p in range(lo, hi):
            v = [x + y for x, y in zip(v, chain.classes[p - 1])]
        out.append(tuple(v))
    return tuple(out)


def bounding_pair(chain: Chain, selection: Sequence[int] | None = None,
                  name: str = "") -> BoundingPairSpec:
    """Bounding pair of an odd chain, or of an even ordered subcollection.

    ``selection`` lists 1-based chain positions.  ``None`` means the whole
    chain, which then must have odd length.  An even-length selection is
    replaced by its derived odd chain.
    """
    if selection is None:
        if len(chain) % 2 == 0:
            raise ValueError("a full chain selection needs odd length")
        sel = tuple(range(1, len(chain) + 1))
        derived = chain.classes
    else:
        sel = tuple(selection)
        if len(sel) % 2 == 1:
            derived = chain.sub(sel).classes
            if any(b != a + 1 for a, b in zip(sel, sel[1:])):
                raise ValueError("an odd selection must be a contiguous subchain")
        else:
            if len(sel) < 2:
                raise ValueError("an even selection needs at least two positions")
            derived = derived_chain(chain, sel)
    for i in range(len(derived) - 1):
        if pairing(derived[i], derived[i + 1]) != 1:
            raise ValueError(f"derived chain fails the consecutive +1 condition at {i + 1}")
    n = 2 * chain.genus
    d = [0] * n
    for c in derived[0::2]:
        d = [x + y for x, y in zip(d, c)]
    return BoundingPairSpec(chain, sel, tuple(derived), tuple(d), (len(derived) - 1) // 2, name)


def torelli_family(g: int) -> list[BoundingPairSpec]:
    """F_1, ..., F_{g-1}: F_i bounds the subchain (b1, c1, ..., b_{i+1}) of
    genus i, whose boundary class b1 + ... + b_{i+1} meets a1."""
    chain = standard_chain(g)
    return [bounding_pair(chain, tuple(range(2, 2 * i + 3)), name=f"F{i}") for i in range(1, g)]
