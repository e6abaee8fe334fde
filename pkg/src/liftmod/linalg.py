"""Exact integer and residue matrix arithmetic.

Matrices act on column vectors from the left.  Everything is a Python ``int``;
there is no floating point anywhere in the package.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class IntMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise DimensionError("matrix must have at least one row and one column")
        width = len(self.entries[0])
        for row in self.entries:
            if len(row) != width:
                raise DimensionError("ragged rows")
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise TypeError(f"non-integer entry {x!r}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(tuple((0,) * cols for _ in range(rows)))

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)))

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-x for x in r) for r in self.entries))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return IntMatrix(tuple(tuple(x + y for x, y in zip(r, s))
                               for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.ncols != other.nrows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            cols = list(zip(*other.entries))
            return IntMatrix(tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols)
                                   for r in self.entries))
        vec = tuple(other)
        if len(vec) != self.ncols:
            raise DimensionError(f"cannot apply {self.shape} to vector of length {len(vec)}")
        return tuple(sum(a * b for a, b in zip(r, vec)) for r in self.entries)

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(c * x for x in r) for r in self.entries))

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_identity(self) -> bool:
        return self.is_square() and self == IntMatrix.identity(self.nrows)

    def determinant(self) -> int:
        if not self.is_square():
            raise DimensionError("determinant of non-square matrix")
        return determinant(self)

    def inverse(self) -> "IntMatrix":
        return inverse(self)

    def __pow__(self, n: int) -> "IntMatrix":
        return mat_power(self, n)

    def __str__(self) -> str:
        return format_matrix(self)


def as_matrix(m) -> IntMatrix:
    return m if isinstance(m, IntMatrix) else IntMatrix.from_rows(m)


def mat_product(ms: Sequence[IntMatrix], dim: int | None = None) -> IntMatrix:
    """Exact product ``ms[0] @ ms[1] @ ...``.  An empty product needs ``dim``."""
    ms = [as_matrix(m) for m in ms]
    if not ms:
        if dim is None:
            raise DimensionError("empty product needs an explicit dimension")
        return IntMatrix.identity(dim)
    if dim is not None and ms[0].nrows != dim:
        raise DimensionError(f"expected leading dimension {dim}, got {ms[0].nrows}")
    out = ms[0]
    for m in ms[1:]:
        out = out @ m
    return out


def mat_power(m: IntMatrix, n: int) -> IntMatrix:
    if not m.is_square():
        raise DimensionError("power of non-square matrix")
    if n < 0:
        m, n = inverse(m), -n
    result = IntMatrix.identity(m.nrows)
    base = m
    while n:
        if n & 1:
            result = result @ base
        base = base @ base
        n >>= 1
    return result


def determinant(m: IntMatrix) -> int:
    # Bareiss fraction-free elimination
    a = [list(r) for r in m.entries]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse(m: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular (det = +-1) square matrix."""
    if not m.is_square():
        raise DimensionError("inverse of non-square matrix")
    det = determinant(m)
    if det not in (1, -1):
        raise ValueError(f"matrix is not invertible over Z (det = {det})")
    n = m.nrows
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(m.entries)]
    for c in range(n):
        p = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return IntMatrix(tuple(tuple(int(x) for x in r[n:]) for r in a))


def rank(vectors: Sequence[Sequence[int]]) -> int:
    """Rank over Q of the given integer row vectors."""
    a = [[Fraction(x) for x in v] for v in vectors]
    if not a:
        return 0
    r = 0
    for c in range(len(a[0])):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(r + 1, len(a)):
            f = a[i][c] / a[r][c]
            a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


# --- symplectic form ------------------------------------------------------

def symplectic_form(g: int) -> IntMatrix:
    """Block-diagonal J with blocks [[0, 1], [-1, 0]] in basis (a1, b1, ..., ag, bg)."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    n = 2 * g
    rows = [[0] * n for _ in range(n)]
    for i in range(g):
        rows[2 * i][2 * i + 1] = 1
        rows[2 * i + 1][2 * i] = -1
    return IntMatrix.from_rows(rows)


def pairing(x: Sequence[int], y: Sequence[int]) -> int:
    """Algebraic intersection <x, y> = x^T J y."""
    if len(x) != len(y) or len(x) % 2:
        raise DimensionError("pairing needs two vectors of equal even length")
    return sum(x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i] for i in range(len(x) // 2))


def is_symplectic(m: IntMatrix, g: int) -> bool:
    m = as_matrix(m)
    if m.shape != (2 * g, 2 * g):
        raise DimensionError(f"expected a {2 * g}x{2 * g} matrix, got {m.shape}")
    j = symplectic_form(g)
    return m.T @ j @ m == j


def symplectic_inverse(m: IntMatrix) -> IntMatrix:
    """M^{-1} = -J M^T J, valid only for symplectic M."""
    j = symplectic_form(m.nrows // 2)
    return -(j @ m.T @ j)


# --- Bezout ---------------------------------------------------------------

def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (d, s, t) with s*a + t*b = d = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def vector_gcd(a: Sequence[int]) -> int:
    return math.gcd(*a) if a else 0


def bezout_vector(a: Sequence[int]) -> tuple[int, ...]:
    """Coefficients B with a . B = gcd(a)."""
    a = [int(x) for x in a]
    if not any(a):
        raise ValueError("bezout_vector needs a nonzero vector")
    d, coeffs = a[0], [1]
    if d < 0:
        d, coeffs = -d, [-1]
    for x in a[1:]:
        d, s, t = ext_gcd(d, x)
        coeffs = [c * s for c in coeffs] + [t]
    return tuple(coeffs)


# --- residues -------------------------------------------------------------

@dataclass(frozen=True)
class ResidueMatrix:
    modulus: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")
        for r in self.entries:
            for x in r:
                if not 0 <= x < self.modulus:
                    raise ValueError(f"entry {x} not reduced mod {self.modulus}")

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]

    def __matmul__(self, other):
        k = self.modulus
        if isinstance(other, ResidueMatrix):
            if other.modulus != k:
                raise ValueError("moduli differ")
            cols = list(zip(*other.entries))
            return ResidueMatrix(k, tuple(tuple(sum(a * b for a, b in zip(r, c)) % k for c in cols)
                                          for r in self.entries))
        return tuple(sum(a * b for a, b in zip(r, other)) % k for r in self.entries)

    def lift(self) -> IntMatrix:
        return IntMatrix(self.entries)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def mod_reduce(m: IntMatrix, k: int) -> ResidueMatrix:
    if k < 2:
        raise ValueError("modulus must be >= 2")
    m = as_matrix(m)
    return ResidueMatrix(k, tuple(tuple(x % k for x in r) for r in m.entries))


# --- text I/O -------------------------------------------------------------

def format_matrix(m: IntMatrix) -> str:
    width = max(len(str(x)) for r in m.entries for x in r)
    return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in m.entries)


def parse_matrix(text: str) -> IntMatrix:
    """Parse a matrix from JSON (array of arrays) or plain text.

    Plain text separates rows by newlines or semicolons and entries by
    whitespace or commas.
    """
    import json

    stripped = text.strip()
    if stripped.startswith("["):
        data = json.loads(stripped)
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise ValueError("JSON matrix must be an array of arrays")
        for r in data:
            for x in r:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError(f"non-integer JSON entry {x!r}")
        return IntMatrix.from_rows(data)
    rows = [r for r in re.split(r"[;\n]", stripped) if r.strip()]
    try:
        return IntMatrix.from_rows([int(x) for x in re.split(r"[\s,]+", r.strip()) if x]
                                   for r in rows)
    except ValueError as exc:
        raise ValueError(f"bad matrix text: {exc}") from None
