"""Exact symplectic computations for liftable mapping classes of cyclic covers."""

from __future__ import annotations

from .criteria import CoverParams, PreconditionError, lmod_contains, stab_e1_contains, umod_contains
from .factorization import factor_lmod, factor_stab_e1, factor_symplectic
from .linalg import IntMatrix
from .words import Word, evaluate, format_word, parse_word

__all__ = [
    "CoverParams", "IntMatrix", "PreconditionError", "Word", "evaluate", "factor_lmod",
    "factor_stab_e1", "factor_symplectic", "format_word", "lmod_contains", "parse_word",
    "stab_e1_contains", "umod_contains",
]
