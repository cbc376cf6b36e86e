"""Exact m-polynomials over generalized Hadamard matrices.

Scalars cross the boundary as literals in the library's grammar ("1/2-1/2*r",
or "re,im" in float mode); reports come back as plain dicts.
"""

import json

from ._core import (
    DEFAULT_CELL_BUDGET,
    DEFAULT_TOLERANCE,
    BudgetExceeded,
    ContextMismatch,
    DomainError,
    Error,
    HypothesisError,
    Matrix,
    ParseError,
    VerificationError,
    compositions,
    generator,
    load_matrix,
    matrix,
    mg,
    parse_matrix,
)
from . import _core

__all__ = [
    "DEFAULT_CELL_BUDGET",
    "DEFAULT_TOLERANCE",
    "BudgetExceeded",
    "ContextMismatch",
    "DomainError",
    "Error",
    "HypothesisError",
    "Matrix",
    "ParseError",
    "VerificationError",
    "check",
    "compositions",
    "expand",
    "fit",
    "generator",
    "load_matrix",
    "matrix",
    "mg",
    "multiplication",
    "parse_matrix",
    "table",
    "verify",
]


def table(g, n, *, transposed=False, budget=DEFAULT_CELL_BUDGET):
    """MG table over V(n,q): rows p, columns s (swapped if transposed)."""
    return json.loads(_core.table_json(g, n, budget, transposed))


def check(g):
    return json.loads(_core.check_json(g))


def verify(g, n, variant="basic", *, force=False, budget=DEFAULT_CELL_BUDGET):
    return json.loads(_core.verify_json(g, n, variant, force, budget))


def expand(g, n, *, values=None, monomial=None, side="alpha", variant=None, force=False,
           budget=DEFAULT_CELL_BUDGET):
    """Expansion coefficients of a function on V(n,q).

    values maps each composition (a tuple) to a literal; monomial gives the
    exponents of x_0^e_0 ... x_{q-1}^e_{q-1} instead.
    """
    if (values is None) == (monomial is None):
        raise ValueError("pass exactly one of values= or monomial=")
    if monomial is not None:
        raw = _core.expand_monomial_json(g, n, list(monomial), side, variant, force, budget)
    else:
        literals = {tuple(k): str(v) for k, v in values.items()}
        raw = _core.expand_json(g, n, literals, side, variant, force, budget)
    return json.loads(raw)


def fit(g, n, fixed, side="s"):
    """Univariate form in u = x0 - x1; side names the varying argument."""
    return json.loads(_core.fit_json(g, n, list(fixed), side))


def multiplication(g1, g2, n, *, reversed=False):
    return json.loads(_core.multiplication_json(g1, g2, n, reversed))
