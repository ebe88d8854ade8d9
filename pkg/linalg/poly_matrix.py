"""Matrices over multivariate polynomial rings with rational coefficients."""
from __future__ import annotations

import logging
from typing import Optional, Sequence

from sympy import QQ, Symbol
from sympy.polys.matrices import DomainMatrix

from errors import DimensionMismatchError, SymbolicLimitExceeded
from settings.config import settings

logger = logging.getLogger(__name__)

PolyMatrix = DomainMatrix


def polynomial_ring(names: Sequence[str]):
    """The domain QQ[names]; elements are sparse ``PolyElement`` values."""
    if not names:
        raise ValueError("a polynomial ring needs at least one variable")
    return QQ.poly_ring(*[Symbol(n) for n in names])


def symbolic_determinant(M: DomainMatrix, limit: Optional[int] = None):
    nrows, ncols = M.shape
    if nrows != ncols:
        raise DimensionMismatchError(f"determinant of a non-square {nrows}x{ncols} matrix")
    limit = settings.SYMBOLIC_LIMIT if limit is None else limit
    if nrows > limit:
        raise SymbolicLimitExceeded(nrows, limit)
    K = M.domain
    if nrows == 0:
        return K.one
    logger.debug(f"Symbolic determinant of size {nrows} over {K}")
    return M.det()


def evaluate_polynomial(p, point: Sequence):
    """Value of p at a rational point given in generator order."""
    return QQ.convert(p(*[QQ.convert(v) for v in point]))


def evaluate_poly_matrix(M: DomainMatrix, point: Sequence) -> DomainMatrix:
    values = [QQ.convert(v) for v in point]
    rows = [[QQ.convert(entry(*values)) for entry in row] for row in M.to_list()]
    return DomainMatrix(rows, M.shape, QQ)


def format_polynomial(p) -> str:
    if not p:
        return "0"
    return str(p.as_expr())
