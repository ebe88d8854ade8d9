"""Characteristic polynomials and their factorization over the rationals."""
from __future__ import annotations

from typing import List, Tuple

from sympy import Poly, QQ, Symbol
from sympy.polys.matrices import DomainMatrix

from errors import DimensionMismatchError

t = Symbol("t")


def _require_square(M: DomainMatrix) -> None:
    nrows, ncols = M.shape
    if nrows != ncols:
        raise DimensionMismatchError(f"characteristic polynomial of a non-square {nrows}x{ncols} matrix")


def char_poly(M: DomainMatrix) -> Poly:
    _require_square(M)
    if M.shape[0] == 0:
        return Poly(1, t, domain=QQ)
    return Poly(M.charpoly(), t, domain=QQ)


def char_poly_rational_split(M: DomainMatrix) -> List[Tuple[Poly, int]]:
    """Monic irreducible factors of det(tI - M) over QQ with their multiplicities."""
    _require_square(M)
    if M.shape[0] == 0:
        return []
    factors = []
    for coeffs, mult in M.charpoly_factor_list():
        factors.append((Poly(coeffs, t, domain=QQ).monic(), mult))
    factors.sort(key=lambda fm: (fm[0].degree(), [str(c) for c in fm[0].all_coeffs()]))
    return factors


def evaluate_at(M: DomainMatrix, p: Poly) -> DomainMatrix:
    """p(M) by Horner's rule."""
    _require_square(M)
    return M.eval_poly([QQ.convert(c) for c in p.all_coeffs()])
