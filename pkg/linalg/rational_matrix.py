"""Exact matrices over the rationals.

``RationalMatrix`` is a sympy ``DomainMatrix`` over ``QQ``. The helpers here
fix the conventions the rest of the package relies on: kernels and images are
returned as matrices whose *columns* form a basis, empty shapes are handled
explicitly, and the empty determinant is 1.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Iterable, List, NamedTuple, Optional, Sequence

import numpy as np
from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from errors import DimensionMismatchError, ParseError
from settings.config import settings

logger = logging.getLogger(__name__)

RationalMatrix = DomainMatrix


class RowReduction(NamedTuple):
    rank: int
    kernel: DomainMatrix
    image: DomainMatrix


def to_rational(value) -> "QQ.dtype":
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return QQ.convert(value)


def parse_rational(text: str):
    try:
        frac = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {text!r}") from exc
    return QQ(frac.numerator, frac.denominator)


def format_rational(value) -> str:
    q = QQ.convert(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def matrix(rows: Sequence[Sequence], nrows: Optional[int] = None, ncols: Optional[int] = None) -> DomainMatrix:
    """Build a rational matrix from nested sequences of ints, Fractions or strings."""
    rows = [list(r) for r in rows]
    if nrows is None:
        nrows = len(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if len(rows) != nrows or any(len(r) != ncols for r in rows):
        raise DimensionMismatchError(f"expected a {nrows}x{ncols} matrix")
    return DomainMatrix([[to_rational(x) for x in r] for r in rows], (nrows, ncols), QQ)


def zeros(nrows: int, ncols: int) -> DomainMatrix:
    return DomainMatrix([[QQ.zero] * ncols for _ in range(nrows)], (nrows, ncols), QQ)


def identity(n: int) -> DomainMatrix:
    return DomainMatrix(
        [[QQ.one if i == j else QQ.zero for j in range(n)] for i in range(n)], (n, n), QQ
    )


def from_sparse(entries: dict, nrows: int, ncols: int, domain=QQ) -> DomainMatrix:
    rows = [[domain.zero] * ncols for _ in range(nrows)]
    for (i, j), value in entries.items():
        rows[i][j] = value
    return DomainMatrix(rows, (nrows, ncols), domain)


def hstack(blocks: Sequence[DomainMatrix], nrows: int) -> DomainMatrix:
    cols = sum(b.shape[1] for b in blocks)
    rows: List[list] = [[] for _ in range(nrows)]
    for b in blocks:
        if b.shape[0] != nrows:
            raise DimensionMismatchError("hstack blocks disagree on row count")
        for i, r in enumerate(b.to_list()):
            rows[i].extend(r)
    return DomainMatrix(rows, (nrows, cols), QQ)


def vstack(blocks: Sequence[DomainMatrix], ncols: int) -> DomainMatrix:
    rows: List[list] = []
    for b in blocks:
        if b.shape[1] != ncols:
            raise DimensionMismatchError("vstack blocks disagree on column count")
        rows.extend(b.to_list())
    return DomainMatrix(rows, (len(rows), ncols), QQ)


def block_diagonal(blocks: Sequence[DomainMatrix]) -> DomainMatrix:
    n = sum(b.shape[0] for b in blocks)
    m = sum(b.shape[1] for b in blocks)
    entries = {}
    r0 = c0 = 0
    for b in blocks:
        for i, row in enumerate(b.to_list()):
            for j, v in enumerate(row):
                if v:
                    entries[(r0 + i, c0 + j)] = v
        r0 += b.shape[0]
        c0 += b.shape[1]
    return from_sparse(entries, n, m)


def submatrix(M: DomainMatrix, rows: Iterable[int], cols: Iterable[int]) -> DomainMatrix:
    rows, cols = list(rows), list(cols)
    data = M.to_list()
    return DomainMatrix([[data[i][j] for j in cols] for i in rows], (len(rows), len(cols)), QQ)


def is_integral(M: DomainMatrix) -> bool:
    return all(QQ.convert(v).denominator == 1 for v in M.iter_values())


def _exact_rank(M: DomainMatrix) -> int:
    if 0 in M.shape:
        return 0
    _, pivots = M.rref()
    return len(pivots)


def rank_mod_p(M: DomainMatrix, p: Optional[int] = None) -> int:
    """Rank of M reduced modulo a prime; a lower bound for the rational rank."""
    p = p or settings.MODULAR_PRIME
    nrows, ncols = M.shape
    if nrows == 0 or ncols == 0:
        return 0
    A = np.zeros((nrows, ncols), dtype=np.int64)
    for (i, j), v in M.to_dok().items():
        q = QQ.convert(v)
        den = int(q.denominator) % p
        if den == 0:
            raise ZeroDivisionError(f"denominator divisible by {p}")
        A[i, j] = (int(q.numerator) % p) * pow(den, -1, p) % p
    r = 0
    for c in range(ncols):
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = (A[r] * inv) % p
        below = A[r + 1:, c].copy()
        if below.any():
            A[r + 1:] = (A[r + 1:] - np.outer(below, A[r]) % p) % p
        r += 1
        if r == nrows:
            break
    return r


def rank(M: DomainMatrix) -> int:
    nrows, ncols = M.shape
    if nrows == 0 or ncols == 0:
        return 0
    if max(nrows, ncols) > settings.MODULAR_THRESHOLD:
        try:
            rp = rank_mod_p(M)
        except ZeroDivisionError:
            rp = -1
        if rp == min(nrows, ncols):
            return rp
    return _exact_rank(M)


def kernel_basis(M: DomainMatrix) -> DomainMatrix:
    """Columns form the standard basis of ker M read off the reduced row echelon form."""
    nrows, ncols = M.shape
    if ncols == 0:
        return zeros(0, 0)
    if nrows == 0:
        return identity(ncols)
    reduced, pivots = M.rref()
    if len(pivots) == ncols:
        return zeros(ncols, 0)
    return reduced.nullspace_from_rref(pivots).transpose()


def image_basis(M: DomainMatrix) -> DomainMatrix:
    nrows, ncols = M.shape
    if nrows == 0 or ncols == 0:
        return zeros(nrows, 0)
    _, pivots = M.rref()
    return submatrix(M, range(nrows), pivots)


def row_reduce(M: DomainMatrix) -> RowReduction:
    kernel = kernel_basis(M)
    image = image_basis(M)
    return RowReduction(rank=image.shape[1], kernel=kernel, image=image)


def determinant(M: DomainMatrix):
    nrows, ncols = M.shape
    if nrows != ncols:
        raise DimensionMismatchError(f"determinant of a non-square {nrows}x{ncols} matrix")
    if nrows == 0:
        return QQ.one
    if is_integral(M):
        # fraction-free elimination over the integers
        return QQ.convert(M.convert_to(ZZ).det())
    return M.det()


def is_nonsingular(M: DomainMatrix) -> bool:
    nrows, ncols = M.shape
    if nrows != ncols:
        raise DimensionMismatchError(f"non-square {nrows}x{ncols} matrix")
    if nrows == 0:
        return True
    if nrows > settings.MODULAR_THRESHOLD:
        try:
            if rank_mod_p(M) == nrows:
                return True
        except ZeroDivisionError:
            pass
    return determinant(M) != 0


def solve(A: DomainMatrix, B: DomainMatrix) -> Optional[DomainMatrix]:
    """A particular solution X of A X = B, or None when the system is inconsistent."""
    nrows, ncols = A.shape
    if B.shape[0] != nrows:
        raise DimensionMismatchError("right-hand side has the wrong number of rows")
    k = B.shape[1]
    if ncols == 0:
        return zeros(0, k) if B.is_zero_matrix else None
    if nrows == 0:
        return zeros(ncols, k)
    augmented = hstack([A, B], nrows)
    reduced, pivots = augmented.rref()
    if any(p >= ncols for p in pivots):
        return None
    data = reduced.to_list()
    X = [[QQ.zero] * k for _ in range(ncols)]
    for row, p in enumerate(pivots):
        X[p] = list(data[row][ncols:])
    return DomainMatrix(X, (ncols, k), QQ)


def inverse(M: DomainMatrix) -> DomainMatrix:
    n = M.shape[0]
    if n == 0:
        return zeros(0, 0)
    return M.inv()


def column(M: DomainMatrix, j: int) -> DomainMatrix:
    return submatrix(M, range(M.shape[0]), [j])


def flatten(M: DomainMatrix) -> List:
    return [v for row in M.to_list() for v in row]
