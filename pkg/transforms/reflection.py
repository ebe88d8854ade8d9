"""Reflection of dimension vectors and the reflection functors at sinks and sources."""
from __future__ import annotations

import logging
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from errors import PreconditionError
from linalg import rational_matrix as rm
from quivers.quiver_model import IntVector, Quiver
from representations.interaction import hom_basis
from representations.rep_model import Representation

logger = logging.getLogger(__name__)


class Direction(str, Enum):
    PLUS = "plus"
    MINUS = "minus"


def reflect_dim(quiver: Quiver, vertex: str, alpha: Sequence[int]) -> Tuple[Quiver, IntVector]:
    alpha = quiver.check_vector(alpha, "alpha")
    i = quiver.index(vertex)
    new = list(alpha)
    new[i] = (
        sum(alpha[quiver.index(a.tail)] for a in quiver.incoming(vertex))
        + sum(alpha[quiver.index(a.head)] for a in quiver.outgoing(vertex))
        - alpha[i]
    )
    return quiver.reversed_at(vertex), tuple(new)


def _blocks(sizes: List[int]) -> List[range]:
    out, start = [], 0
    for s in sizes:
        out.append(range(start, start + s))
        start += s
    return out


def _reflect_at_sink(V: Representation, vertex: str, target: Quiver) -> Representation:
    """W(x) = ker(sum of V(a): V(tail a) -> V(x)); reversed arrows are the block projections of the inclusion."""
    arrows = V.quiver.incoming(vertex)
    sizes = [V.dim_at(a.tail) for a in arrows]
    total = sum(sizes)
    h = rm.hstack([V.maps[a.name] for a in arrows], V.dim_at(vertex))
    K = rm.kernel_basis(h) if total else rm.zeros(0, 0)
    new_dim = K.shape[1]
    maps = dict(V.maps)
    for a, rows in zip(arrows, _blocks(sizes)):
        maps[a.name] = rm.submatrix(K, rows, range(new_dim))
    dims = list(V.dims)
    dims[V.quiver.index(vertex)] = new_dim
    return Representation(quiver=target, dims=tuple(dims), maps=maps)


def _reflect_at_source(V: Representation, vertex: str, target: Quiver) -> Representation:
    """W(x) = coker(V(x) -> sum of V(head a)); reversed arrows are the block columns of the projection."""
    arrows = V.quiver.outgoing(vertex)
    sizes = [V.dim_at(a.head) for a in arrows]
    total = sum(sizes)
    g = rm.vstack([V.maps[a.name] for a in arrows], V.dim_at(vertex))
    # rows of P span the annihilator of im g, so P induces coker g -> QQ^m
    P = rm.kernel_basis(g.transpose()).transpose() if total else rm.zeros(0, 0)
    new_dim = P.shape[0]
    maps = dict(V.maps)
    for a, cols in zip(arrows, _blocks(sizes)):
        maps[a.name] = rm.submatrix(P, range(new_dim), cols)
    dims = list(V.dims)
    dims[V.quiver.index(vertex)] = new_dim
    return Representation(quiver=target, dims=tuple(dims), maps=maps)


def reflect_rep(V: Representation, vertex: str, direction: Direction | str) -> Representation:
    direction = Direction(direction)
    q = V.quiver
    if direction is Direction.PLUS and not q.is_sink(vertex):
        raise PreconditionError([f"vertex {vertex!r} is not a sink"])
    if direction is Direction.MINUS and not q.is_source(vertex):
        raise PreconditionError([f"vertex {vertex!r} is not a source"])
    target = q.reversed_at(vertex)
    if direction is Direction.PLUS:
        return _reflect_at_sink(V, vertex, target)
    return _reflect_at_source(V, vertex, target)


def explicit_isomorphism(V: Representation, W: Representation, seed: int = 0, attempts: int = 16) -> Optional[Dict[str, DomainMatrix]]:
    """Search Hom(V, W) for an element invertible at every vertex."""
    if V.quiver != W.quiver or V.dims != W.dims:
        return None
    basis = hom_basis(V, W)
    if not basis:
        return {v: rm.zeros(0, 0) for v in V.quiver.vertices} if V.is_zero() else None
    rng = np.random.default_rng(seed)
    for _ in range(attempts):
        coeffs = [QQ(int(c)) for c in rng.integers(-10, 10, size=len(basis), endpoint=True)]
        f = {v: sum((c * b[v] for c, b in zip(coeffs[1:], basis[1:])), basis[0][v] * coeffs[0])
             for v in V.quiver.vertices}
        if all(rm.is_nonsingular(f[v]) for v in V.quiver.vertices):
            return f
    return None
