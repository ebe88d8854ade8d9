"""Krull-Schmidt decomposition over the rationals.

Each splitting step is exact; only the decision to stop (declaring a summand
indecomposable when its endomorphism algebra is not one-dimensional) is
probabilistic.
"""
from __future__ import annotations

import logging
from collections import Counter
from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from linalg import rational_matrix as rm
from linalg.charpoly import char_poly_rational_split, evaluate_at
from quivers.quiver_model import IntVector
from representations.interaction import endomorphism_basis, hom_basis
from representations.rep_model import Representation, direct_sum
from settings.config import settings

logger = logging.getLogger(__name__)

Bases = Dict[str, DomainMatrix]


class Summand(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    rep: Representation
    basis: Bases
    # End(rep) is one-dimensional, so indecomposability is proven
    certified: bool


class Decomposition(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    source: Representation
    summands: List[Summand]

    def representations(self) -> List[Representation]:
        return [s.rep for s in self.summands]

    def dimension_vectors(self) -> List[IntVector]:
        return sorted(s.rep.dims for s in self.summands)

    def change_of_basis(self) -> Bases:
        V = self.source
        return {
            v: rm.hstack([s.basis[v] for s in self.summands], V.dim_at(v))
            for v in V.quiver.vertices
        }

    def verify(self) -> bool:
        """P(x)^-1 V(a) P(x) equals the block diagonal of the summand maps."""
        V = self.source
        if not self.summands:
            return V.is_zero()
        P = self.change_of_basis()
        for v in V.quiver.vertices:
            if P[v].shape[0] != P[v].shape[1] or not rm.is_nonsingular(P[v]):
                return False
        summed = direct_sum(*self.representations())
        for a in V.quiver.arrows:
            if V.maps[a.name] * P[a.tail] != P[a.head] * summed.maps[a.name]:
                return False
        return True


def subrepresentation(U: Representation, basis: Bases) -> Representation:
    """The representation induced on invariant subspaces given by column bases."""
    maps = {}
    for a in U.quiver.arrows:
        X = rm.solve(basis[a.head], U.maps[a.name] * basis[a.tail])
        if X is None:
            raise ValueError(f"subspaces are not invariant under arrow {a.name!r}")
        maps[a.name] = X
    dims = tuple(basis[v].shape[1] for v in U.quiver.vertices)
    return Representation(quiver=U.quiver, dims=dims, maps=maps)


def _random_endomorphism(E: List[Bases], rng: np.random.Generator, bound: int) -> Bases:
    coeffs = rng.integers(-bound, bound, size=len(E), endpoint=True)
    if not coeffs.any():
        coeffs[0] = 1
    out = {}
    for v in E[0]:
        acc = E[0][v] * QQ(int(coeffs[0]))
        for c, e in zip(coeffs[1:], E[1:]):
            if c:
                acc = acc + e[v] * QQ(int(c))
        out[v] = acc
    return out


def _eigen_split(U: Representation, phi: Bases) -> Optional[List[Bases]]:
    total = rm.block_diagonal([phi[v] for v in U.quiver.vertices])
    factors = char_poly_rational_split(total)
    if len(factors) < 2:
        return None
    parts = []
    for p, mult in factors:
        power = p ** mult
        parts.append({
            v: rm.kernel_basis(evaluate_at(phi[v], power)) if U.dim_at(v) else rm.zeros(0, 0)
            for v in U.quiver.vertices
        })
    return [b for b in parts if any(m.shape[1] for m in b.values())]


def _generated_subspaces(U: Representation, vertex: str, vector: DomainMatrix) -> Bases:
    q = U.quiver
    spaces = {v: rm.zeros(U.dim_at(v), 0) for v in q.vertices}
    spaces[vertex] = vector
    for v in q.topological_order:
        for a in q.outgoing(v):
            pushed = U.maps[a.name] * spaces[v]
            spaces[a.head] = rm.image_basis(rm.hstack([spaces[a.head], pushed], U.dim_at(a.head)))
    return spaces


def _retraction_split(U: Representation, rng: np.random.Generator, bound: int) -> Optional[List[Bases]]:
    q = U.quiver
    vertices = [v for v in q.vertices if U.dim_at(v)]
    vertex = vertices[int(rng.integers(len(vertices)))]
    values = rng.integers(-bound, bound, size=U.dim_at(vertex), endpoint=True)
    if not values.any():
        values[0] = 1
    vector = rm.matrix([[int(x)] for x in values])
    S_basis = _generated_subspaces(U, vertex, vector)
    if all(S_basis[v].shape[1] == U.dim_at(v) for v in q.vertices):
        return None
    S = subrepresentation(U, S_basis)
    H = hom_basis(U, S)
    if not H:
        return None
    # Solve sum_k c_k h_k(x) iota(x) = id_S(x) for all x
    columns, target = [], []
    for h in H:
        columns.append([x for v in q.vertices for x in rm.flatten(h[v] * S_basis[v])])
    for v in q.vertices:
        target += rm.flatten(rm.identity(S.dim_at(v)))
    A = rm.matrix([[col[i] for col in columns] for i in range(len(target))], len(target), len(columns))
    c = rm.solve(A, rm.matrix([[x] for x in target], len(target), 1))
    if c is None:
        return None
    coeffs = [row[0] for row in c.to_list()]
    complement = {}
    for v in q.vertices:
        r = rm.zeros(S.dim_at(v), U.dim_at(v))
        for ck, h in zip(coeffs, H):
            if ck:
                r = r + h[v] * ck
        complement[v] = rm.kernel_basis(r) if U.dim_at(v) else rm.zeros(0, 0)
    return [S_basis, complement]


def _split_once(U: Representation, rng: np.random.Generator, rounds: int, bound: int) -> Tuple[Optional[List[Bases]], bool]:
    E = endomorphism_basis(U)
    if len(E) <= 1:
        return None, True
    for _ in range(rounds):
        parts = _eigen_split(U, _random_endomorphism(E, rng, bound))
        if parts:
            return parts, False
    for _ in range(rounds):
        parts = _retraction_split(U, rng, bound)
        if parts:
            return parts, False
    logger.debug(f"No splitting of summand {U.dims} after {rounds} rounds; treating it as indecomposable")
    return None, False


def decompose(V: Representation, seed=None, rounds: Optional[int] = None, bound: Optional[int] = None) -> Decomposition:
    rounds = rounds or settings.DECOMPOSE_ROUNDS
    bound = bound or settings.DECOMPOSE_BOUND
    rng = np.random.default_rng(settings.DEFAULT_SEED if seed is None else seed)
    identity = {v: rm.identity(V.dim_at(v)) for v in V.quiver.vertices}
    pending: List[Tuple[Representation, Bases]] = [(V, identity)] if not V.is_zero() else []
    done: List[Summand] = []
    while pending:
        U, ambient = pending.pop()
        parts, certified = _split_once(U, rng, rounds, bound)
        if parts is None:
            done.append(Summand(rep=U, basis=ambient, certified=certified))
            continue
        for local in parts:
            piece = subrepresentation(U, local)
            if piece.is_zero():
                continue
            pending.append((piece, {v: ambient[v] * local[v] for v in U.quiver.vertices}))
    done.sort(key=lambda s: s.rep.dims)
    logger.debug(f"Decomposed {V.dims} into {[s.rep.dims for s in done]}")
    return Decomposition(source=V, summands=done)


def absolute_parts(U: Representation, rng: np.random.Generator, samples: int = 4) -> List[Tuple[IntVector, int]]:
    """Geometric summands of a rationally indecomposable U.

    When End(U) has a residue field of degree d over QQ, U splits over the
    algebraic closure into d Galois-conjugate summands of dimension dim U / d.
    """
    E = endomorphism_basis(U)
    if len(E) <= 1:
        return [(U.dims, 1)]
    degree = 1
    for _ in range(samples):
        phi = _random_endomorphism(E, rng, settings.DECOMPOSE_BOUND)
        factors = char_poly_rational_split(rm.block_diagonal([phi[v] for v in U.quiver.vertices]))
        if len(factors) == 1:
            degree = max(degree, factors[0][0].degree())
    if degree > 1 and all(d % degree == 0 for d in U.dims):
        return [(tuple(d // degree for d in U.dims), degree)]
    return [(U.dims, 1)]


def geometric_dimension_vectors(decomposition: Decomposition, seed=None) -> Counter:
    rng = np.random.default_rng(settings.DEFAULT_SEED if seed is None else seed)
    counts: Counter = Counter()
    for s in decomposition.summands:
        for dims, mult in absolute_parts(s.rep, rng):
            counts[dims] += mult
    return counts
