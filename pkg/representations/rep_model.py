from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from errors import DimensionMismatchError
from linalg import rational_matrix as rm
from quivers.euler_form import extend_vector, support_restrict
from quivers.quiver_model import IntVector, Quiver

logger = logging.getLogger(__name__)


class Representation(BaseModel):
    """One rational matrix per arrow; V(a) has shape dim(head) x dim(tail)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    quiver: Quiver
    dims: IntVector
    maps: Dict[str, DomainMatrix]

    @model_validator(mode="after")
    def _check_shapes(self) -> "Representation":
        q = self.quiver
        if len(self.dims) != q.n:
            raise ValueError(f"dimension vector has {len(self.dims)} entries, quiver has {q.n} vertices")
        if any(d < 0 for d in self.dims):
            raise ValueError(f"negative dimension in {self.dims}")
        if set(self.maps) != {a.name for a in q.arrows}:
            raise ValueError("representation must give exactly one matrix per arrow")
        for a in q.arrows:
            expected = (self.dim_at(a.head), self.dim_at(a.tail))
            if self.maps[a.name].shape != expected:
                raise ValueError(f"matrix for arrow {a.name!r} has shape {self.maps[a.name].shape}, expected {expected}")
        return self

    def dim_at(self, vertex: str) -> int:
        return self.dims[self.quiver.index(vertex)]

    def map(self, arrow: str) -> DomainMatrix:
        return self.maps[arrow]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def is_thin(self) -> bool:
        return all(d <= 1 for d in self.dims)

    def restrict(self, keep: Sequence[int]) -> "Representation":
        """Restriction to the full subquiver on the given vertex indices."""
        sub, _ = support_restrict(self.quiver, [1 if i in set(keep) else 0 for i in range(self.quiver.n)])
        return Representation(
            quiver=sub,
            dims=tuple(self.dims[i] for i in keep),
            maps={a.name: self.maps[a.name] for a in sub.arrows},
        )

    def extend(self, quiver: Quiver, keep: Sequence[int]) -> "Representation":
        """Extension by zero to a quiver containing this one as a full subquiver."""
        dims = extend_vector(self.dims, keep, quiver.n)
        maps = {}
        for a in quiver.arrows:
            if a.name in self.maps:
                maps[a.name] = self.maps[a.name]
            else:
                maps[a.name] = rm.zeros(dims[quiver.index(a.head)], dims[quiver.index(a.tail)])
        return Representation(quiver=quiver, dims=dims, maps=maps)

    def transport(self, g: Dict[str, DomainMatrix]) -> "Representation":
        """The representation g . V with (g . V)(a) = g(head) V(a) g(tail)^-1."""
        inverses = {v: rm.inverse(g[v]) for v in self.quiver.vertices}
        maps = {a.name: g[a.head] * self.maps[a.name] * inverses[a.tail] for a in self.quiver.arrows}
        return Representation(quiver=self.quiver, dims=self.dims, maps=maps)


def zero_representation(quiver: Quiver) -> Representation:
    return from_dims(quiver, (0,) * quiver.n)


def from_dims(quiver: Quiver, dims: Sequence[int], entries: Optional[Dict[str, DomainMatrix]] = None) -> Representation:
    dims = quiver.check_vector(dims, "dimension vector")
    maps = {}
    for a in quiver.arrows:
        shape = (dims[quiver.index(a.head)], dims[quiver.index(a.tail)])
        maps[a.name] = entries[a.name] if entries and a.name in entries else rm.zeros(*shape)
    try:
        return Representation(quiver=quiver, dims=dims, maps=maps)
    except ValueError as exc:
        raise DimensionMismatchError(str(exc)) from exc


def simple_representation(quiver: Quiver, vertex: str) -> Representation:
    dims = [0] * quiver.n
    dims[quiver.index(vertex)] = 1
    return from_dims(quiver, dims)


def direct_sum(*reps: Representation) -> Representation:
    if not reps:
        raise ValueError("direct sum of nothing")
    quiver = reps[0].quiver
    if any(r.quiver != quiver for r in reps):
        raise DimensionMismatchError("direct sum of representations of different quivers")
    dims = tuple(sum(r.dims[i] for r in reps) for i in range(quiver.n))
    maps = {a.name: rm.block_diagonal([r.maps[a.name] for r in reps]) for a in quiver.arrows}
    return Representation(quiver=quiver, dims=dims, maps=maps)


def random_representation(quiver: Quiver, alpha: Sequence[int], seed, bound: int) -> Representation:
    """Entries uniform in [-bound, bound], drawn arrow by arrow in declaration order."""
    alpha = quiver.check_vector(alpha, "dimension vector")
    if any(x < 0 for x in alpha):
        raise DimensionMismatchError(f"dimension vector {alpha} has a negative entry")
    rng = np.random.default_rng(seed)
    maps = {}
    for a in quiver.arrows:
        rows, cols = alpha[quiver.index(a.head)], alpha[quiver.index(a.tail)]
        values = rng.integers(-bound, bound, size=(rows, cols), endpoint=True)
        maps[a.name] = DomainMatrix([[QQ(int(x)) for x in r] for r in values], (rows, cols), QQ)
    return Representation(quiver=quiver, dims=alpha, maps=maps)


def random_invertible(n: int, rng: np.random.Generator, bound: int = 5) -> DomainMatrix:
    while True:
        values = rng.integers(-bound, bound, size=(n, n), endpoint=True)
        M = DomainMatrix([[QQ(int(x)) for x in r] for r in values], (n, n), QQ)
        if rm.determinant(M) != 0:
            return M


def random_change_of_basis(rep: Representation, seed) -> Dict[str, DomainMatrix]:
    rng = np.random.default_rng(seed)
    return {v: random_invertible(rep.dim_at(v), rng) for v in rep.quiver.vertices}


def same_quiver(V: Representation, W: Representation) -> None:
    if V.quiver != W.quiver:
        raise DimensionMismatchError("representations live on different quivers")
