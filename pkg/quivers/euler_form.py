"""Euler form, the weight/dimension-vector correspondence and support restriction."""
from __future__ import annotations

from typing import List, Sequence, Tuple

import numpy as np

from errors import DimensionMismatchError
from quivers.quiver_model import IntVector, Quiver


def euler_matrix(quiver: Quiver) -> np.ndarray:
    """E with <alpha, beta> = alpha^T E beta."""
    E = np.eye(quiver.n, dtype=np.int64)
    for a in quiver.arrows:
        E[quiver.index(a.tail), quiver.index(a.head)] -= 1
    return E


def euler_form(quiver: Quiver, alpha: Sequence[int], beta: Sequence[int]) -> int:
    alpha = quiver.check_vector(alpha, "alpha")
    beta = quiver.check_vector(beta, "beta")
    value = sum(x * y for x, y in zip(alpha, beta))
    for a in quiver.arrows:
        value -= alpha[quiver.index(a.tail)] * beta[quiver.index(a.head)]
    return value


def tits_form(quiver: Quiver, alpha: Sequence[int]) -> int:
    return euler_form(quiver, alpha, alpha)


def weight_of_alpha(quiver: Quiver, alpha: Sequence[int]) -> IntVector:
    """sigma = <alpha, .>, i.e. sigma(x) = alpha(x) - sum over arrows into x of alpha(tail)."""
    alpha = quiver.check_vector(alpha, "alpha")
    sigma = list(alpha)
    for a in quiver.arrows:
        sigma[quiver.index(a.head)] -= alpha[quiver.index(a.tail)]
    return tuple(sigma)


def alpha_of_weight(quiver: Quiver, sigma: Sequence[int]) -> IntVector:
    """The unique alpha with <alpha, e_x> = sigma(x) for every vertex x.

    The Euler matrix is unitriangular in topological order, so the system is
    solved by forward substitution over the integers.
    """
    sigma = quiver.check_vector(sigma, "weight")
    alpha = [0] * quiver.n
    for v in quiver.topological_order:
        i = quiver.index(v)
        alpha[i] = sigma[i] + sum(alpha[quiver.index(a.tail)] for a in quiver.incoming(v))
    return tuple(alpha)


def support_restrict(quiver: Quiver, beta: Sequence[int]) -> Tuple[Quiver, List[int]]:
    """Full subquiver on supp(beta) together with the kept vertex indices."""
    beta = quiver.check_vector(beta, "dimension vector")
    if any(b < 0 for b in beta):
        raise DimensionMismatchError(f"dimension vector {beta} has a negative entry")
    keep = [i for i, b in enumerate(beta) if b > 0]
    names = {quiver.vertices[i] for i in keep}
    arrows = [(a.name, a.tail, a.head) for a in quiver.arrows if a.tail in names and a.head in names]
    return Quiver.build([quiver.vertices[i] for i in keep], arrows), keep


def restrict_vector(vector: Sequence[int], keep: Sequence[int]) -> IntVector:
    return tuple(vector[i] for i in keep)


def extend_vector(vector: Sequence[int], keep: Sequence[int], n: int) -> IntVector:
    out = [0] * n
    for value, i in zip(vector, keep):
        out[i] = value
    return tuple(out)
