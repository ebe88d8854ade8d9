"""Membership of a weight in the orbit semigroup S(W).

sigma lies in S(W) iff some V of dimension alpha, where sigma = <alpha, .> on
the support of W, satisfies c(V, W) != 0.
"""
from __future__ import annotations

import logging
from typing import List, NamedTuple, Optional, Sequence

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from errors import SymbolicLimitExceeded, WitnessSearchError
from linalg.poly_matrix import evaluate_polynomial, symbolic_determinant
from orbit.orbit_models import MembershipMode, MembershipStatus, MembershipVerdict, ProofTag
from quivers.euler_form import alpha_of_weight, euler_form, extend_vector, restrict_vector, support_restrict
from quivers.quiver_model import IntVector, Quiver
from representations.interaction import interaction_shape, is_orthogonal, symbolic_interaction_matrix
from representations.rep_model import Representation, random_representation, zero_representation
from settings.config import settings

logger = logging.getLogger(__name__)

WITNESS_SEARCH_ATTEMPTS = 64


def _zigzag(x: int) -> int:
    return 2 * x if x >= 0 else -2 * x - 1


def derive_seed(master: int, *parts: int) -> int:
    """Deterministic 64-bit seed from a master seed and integer coordinates."""
    entropy = [_zigzag(int(master))] + [_zigzag(int(p)) for p in parts]
    return int(np.random.SeedSequence(entropy).generate_state(1, dtype=np.uint64)[0])


class SupportReduction(NamedTuple):
    quiver: Quiver
    keep: List[int]
    W: Representation
    weight: IntVector
    alpha: IntVector


def reduce_to_support(W: Representation, sigma: Sequence[int]) -> SupportReduction:
    sub, keep = support_restrict(W.quiver, W.dims)
    weight = restrict_vector(sigma, keep)
    return SupportReduction(sub, keep, W.restrict(keep), weight, alpha_of_weight(sub, weight))


def quick_verdict(W: Representation, sigma: IntVector, red: SupportReduction) -> Optional[MembershipVerdict]:
    """Verdicts that need no determinant: empty support, negative alpha, weight mismatch, alpha = 0."""
    q = W.quiver
    alpha_full = extend_vector(red.alpha, red.keep, q.n)
    if any(x < 0 for x in red.alpha):
        return MembershipVerdict(status=MembershipStatus.NOT_MEMBER, weight=sigma, alpha=alpha_full,
                                 proof=ProofTag.NEGATIVE_ALPHA)
    if red.quiver.n and euler_form(red.quiver, red.alpha, red.W.dims) != 0:
        return MembershipVerdict(status=MembershipStatus.NOT_MEMBER, weight=sigma, alpha=alpha_full,
                                 proof=ProofTag.OFF_SUPPORT_MISMATCH)
    if not any(red.alpha):
        return MembershipVerdict(status=MembershipStatus.MEMBER, weight=sigma, alpha=alpha_full,
                                 witness=zero_representation(q))
    return None


def symbolic_size(red: SupportReduction) -> int:
    return interaction_shape(red.quiver, red.alpha, red.W.dims)[1]


def error_bound(size: int, bound: int, trials: int) -> float:
    return min(1.0, size / (2 * bound + 1)) ** trials


def _randomized_search(red: SupportReduction, trials: int, seed: int, bound: int) -> Optional[Representation]:
    for t in range(trials):
        V = random_representation(red.quiver, red.alpha, derive_seed(seed, *red.weight, t), bound)
        if is_orthogonal(V, red.W):
            logger.debug(f"Witness found for weight {red.weight} at trial {t}")
            return V
    return None


def _representation_from_point(red: SupportReduction, point: Sequence[int]) -> Representation:
    q, alpha = red.quiver, red.alpha
    maps, pos = {}, 0
    for a in q.arrows:
        rows, cols = alpha[q.index(a.head)], alpha[q.index(a.tail)]
        block = [[QQ(int(point[pos + i * cols + j])) for j in range(cols)] for i in range(rows)]
        maps[a.name] = DomainMatrix(block, (rows, cols), QQ)
        pos += rows * cols
    return Representation(quiver=q, dims=alpha, maps=maps)


def _witness_from_polynomial(det, names: List[str], red: SupportReduction, seed: int, bound: int) -> Representation:
    rng = np.random.default_rng(derive_seed(seed, *red.weight, -1))
    for attempt in range(WITNESS_SEARCH_ATTEMPTS):
        point = [int(x) for x in rng.integers(-bound, bound, size=len(names), endpoint=True)]
        if evaluate_polynomial(det, point or [0]) != 0:
            V = _representation_from_point(red, point)
            if is_orthogonal(V, red.W):
                return V
    raise WitnessSearchError(f"no nonvanishing point found for a nonzero determinant after {WITNESS_SEARCH_ATTEMPTS} attempts")


def membership(
    W: Representation,
    sigma: Sequence[int],
    mode: MembershipMode = MembershipMode.RANDOMIZED,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    bound: Optional[int] = None,
    allow_fallback: bool = False,
    symbolic_limit: Optional[int] = None,
) -> MembershipVerdict:
    q = W.quiver
    sigma = q.check_vector(sigma, "weight")
    trials = settings.RANDOM_TRIALS if trials is None else trials
    seed = settings.DEFAULT_SEED if seed is None else seed
    bound = settings.RANDOM_BOUND if bound is None else bound
    limit = settings.SYMBOLIC_LIMIT if symbolic_limit is None else symbolic_limit
    mode = MembershipMode(mode)

    red = reduce_to_support(W, sigma)
    verdict = quick_verdict(W, sigma, red)
    if verdict is not None:
        return verdict
    alpha_full = extend_vector(red.alpha, red.keep, q.n)

    witness = _randomized_search(red, trials, seed, bound)
    if witness is not None:
        return MembershipVerdict(status=MembershipStatus.MEMBER, weight=sigma, alpha=alpha_full,
                                 witness=witness.extend(q, red.keep), trials=trials, bound=bound)

    size = symbolic_size(red)
    probable = dict(status=MembershipStatus.PROBABLY_NOT_MEMBER, weight=sigma, alpha=alpha_full,
                    trials=trials, bound=bound, error_bound=error_bound(size, bound, trials))
    if mode is MembershipMode.RANDOMIZED:
        return MembershipVerdict(**probable)
    if size > limit:
        if not allow_fallback:
            raise SymbolicLimitExceeded(size, limit)
        logger.warning(f"Weight {sigma}: symbolic size {size} exceeds {limit}, reporting randomized result")
        return MembershipVerdict(**probable, notice="symbolic limit exceeded; randomized fallback")

    matrix, names = symbolic_interaction_matrix(red.quiver, red.alpha, red.W)
    det = symbolic_determinant(matrix, limit)
    if not det:
        logger.info(f"Weight {sigma}: symbolic determinant of size {size} vanishes identically")
        return MembershipVerdict(status=MembershipStatus.NOT_MEMBER, weight=sigma, alpha=alpha_full,
                                 proof=ProofTag.ZERO_SYMBOLIC_DETERMINANT)
    witness = _witness_from_polynomial(det, names, red, seed, bound)
    return MembershipVerdict(status=MembershipStatus.MEMBER, weight=sigma, alpha=alpha_full,
                             witness=witness.extend(q, red.keep))


def verify_witness(W: Representation, sigma: Sequence[int], witness: Representation) -> List[str]:
    """Problems with a Member witness; an empty list means it verifies exactly."""
    problems = []
    if witness.quiver != W.quiver:
        return ["witness lives on a different quiver"]
    red = reduce_to_support(W, sigma)
    outside = [witness.dims[i] for i in range(W.quiver.n) if i not in set(red.keep)]
    if any(outside):
        problems.append("witness is not supported on the support of W")
    if restrict_vector(witness.dims, red.keep) != red.alpha:
        problems.append(f"witness dimension {witness.dims} does not match weight {tuple(sigma)}")
        return problems
    if not is_orthogonal(witness.restrict(red.keep), red.W):
        problems.append("witness determinant vanishes")
    return problems
