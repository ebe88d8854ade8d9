"""Generic hom/ext, root classes and canonical decompositions, all sampled."""
from __future__ import annotations

import logging
from collections import Counter
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from errors import DimensionMismatchError, UnstableDecompositionError
from linalg import rational_matrix as rm
from orbit.membership_service import derive_seed
from orbit.orbit_models import CanonicalDecomposition, CanonicalPart, MultipleRuleReport, RootClass
from quivers.euler_form import euler_form, tits_form
from quivers.quiver_model import IntVector, Quiver
from representations.decomposition import decompose, geometric_dimension_vectors
from representations.interaction import HomExt, interaction_matrix
from representations.rep_model import random_representation
from settings.config import settings

logger = logging.getLogger(__name__)


def _sampled_hom(quiver: Quiver, alpha: IntVector, beta: IntVector, seed: int, bound: int) -> int:
    V = random_representation(quiver, alpha, derive_seed(seed, 0), bound)
    W = random_representation(quiver, beta, derive_seed(seed, 1), bound)
    d = interaction_matrix(V, W)
    if max(d.shape) > settings.MODULAR_THRESHOLD:
        # modular rank never exceeds the rational rank: this over-estimates hom
        # only on a vanishing set of samples
        return d.shape[1] - rm.rank_mod_p(d)
    return d.shape[1] - rm.rank(d)


def generic_endomorphism_dim(quiver: Quiver, alpha: Sequence[int], seed: int = 0, bound: Optional[int] = None) -> int:
    """dim End(V) for one generic V of dimension alpha; 1 exactly for Schur roots."""
    alpha = quiver.check_vector(alpha, "alpha")
    V = random_representation(quiver, alpha, derive_seed(seed, *alpha, 3), bound or settings.CANONICAL_BOUND)
    d = interaction_matrix(V, V)
    return d.shape[1] - rm.rank(d)


def generic_hom_ext(
    quiver: Quiver,
    alpha: Sequence[int],
    beta: Sequence[int],
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    bound: Optional[int] = None,
) -> HomExt:
    alpha = quiver.check_vector(alpha, "alpha")
    beta = quiver.check_vector(beta, "beta")
    if any(x < 0 for x in alpha + beta):
        raise DimensionMismatchError("generic hom/ext needs nonnegative dimension vectors")
    trials = settings.RANDOM_TRIALS if trials is None else trials
    seed = settings.DEFAULT_SEED if seed is None else seed
    bound = settings.RANDOM_BOUND if bound is None else bound
    euler = euler_form(quiver, alpha, beta)
    floor = max(0, euler)
    hom = None
    for t in range(max(trials, 1)):
        h = _sampled_hom(quiver, alpha, beta, derive_seed(seed, *alpha, *beta, t), bound)
        hom = h if hom is None else min(hom, h)
        if hom == floor:
            break
    logger.debug(f"generic hom({alpha},{beta}) = {hom}")
    return HomExt(hom=hom, ext=hom - euler)


def classify_root(quiver: Quiver, alpha: Sequence[int]) -> RootClass:
    value = tits_form(quiver, alpha)
    if value == 1:
        return RootClass.REAL
    if value == 0:
        return RootClass.ISOTROPIC
    if value < 0:
        return RootClass.IMAGINARY
    raise ValueError(f"<alpha,alpha> = {value} > 1: not a root class")


def _seed_list(seeds) -> List[int]:
    if seeds is None:
        return list(range(settings.CANONICAL_SEEDS))
    if isinstance(seeds, int):
        return list(range(seeds))
    return list(seeds)


def _geometric_parts(quiver: Quiver, alpha: IntVector, seed: int) -> Counter:
    V = random_representation(quiver, alpha, derive_seed(seed, *alpha), settings.CANONICAL_BOUND)
    decomposition = decompose(V, seed=derive_seed(seed, *alpha, 1))
    return geometric_dimension_vectors(decomposition, seed=derive_seed(seed, *alpha, 2))


def canonical_decomposition(quiver: Quiver, alpha: Sequence[int], seeds: Iterable[int] | int | None = None) -> CanonicalDecomposition:
    alpha = quiver.check_vector(alpha, "alpha")
    if any(x < 0 for x in alpha):
        raise DimensionMismatchError(f"dimension vector {alpha} has a negative entry")
    seed_list = _seed_list(seeds)
    per_seed: Dict[int, Counter] = {s: _geometric_parts(quiver, alpha, s) for s in seed_list}
    multisets = {s: sorted(c.items()) for s, c in per_seed.items()}
    if len({tuple(m) for m in multisets.values()}) > 1:
        raise UnstableDecompositionError(multisets)
    counts = per_seed[seed_list[0]] if seed_list else Counter()
    parts = []
    for dims, mult in sorted(counts.items()):
        schur = generic_endomorphism_dim(quiver, dims, seed=seed_list[0] if seed_list else 0) == 1
        parts.append(CanonicalPart(dims=dims, multiplicity=mult, root_class=classify_root(quiver, dims), schur=schur))
    return CanonicalDecomposition(alpha=alpha, parts=parts, seeds=seed_list)


def expected_multiple(decomposition: CanonicalDecomposition, m: int) -> List[Tuple[IntVector, int]]:
    """Apply the bracket rule: real and isotropic parts repeat m times, imaginary parts scale by m."""
    counts: Counter = Counter()
    for p in decomposition.parts:
        if p.root_class is RootClass.IMAGINARY:
            counts[tuple(m * d for d in p.dims)] += p.multiplicity
        else:
            counts[p.dims] += m * p.multiplicity
    return sorted(counts.items())


def verify_multiple_rule(quiver: Quiver, alpha: Sequence[int], m: int, seeds=None) -> MultipleRuleReport:
    if m < 1:
        raise ValueError("the multiple must be at least 1")
    alpha = quiver.check_vector(alpha, "alpha")
    base = canonical_decomposition(quiver, alpha, seeds)
    scaled = canonical_decomposition(quiver, tuple(m * x for x in alpha), seeds)
    expected = expected_multiple(base, m)
    actual = scaled.multiset()
    passed = expected == actual and all(p.schur for p in base.parts)
    logger.info(f"Multiple rule for {alpha} x {m}: {'pass' if passed else 'FAIL'}")
    return MultipleRuleReport(alpha=alpha, m=m, passed=passed, expected=expected, actual=actual)
