from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Iterator, List, Optional, Sequence

from pydantic import BaseModel, Field

from orbit.membership_service import (
    derive_seed,
    membership,
    quick_verdict,
    reduce_to_support,
    symbolic_size,
    verify_witness,
)
from orbit.orbit_models import (
    MembershipMode,
    MembershipStatus,
    ProofTag,
    SaturationCertificate,
    WeightScanResult,
)
from representations.rep_model import Representation
from settings.config import settings

logger = logging.getLogger(__name__)


class ScanConfig(BaseModel):
    n_max: int = Field(default=4, ge=2)
    trials: int = Field(default_factory=lambda: settings.RANDOM_TRIALS)
    bound: int = Field(default_factory=lambda: settings.RANDOM_BOUND)
    seed: int = Field(default_factory=lambda: settings.DEFAULT_SEED)
    symbolic_limit: int = Field(default_factory=lambda: settings.SYMBOLIC_LIMIT)
    sample_uncertified: bool = Field(default_factory=lambda: settings.SCAN_SAMPLE_UNCERTIFIED)
    workers: int = Field(default_factory=lambda: settings.SCAN_WORKERS)


def weight_box(bounds: Sequence[int]) -> Iterator[tuple]:
    """All weights with |sigma(x)| <= bounds[x], in lexicographic order."""
    return itertools.product(*[range(-b, b + 1) for b in bounds])


def scan_weight(W: Representation, sigma: tuple, config: ScanConfig) -> WeightScanResult:
    red = reduce_to_support(W, sigma)
    quick = quick_verdict(W, sigma, red)
    if quick is not None:
        return WeightScanResult(weight=sigma, verdict=quick)
    common = dict(trials=config.trials, bound=config.bound, symbolic_limit=config.symbolic_limit)
    if symbolic_size(red) > config.symbolic_limit:
        if not config.sample_uncertified:
            return WeightScanResult(weight=sigma, skipped="symbolic limit exceeded")
        verdict = membership(W, sigma, MembershipMode.RANDOMIZED, seed=derive_seed(config.seed, *sigma), **common)
        return WeightScanResult(weight=sigma, verdict=verdict, skipped=None if verdict.is_member else "symbolic limit exceeded")

    verdict = membership(W, sigma, MembershipMode.SYMBOLIC, seed=derive_seed(config.seed, *sigma), **common)
    if verdict.proof is not ProofTag.ZERO_SYMBOLIC_DETERMINANT:
        return WeightScanResult(weight=sigma, verdict=verdict)
    for n in range(2, config.n_max + 1):
        multiple = tuple(n * s for s in sigma)
        v_n = membership(W, multiple, MembershipMode.RANDOMIZED, seed=derive_seed(config.seed, *sigma, n), **common)
        if v_n.status is MembershipStatus.MEMBER:
            logger.info(f"Saturation fails at weight {sigma}: {n} x weight is in S(W)")
            certificate = SaturationCertificate(weight=sigma, multiple=n, witness=v_n.witness, proof=verdict.proof)
            return WeightScanResult(weight=sigma, verdict=verdict, certificate=certificate)
    return WeightScanResult(weight=sigma, verdict=verdict)


def scan_weights(W: Representation, box: Sequence[int], config: Optional[ScanConfig] = None) -> List[WeightScanResult]:
    config = config or ScanConfig()
    box = W.quiver.check_vector(box, "weight box")
    weights = list(weight_box(box))
    logger.info(f"Scanning {len(weights)} weights with n_max={config.n_max}")
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            return list(pool.map(partial(scan_weight, W, config=config), weights, chunksize=8))
    return [scan_weight(W, sigma, config) for sigma in weights]


def saturation_scan(W: Representation, box: Sequence[int], n_max: int, config: Optional[ScanConfig] = None) -> List[SaturationCertificate]:
    config = (config or ScanConfig()).model_copy(update={"n_max": n_max})
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    return [r.certificate for r in scan_weights(W, box, config) if r.certificate is not None]


class CertificateCheck(BaseModel):
    passed: bool
    problems: List[str] = []


def verify_certificate(W: Representation, certificate: SaturationCertificate, symbolic_limit: Optional[int] = None) -> CertificateCheck:
    """Re-check the witness exactly and re-derive the non-membership proof."""
    sigma = W.quiver.check_vector(certificate.weight, "weight")
    multiple = tuple(certificate.multiple * s for s in sigma)
    problems = verify_witness(W, multiple, certificate.witness)
    base = membership(W, sigma, MembershipMode.SYMBOLIC, trials=1, symbolic_limit=symbolic_limit)
    if base.status is not MembershipStatus.NOT_MEMBER:
        problems.append(f"weight {sigma} is not a certified non-member ({base.status.value})")
    elif base.proof is not certificate.proof:
        problems.append(f"proof tag {certificate.proof.value} does not match re-derived {base.proof.value}")
    return CertificateCheck(passed=not problems, problems=problems)
