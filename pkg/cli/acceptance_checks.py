"""The bundled verification suite behind ``verify-paper``.

Every item is exact on the NotMember side; randomness only enters through
seeded sampling, so repeated runs print identical reports.
"""
from __future__ import annotations

import logging
from collections import Counter
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel

from cli.commands import EXIT_FAILED, EXIT_OK, EXIT_USAGE, CommandResult
from errors import PreconditionError, QuiverToolError, SymbolicLimitExceeded
from linalg import rational_matrix as rm
from linalg.poly_matrix import format_polynomial
from orbit.generic_service import verify_multiple_rule
from orbit.membership_service import derive_seed, membership
from orbit.orbit_models import MembershipMode, ProofTag
from orbit.saturation_service import ScanConfig, scan_weights, verify_certificate, weight_box
from quivers.euler_form import euler_form
from quivers.quiver_model import Quiver, format_vector, kronecker, path_quiver
from representations.decomposition import decompose
from representations.interaction import functional_determinant, has_simple_summand, hom_ext, interaction_shape
from representations.rep_model import Representation
from settings.config import settings
from thin.flows import fiber_count, incidence_matrix, lp_relaxation_feasible
from thin.thin_service import thin_membership, thin_saturation_check
from transforms.fixtures import FIXTURE_NAMES, load_fixture, load_fixture_quiver, load_fixture_rep, run_reduction_chain
from transforms.reflection import Direction, explicit_isomorphism, reflect_dim, reflect_rep
from transforms.shrink import shrink

logger = logging.getLogger(__name__)

# thin saturation is checked for multiples 2..THIN_NMAX
THIN_NMAX = 4


class CheckOutcome(BaseModel):
    name: str
    passed: bool
    detail: str = ""


def _rng(item: int) -> np.random.Generator:
    return np.random.default_rng(derive_seed(settings.DEFAULT_SEED, item))


def _random_dims(quiver: Quiver, rng: np.random.Generator, high: int) -> Tuple[int, ...]:
    return tuple(int(x) for x in rng.integers(0, high, size=quiver.n, endpoint=True))


def _degenerate_rep(quiver: Quiver, dims: Sequence[int], rng: np.random.Generator, bound: int = 2) -> Representation:
    """Arrow maps of random rank, so non-generic orbits get sampled too."""
    maps = {}
    for a in quiver.arrows:
        rows, cols = dims[quiver.index(a.head)], dims[quiver.index(a.tail)]
        r = int(rng.integers(0, min(rows, cols), endpoint=True)) if rows and cols else 0
        left = rng.integers(-bound, bound, size=(rows, r), endpoint=True)
        right = rng.integers(-bound, bound, size=(r, cols), endpoint=True)
        maps[a.name] = rm.matrix((left @ right).tolist(), rows, cols)
    return Representation(quiver=quiver, dims=tuple(dims), maps=maps)


def _random_dag(rng: np.random.Generator, max_vertices: int = 5, max_arrows: int = 7) -> Quiver:
    n = int(rng.integers(2, max_vertices, endpoint=True))
    m = int(rng.integers(1, max_arrows, endpoint=True))
    arrows = []
    for k in range(m):
        i, j = sorted(int(v) for v in rng.choice(n, size=2, replace=False))
        arrows.append((f"a{k + 1}", str(i + 1), str(j + 1)))
    return Quiver.build([str(i + 1) for i in range(n)], arrows)


def _random_thin(quiver: Quiver, rng: np.random.Generator) -> Representation:
    dims = _random_dims(quiver, rng, 1)
    maps = {}
    for a in quiver.arrows:
        rows, cols = dims[quiver.index(a.head)], dims[quiver.index(a.tail)]
        if rows and cols:
            value = 0 if rng.random() < 0.3 else int(rng.choice([-3, -2, -1, 1, 2, 3]))
            maps[a.name] = rm.matrix([[value]])
        else:
            maps[a.name] = rm.zeros(rows, cols)
    return Representation(quiver=quiver, dims=dims, maps=maps)


def _tame_quivers() -> List[Tuple[str, Quiver]]:
    return [
        ("A2", path_quiver(2)),
        ("A3", path_quiver(3)),
        ("D4", load_fixture_quiver("d4")),
        ("theta2", kronecker(2)),
        ("A2~", load_fixture_quiver("a2_tilde")),
    ]


def check_theta3() -> CheckOutcome:
    W = load_fixture_rep("skew")
    sigma = (1, -1)
    problems = []
    verdict = membership(W, sigma, MembershipMode.SYMBOLIC)
    if verdict.proof is not ProofTag.ZERO_SYMBOLIC_DETERMINANT:
        problems.append(f"weight {format_vector(sigma)}: {verdict.describe()}")
    shape = interaction_shape(W.quiver, verdict.alpha, W.dims)
    if shape != (9, 9):
        problems.append(f"symbolic matrix is {shape[0]}x{shape[1]}, expected 9x9")
    results = scan_weights(W, (2, 2), ScanConfig(n_max=4))
    certificate = next((r.certificate for r in results if r.weight == sigma and r.certificate), None)
    if certificate is None:
        problems.append(f"no saturation certificate at {format_vector(sigma)}")
    else:
        check = verify_certificate(W, certificate)
        problems += check.problems
    if problems:
        return CheckOutcome(name="theta3", passed=False, detail="; ".join(problems))
    return CheckOutcome(name="theta3", passed=True,
                        detail=f"1,-1 not in S(W); {certificate.multiple} x (1,-1) in S(W); certificate verified")


def check_zwara() -> CheckOutcome:
    W = load_fixture_rep("zwara")
    problems = []
    det = functional_determinant(W)
    if det:
        problems.append(f"functional determinant is {format_polynomial(det)}")
    results = scan_weights(W, (3, 3), ScanConfig(n_max=settings.VERIFY_TAME_NMAX))
    members = [r.weight for r in results if any(r.weight) and r.verdict is not None and r.verdict.is_member]
    certified = [r.weight for r in results if r.certificate is not None]
    if members:
        problems.append(f"nonzero members {[format_vector(s) for s in members]}")
    if certified:
        problems.append(f"unexpected certificates at {[format_vector(s) for s in certified]}")
    uncertified = sum(1 for r in results if r.skipped)
    return CheckOutcome(name="zwara", passed=not problems,
                        detail="; ".join(problems) or f"S(W) meets the box in 0 only ({uncertified} weights uncertified)")


def check_tame() -> CheckOutcome:
    rng = _rng(3)
    config = ScanConfig(n_max=settings.VERIFY_TAME_NMAX, sample_uncertified=False)
    failures, scanned = [], 0
    for name, quiver in _tame_quivers():
        box = (settings.VERIFY_TAME_BOX,) * quiver.n
        for _ in range(settings.VERIFY_TAME_SAMPLES):
            W = _degenerate_rep(quiver, _random_dims(quiver, rng, settings.VERIFY_TAME_MAX_DIM), rng)
            for r in scan_weights(W, box, config):
                scanned += 1
                if r.certificate is not None:
                    failures.append(f"{name} dim {format_vector(W.dims)} weight {format_vector(r.weight)}")
    return CheckOutcome(name="tame", passed=not failures,
                        detail=f"certificates: {failures}" if failures else f"{scanned} weights, no saturation certificate")


def check_euler() -> CheckOutcome:
    rng = _rng(4)
    quivers = [path_quiver(2), path_quiver(3), load_fixture_quiver("d4"), kronecker(2), kronecker(3)]
    failures = []
    for k in range(settings.VERIFY_EULER_PAIRS):
        quiver = quivers[k % len(quivers)]
        V = _degenerate_rep(quiver, _random_dims(quiver, rng, 3), rng)
        W = _degenerate_rep(quiver, _random_dims(quiver, rng, 3), rng)
        he = hom_ext(V, W)
        if he.hom - he.ext != euler_form(quiver, V.dims, W.dims):
            failures.append(f"{format_vector(V.dims)} / {format_vector(W.dims)}")
    return CheckOutcome(name="euler", passed=not failures,
                        detail=f"failures: {failures}" if failures else f"{settings.VERIFY_EULER_PAIRS} pairs")


def check_reflection() -> CheckOutcome:
    rng = _rng(5)
    cases = [
        ("A3", path_quiver(3), "3"),
        ("D4", load_fixture_quiver("d4"), "c"),
        ("theta2", kronecker(2), "2"),
        ("A2~", load_fixture_quiver("a2_tilde"), "3"),
    ]
    pairs_target, trips_target = settings.VERIFY_REFLECTION_PAIRS, settings.VERIFY_ROUND_TRIPS
    pairs = trips = 0
    failures = []
    for attempt in range(20 * max(pairs_target, trips_target, 1)):
        if pairs >= pairs_target and trips >= trips_target:
            break
        name, quiver, x = cases[attempt % len(cases)]
        V = _degenerate_rep(quiver, _random_dims(quiver, rng, 3), rng)
        W = _degenerate_rep(quiver, _random_dims(quiver, rng, 3), rng)
        if pairs < pairs_target and not has_simple_summand(V, x) and not has_simple_summand(W, x):
            pairs += 1
            CV, CW = reflect_rep(V, x, Direction.PLUS), reflect_rep(W, x, Direction.PLUS)
            for R, C in ((V, CV), (W, CW)):
                if C.dims != reflect_dim(quiver, x, R.dims)[1]:
                    failures.append(f"{name}: dim C+({format_vector(R.dims)}) = {format_vector(C.dims)}")
            if hom_ext(V, W) != hom_ext(CV, CW):
                failures.append(f"{name}: hom/ext changed for {format_vector(V.dims)} / {format_vector(W.dims)}")
        if trips >= trips_target:
            continue
        for U in decompose(V, seed=attempt).representations():
            if trips >= trips_target or has_simple_summand(U, x):
                continue
            trips += 1
            back = reflect_rep(reflect_rep(U, x, Direction.PLUS), x, Direction.MINUS)
            if back.quiver != quiver or back.dims != U.dims or explicit_isomorphism(U, back, seed=attempt) is None:
                failures.append(f"{name}: C-C+ round trip fails on {format_vector(U.dims)}")
    if pairs < pairs_target or trips < trips_target:
        failures.append(f"only {pairs} pairs and {trips} round trips sampled")
    return CheckOutcome(name="reflection", passed=not failures,
                        detail="; ".join(failures) or f"{pairs} pairs, {trips} round trips")


def check_multiple_rule() -> CheckOutcome:
    cases = [("A2", path_quiver(2), (1, 1), 4), ("theta2", kronecker(2), (1, 1), 4), ("theta3", kronecker(3), (1, 1), 3)]
    failures, checked = [], 0
    for name, quiver, alpha, m_max in cases:
        for m in range(2, m_max + 1):
            checked += 1
            try:
                rule = verify_multiple_rule(quiver, alpha, m, seeds=settings.CANONICAL_SEEDS)
            except QuiverToolError as e:
                failures.append(f"{name} {m}x{format_vector(alpha)}: {e}")
                continue
            if not rule.passed:
                failures.append(f"{name} {m}x{format_vector(alpha)}: expected {rule.expected}, got {rule.actual}")
    return CheckOutcome(name="multiple-rule", passed=not failures,
                        detail="; ".join(failures) or f"{checked} multiples")


def check_exceptional() -> CheckOutcome:
    failures = []
    names = FIXTURE_NAMES + ["b_prime"]
    for name in names:
        report = run_reduction_chain(load_fixture(name))
        if not report.reaches_kronecker:
            failures.append(name)
    return CheckOutcome(name="exceptional", passed=not failures,
                        detail=f"chains not ending at theta(3): {failures}" if failures
                        else f"{len(names)} chains end at theta(3)")


def _brute_force_fibers(quiver: Quiver, bound: int) -> Counter:
    """Fiber sizes of every boundary reachable by flows with entries <= bound."""
    m = len(quiver.arrows)
    grid = np.indices((bound + 1,) * m).reshape(m, -1).T
    return Counter(map(tuple, (grid @ incidence_matrix(quiver).T).tolist()))


def check_thin() -> CheckOutcome:
    rng = _rng(8)
    B = settings.VERIFY_TAME_BOX
    failures = []
    weights = 0
    for _ in range(settings.VERIFY_THIN_QUIVERS):
        quiver = _random_dag(rng)
        table = _brute_force_fibers(quiver, B)
        for sigma in weight_box((B,) * quiver.n):
            # flows are bounded by the positive part of their boundary
            if sum(sigma) != 0 or sum(s for s in sigma if s > 0) > B:
                continue
            weights += 1
            count = fiber_count(quiver, sigma)
            if count != table.get(sigma, 0):
                failures.append(f"fiber {format_vector(sigma)}: {count} vs {table.get(sigma, 0)}")
            if lp_relaxation_feasible(quiver, sigma) != (count > 0):
                failures.append(f"LP relaxation disagrees at {format_vector(sigma)}")

    compared = uncertified = 0
    for _ in range(settings.VERIFY_THIN_REPS):
        quiver = _random_dag(rng, max_vertices=4)
        W = _random_thin(quiver, rng)
        report = thin_saturation_check(W, (settings.VERIFY_THIN_BOX,) * quiver.n, n_max=THIN_NMAX)
        failures += [f"saturation violated at {format_vector(s)} x {n}" for s, n in report.violations]
        for sigma in weight_box((1,) * quiver.n):
            thin = thin_membership(W, sigma).is_member
            try:
                general = membership(W, sigma, MembershipMode.SYMBOLIC)
            except SymbolicLimitExceeded:
                uncertified += 1
                continue
            compared += 1
            if thin != general.is_member:
                failures.append(f"thin and general membership disagree at {format_vector(sigma)}")
    detail = (f"{weights} fibers, {settings.VERIFY_THIN_REPS} thin representations, "
              f"{compared} certified comparisons ({uncertified} over the symbolic limit)")
    return CheckOutcome(name="thin", passed=not failures, detail="; ".join(failures[:5]) or detail)


def _shrink_cases() -> List[Tuple[str, Quiver, str]]:
    return [
        ("A3", path_quiver(3), "2"),
        ("fork-in", Quiver.build(["x", "y", "c", "z"], [("a1", "x", "c"), ("a2", "y", "c"), ("b", "c", "z")]), "c"),
        ("fork-out", Quiver.build(["z", "c", "x", "y"], [("b", "z", "c"), ("a1", "c", "x"), ("a2", "c", "y")]), "c"),
        ("A4", path_quiver(4), "3"),
    ]


def check_shrink() -> CheckOutcome:
    rng = _rng(9)
    cases = _shrink_cases()
    failures = []
    instances = 0
    for attempt in range(50 * max(settings.VERIFY_SHRINK_INSTANCES, 1)):
        if instances >= settings.VERIFY_SHRINK_INSTANCES:
            break
        name, quiver, v0 = cases[attempt % len(cases)]
        W = _degenerate_rep(quiver, _random_dims(quiver, rng, 2), rng)
        try:
            result = shrink(quiver, v0, W=W)
        except PreconditionError:
            continue
        instances += 1
        i0 = quiver.index(v0)
        for sigma in weight_box((settings.VERIFY_SHRINK_BOX,) * quiver.n):
            if sigma[i0] != 0:
                continue
            small = sigma[:i0] + sigma[i0 + 1:]
            before = membership(W, sigma, MembershipMode.SYMBOLIC, trials=4, allow_fallback=True)
            after = membership(result.rep, small, MembershipMode.SYMBOLIC, trials=4, allow_fallback=True)
            if before.is_member != after.is_member:
                failures.append(f"{name} dim {format_vector(W.dims)} weight {format_vector(sigma)}")
    if instances < settings.VERIFY_SHRINK_INSTANCES:
        failures.append(f"only {instances} instances satisfy the preconditions")
    return CheckOutcome(name="shrink", passed=not failures,
                        detail="; ".join(failures[:5]) or f"{instances} instances")


CHECKS: Dict[str, Callable[[], CheckOutcome]] = {
    "theta3": check_theta3,
    "zwara": check_zwara,
    "tame": check_tame,
    "euler": check_euler,
    "reflection": check_reflection,
    "multiple-rule": check_multiple_rule,
    "exceptional": check_exceptional,
    "thin": check_thin,
    "shrink": check_shrink,
}


def _line(outcome: CheckOutcome) -> str:
    line = f"[ {'OK' if outcome.passed else 'FAIL'} ] {outcome.name}"
    if outcome.detail:
        line += f" -> {outcome.detail}"
    return line


def run_check(name: str) -> CheckOutcome:
    logger.info(f"verify-paper: running {name}")
    try:
        return CHECKS[name]()
    except (QuiverToolError, ValueError, OSError) as e:
        logger.warning(f"verify-paper: {name} raised {e}")
        return CheckOutcome(name=name, passed=False, detail=f"error: {e}")


def verify_paper_examples(only: Optional[str] = None) -> CommandResult:
    if only is not None and only not in CHECKS:
        return CommandResult(exit_code=EXIT_USAGE, report=f"unknown item {only!r}; choose from {', '.join(CHECKS)}")
    names = [only] if only else list(CHECKS)
    outcomes = [run_check(name) for name in names]
    failed = [o.name for o in outcomes if not o.passed]
    lines = [_line(o) for o in outcomes]
    lines.append(f"{len(outcomes) - len(failed)}/{len(outcomes)} items passed")
    return CommandResult(exit_code=EXIT_FAILED if failed else EXIT_OK, report="\n".join(lines))
