"""Orbit semigroups of thin representations, decided by admissible flows."""
from __future__ import annotations

import logging
from typing import List, Optional, Sequence, Set, Tuple

from pydantic import BaseModel
from sympy import QQ

from errors import PreconditionError
from linalg.poly_matrix import format_polynomial, polynomial_ring
from orbit.orbit_models import MembershipStatus, MembershipVerdict, ProofTag
from orbit.saturation_service import weight_box
from quivers.euler_form import restrict_vector, support_restrict
from quivers.quiver_model import IntVector, Quiver
from representations.rep_model import Representation
from thin.flows import feasible_flow

logger = logging.getLogger(__name__)


class ThinSaturationReport(BaseModel):
    checked: int
    violations: List[Tuple[IntVector, int]] = []

    @property
    def passed(self) -> bool:
        return not self.violations


def _require_thin(W: Representation) -> None:
    if not W.is_thin():
        raise PreconditionError([f"representation of dimension {W.dims} is not thin"])


def admissible_arrows(W: Representation) -> Set[str]:
    """Arrows whose scalar t(a) is nonzero."""
    return {a.name for a in W.quiver.arrows if not W.maps[a.name].is_zero_matrix}


def monomial(quiver: Quiver, flow: Sequence[int]):
    """f_lambda as the product of t_a ** lambda(a) in QQ[t_a : a arrow]."""
    K = polynomial_ring([f"t_{a.name}" for a in quiver.arrows] or ["t"])
    result = K.one
    for g, power in zip(K.gens, flow):
        result = result * g ** int(power)
    return result


def evaluate_monomial(W: Representation, flow: Sequence[int]):
    value = QQ.one
    for a, power in zip(W.quiver.arrows, flow):
        if power:
            m = W.maps[a.name]
            scalar = m.to_list()[0][0] if m.shape == (1, 1) else QQ.zero
            value *= scalar ** int(power)
    return value


def thin_membership(W: Representation, sigma: Sequence[int]) -> MembershipVerdict:
    _require_thin(W)
    q = W.quiver
    sigma = q.check_vector(sigma, "weight")
    sub, keep = support_restrict(q, W.dims)
    allowed = admissible_arrows(W) & {a.name for a in sub.arrows}
    flow_sub = feasible_flow(sub, restrict_vector(sigma, keep), allowed)
    if flow_sub is None:
        return MembershipVerdict(status=MembershipStatus.NOT_MEMBER, weight=sigma, proof=ProofTag.INFEASIBLE_FLOW)
    flow = [0] * len(q.arrows)
    for a, value in zip(sub.arrows, flow_sub):
        flow[q.arrow_index[a.name]] = value
    flow = tuple(flow)
    return MembershipVerdict(
        status=MembershipStatus.MEMBER,
        weight=sigma,
        flow=flow,
        monomial=format_polynomial(monomial(q, flow)),
    )


def thin_saturation_check(W: Representation, box: Optional[Sequence[int]], n_max: int = 4) -> ThinSaturationReport:
    """n sigma in S(W) for some 2 <= n <= n_max must imply sigma in S(W)."""
    _require_thin(W)
    if box is None:
        return ThinSaturationReport(checked=0)
    box = W.quiver.check_vector(box, "weight box")
    violations = []
    checked = 0
    for sigma in weight_box(box):
        checked += 1
        if thin_membership(W, sigma).is_member:
            continue
        for n in range(2, n_max + 1):
            if thin_membership(W, tuple(n * s for s in sigma)).is_member:
                logger.warning(f"Thin saturation violated at {sigma} with multiple {n}")
                violations.append((sigma, n))
                break
    return ThinSaturationReport(checked=checked, violations=violations)
