from __future__ import annotations

from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from quivers.quiver_model import IntVector, format_vector
from representations.rep_model import Representation


class MembershipStatus(str, Enum):
    MEMBER = "Member"
    NOT_MEMBER = "NotMember"
    PROBABLY_NOT_MEMBER = "ProbablyNotMember"


class MembershipMode(str, Enum):
    RANDOMIZED = "randomized"
    SYMBOLIC = "symbolic"


class ProofTag(str, Enum):
    NEGATIVE_ALPHA = "negative-alpha"
    ZERO_SYMBOLIC_DETERMINANT = "zero-symbolic-determinant"
    OFF_SUPPORT_MISMATCH = "off-support-mismatch"
    INFEASIBLE_FLOW = "infeasible-flow"


PROOF_TEXT = {
    ProofTag.NEGATIVE_ALPHA: "negative dimension vector",
    ProofTag.ZERO_SYMBOLIC_DETERMINANT: "zero polynomial",
    ProofTag.OFF_SUPPORT_MISMATCH: "weight does not vanish on the dimension vector",
    ProofTag.INFEASIBLE_FLOW: "no admissible flow",
}


class RootClass(str, Enum):
    REAL = "real"
    ISOTROPIC = "isotropic"
    IMAGINARY = "imaginary"


class MembershipVerdict(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    status: MembershipStatus
    weight: IntVector
    alpha: Optional[IntVector] = None
    witness: Optional[Representation] = None
    proof: Optional[ProofTag] = None
    trials: Optional[int] = None
    bound: Optional[int] = None
    error_bound: Optional[float] = None
    notice: Optional[str] = None
    # thin case: admissible flow and its monomial
    flow: Optional[IntVector] = None
    monomial: Optional[str] = None

    @model_validator(mode="after")
    def _evidence(self) -> "MembershipVerdict":
        if self.status is MembershipStatus.MEMBER and self.witness is None and self.flow is None:
            raise ValueError("a Member verdict needs a witness")
        if self.status is MembershipStatus.NOT_MEMBER and self.proof is None:
            raise ValueError("a NotMember verdict needs a proof tag")
        return self

    @property
    def is_member(self) -> bool:
        return self.status is MembershipStatus.MEMBER

    @property
    def is_certified_non_member(self) -> bool:
        return self.status is MembershipStatus.NOT_MEMBER

    def describe(self) -> str:
        if self.status is MembershipStatus.MEMBER:
            if self.flow is not None:
                return f"Member (flow {format_vector(self.flow)}, monomial {self.monomial})"
            return f"Member (witness of dimension {format_vector(self.witness.dims)})"
        if self.status is MembershipStatus.NOT_MEMBER:
            return f"NotMember (certified: {PROOF_TEXT[self.proof]})"
        text = f"ProbablyNotMember ({self.trials} trials, bound {self.bound}, error <= {self.error_bound:.3e})"
        if self.notice:
            text += f" [{self.notice}]"
        return text


class SaturationCertificate(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    weight: IntVector
    multiple: int = Field(ge=2)
    witness: Representation
    proof: ProofTag

    @model_validator(mode="after")
    def _certified_proof(self) -> "SaturationCertificate":
        if self.proof is ProofTag.INFEASIBLE_FLOW:
            raise ValueError("saturation certificates carry a general non-membership proof")
        return self


class WeightScanResult(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    weight: IntVector
    verdict: Optional[MembershipVerdict] = None
    certificate: Optional[SaturationCertificate] = None
    skipped: Optional[str] = None


class CanonicalPart(BaseModel):
    model_config = ConfigDict(frozen=True)

    dims: IntVector
    multiplicity: int = Field(ge=1)
    root_class: RootClass
    schur: bool


class CanonicalDecomposition(BaseModel):
    model_config = ConfigDict(frozen=True)

    alpha: IntVector
    parts: List[CanonicalPart]
    seeds: List[int]

    @model_validator(mode="after")
    def _sums_to_alpha(self) -> "CanonicalDecomposition":
        total = [0] * len(self.alpha)
        for p in self.parts:
            for i, d in enumerate(p.dims):
                total[i] += p.multiplicity * d
        if tuple(total) != tuple(self.alpha):
            raise ValueError(f"parts sum to {tuple(total)}, expected {self.alpha}")
        return self

    def multiset(self) -> List[Tuple[IntVector, int]]:
        return sorted((p.dims, p.multiplicity) for p in self.parts)

    def describe(self) -> str:
        return " + ".join(
            f"{p.multiplicity}x({format_vector(p.dims)}) [{p.root_class.value}{'' if p.schur else ', not Schur'}]"
            for p in self.parts
        ) or "0"


class MultipleRuleReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    alpha: IntVector
    m: int
    passed: bool
    expected: List[Tuple[IntVector, int]]
    actual: List[Tuple[IntVector, int]]
