from __future__ import annotations

import logging
from typing import List, Optional, Sequence

from pydantic import BaseModel, ConfigDict, model_validator

from errors import PreconditionError
from orbit.generic_service import generic_hom_ext
from quivers.euler_form import euler_form
from quivers.quiver_model import IntVector, Quiver

logger = logging.getLogger(__name__)

VALIDATION_TRIALS = 2


class SequenceCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    passed: bool
    detail: str = ""


class ExceptionalSequence(BaseModel):
    model_config = ConfigDict(frozen=True)

    quiver: Quiver
    vectors: List[IntVector]
    checks: List[SequenceCheck]
    derived: Optional[Quiver] = None

    @property
    def valid(self) -> bool:
        return all(c.passed for c in self.checks)

    @model_validator(mode="after")
    def _derived_iff_valid(self) -> "ExceptionalSequence":
        if (self.derived is not None) != self.valid:
            raise ValueError("the derived quiver is present exactly when every check passes")
        return self

    def failures(self) -> List[SequenceCheck]:
        return [c for c in self.checks if not c.passed]


def _checks(quiver: Quiver, vectors: List[IntVector], trials: int, seed: int) -> List[SequenceCheck]:
    checks = [SequenceCheck(name="length", passed=len(vectors) <= quiver.n,
                            detail=f"{len(vectors)} vectors on {quiver.n} vertices")]
    for i, e in enumerate(vectors, start=1):
        if any(x < 0 for x in e):
            checks.append(SequenceCheck(name=f"nonnegative(e{i})", passed=False, detail=str(e)))
    if not all(c.passed for c in checks):
        return checks
    for i, e in enumerate(vectors, start=1):
        value = euler_form(quiver, e, e)
        checks.append(SequenceCheck(name=f"real(e{i})", passed=value == 1, detail=f"<e,e> = {value}"))
        he = generic_hom_ext(quiver, e, e, trials=trials, seed=seed)
        checks.append(SequenceCheck(name=f"schur(e{i})", passed=(he.hom, he.ext) == (1, 0),
                                    detail=f"hom {he.hom}, ext {he.ext}"))
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            he = generic_hom_ext(quiver, vectors[i], vectors[j], trials=trials, seed=seed)
            checks.append(SequenceCheck(name=f"orthogonal(e{i + 1},e{j + 1})", passed=(he.hom, he.ext) == (0, 0),
                                        detail=f"hom {he.hom}, ext {he.ext}"))
            back = euler_form(quiver, vectors[j], vectors[i])
            checks.append(SequenceCheck(name=f"quiver(e{j + 1},e{i + 1})", passed=back <= 0,
                                        detail=f"<e{j + 1},e{i + 1}> = {back}"))
    return checks


def _derived_quiver(quiver: Quiver, vectors: List[IntVector]) -> Quiver:
    r = len(vectors)
    arrows = []
    for i in range(r):
        for j in range(i + 1, r):
            count = -euler_form(quiver, vectors[j], vectors[i])
            arrows += [(f"a{j + 1}_{i + 1}_{k + 1}", str(j + 1), str(i + 1)) for k in range(count)]
    return Quiver.build([str(k + 1) for k in range(r)], arrows)


def validate_exceptional_sequence(
    quiver: Quiver, vectors: Sequence[Sequence[int]], trials: Optional[int] = None, seed: int = 0
) -> ExceptionalSequence:
    vectors = [quiver.check_vector(e, f"e{k + 1}") for k, e in enumerate(vectors)]
    checks = _checks(quiver, vectors, VALIDATION_TRIALS if trials is None else trials, seed)
    derived = _derived_quiver(quiver, vectors) if all(c.passed for c in checks) else None
    result = ExceptionalSequence(quiver=quiver, vectors=vectors, checks=checks, derived=derived)
    logger.info(f"Exceptional sequence of length {len(vectors)}: {'valid' if result.valid else 'invalid'}")
    return result


def epsilon_quiver(sequence: ExceptionalSequence) -> Quiver:
    """The quiver on 1..r with -<e_j, e_i> arrows j -> i."""
    if not sequence.valid:
        names = ", ".join(c.name for c in sequence.failures())
        raise PreconditionError([f"sequence is not a quiver exceptional sequence (failed: {names})"])
    return sequence.derived
