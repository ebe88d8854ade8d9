"""Named wild quivers that reduce to the three-arrow Kronecker quiver.

Each fixture carries a reduction chain: the first stage is an exceptional
sequence on the fixture quiver, every later stage one on the quiver derived
from the previous stage. Later stages use the derived vertex order 1..r.
"""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict

from errors import InvalidQuiverError
from quivers.quiver_model import IntVector, Quiver, kronecker
from quivers.quiver_parser import load_quiver
from representations.rep_model import Representation
from representations.rep_parser import load_representation
from settings.config import settings
from transforms.exceptional import ExceptionalSequence, validate_exceptional_sequence

logger = logging.getLogger(__name__)

StageVector = Union[Dict[str, int], tuple]

CHAINS: Dict[str, List[List[StageVector]]] = {
    "kron3": [[{"2": 1}, {"1": 1}]],
    "b": [[{"3": 1}, {"1": 2, "2": 3}]],
    "b_prime": [[{"1": 2, "2": 3}, {"3": 1}]],
    "c": [[
        {"hub": 3, "s1": 1, "s2": 1, "s3": 1, "s4": 1},
        {"s5": 1},
    ]],
    "d": [
        [
            {"s3": 1},
            {"hub": 2, "s1": 1, "s2": 1, "p1": 1},
            {"p2": 1},
        ],
        [(2, 3, 0), (0, 0, 1)],
    ],
    "e": [
        [
            {"hub": 3, "p1": 2, "p2": 1, "q1": 2, "q2": 1, "r1": 2},
            {"r2": 1},
            {"p3": 1},
        ],
        [(3, 2, 0), (0, 0, 1)],
    ],
    "f": [[
        {"hub": 9, "p1": 7, "p2": 5, "p3": 3, "q1": 7, "q2": 5, "q3": 3, "r1": 5},
        {"p4": 1},
    ]],
    "g": [[
        {"hub": 13, "p1": 11, "p2": 9, "p3": 7, "p4": 5, "p5": 3, "q1": 9, "q2": 5, "r1": 7},
        {"p6": 1},
    ]],
}

FIXTURE_NAMES = ["kron3", "b", "c", "d", "e", "f", "g"]


class Fixture(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    quiver: Quiver
    stages: List[List[IntVector]]


class ChainReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    fixture: str
    sequences: List[ExceptionalSequence]
    terminal: Optional[Quiver] = None

    @property
    def valid(self) -> bool:
        return all(s.valid for s in self.sequences) and self.terminal is not None

    @property
    def reaches_kronecker(self) -> bool:
        return self.valid and self.terminal.is_isomorphic(kronecker(3))


def fixtures_dir() -> Path:
    path = Path(settings.FIXTURES_DIR)
    if not path.is_absolute():
        path = Path(__file__).resolve().parents[1] / path
    return path


def _vector(quiver: Quiver, value: StageVector) -> IntVector:
    if isinstance(value, dict):
        out = [0] * quiver.n
        for vertex, dim in value.items():
            out[quiver.index(vertex)] = dim
        return tuple(out)
    return quiver.check_vector(value)


def load_fixture_quiver(name: str) -> Quiver:
    path = fixtures_dir() / f"{name}.quiver"
    if not path.exists():
        raise InvalidQuiverError(f"unknown fixture {name!r}")
    return load_quiver(path)


def load_fixture_rep(name: str) -> Representation:
    return load_representation(fixtures_dir() / f"{name}.rep")


def load_fixture(name: str) -> Fixture:
    if name not in CHAINS:
        raise InvalidQuiverError(f"unknown fixture {name!r}; choose from {', '.join(sorted(CHAINS))}")
    quiver = load_fixture_quiver(name)
    first = [_vector(quiver, v) for v in CHAINS[name][0]]
    later = [[tuple(v) for v in stage] for stage in CHAINS[name][1:]]
    return Fixture(name=name, quiver=quiver, stages=[first] + later)


def run_reduction_chain(fixture: Fixture, trials: Optional[int] = None, seed: int = 0) -> ChainReport:
    quiver = fixture.quiver
    sequences: List[ExceptionalSequence] = []
    for stage in fixture.stages:
        result = validate_exceptional_sequence(quiver, stage, trials=trials, seed=seed)
        sequences.append(result)
        if not result.valid:
            logger.warning(f"Fixture {fixture.name}: stage {len(sequences)} fails {[c.name for c in result.failures()]}")
            return ChainReport(fixture=fixture.name, sequences=sequences)
        quiver = result.derived
    return ChainReport(fixture=fixture.name, sequences=sequences, terminal=quiver)
