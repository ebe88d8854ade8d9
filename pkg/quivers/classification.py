"""Representation type of a connected quiver.

Two independent decisions are made and compared: definiteness of the
symmetrized Tits form, and matching of the underlying graph against the
Dynkin and Euclidean diagram lists.
"""
from __future__ import annotations

import itertools
import logging
from enum import Enum
from typing import List, Optional, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, model_validator
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from errors import InvalidQuiverError
from quivers.euler_form import euler_matrix
from quivers.quiver_model import Quiver
from settings.config import settings

logger = logging.getLogger(__name__)

TILDE = "̃"


class QuiverType(str, Enum):
    DYNKIN = "Dynkin"
    EUCLIDEAN = "Euclidean"
    WILD = "Wild"


class QuiverClass(BaseModel):
    model_config = ConfigDict(frozen=True)

    tag: QuiverType
    label: Optional[str] = None

    @model_validator(mode="after")
    def _label_iff_tame(self) -> "QuiverClass":
        if (self.label is None) != (self.tag is QuiverType.WILD):
            raise ValueError("a diagram label is present exactly for Dynkin and Euclidean classes")
        return self

    def __str__(self) -> str:
        return self.tag.value if self.label is None else f"{self.tag.value} {self.label}"


def _symmetric_form(quiver: Quiver) -> DomainMatrix:
    E = euler_matrix(quiver)
    S = E + E.T
    return DomainMatrix([[ZZ(int(x)) for x in row] for row in S], S.shape, ZZ)


def _minor(S: DomainMatrix, idx: Tuple[int, ...]) -> int:
    if not idx:
        return 1
    data = S.to_list()
    sub = DomainMatrix([[data[i][j] for j in idx] for i in idx], (len(idx), len(idx)), ZZ)
    return int(sub.det())


def classify_by_form(quiver: Quiver) -> Optional[QuiverType]:
    """Definiteness test; None when the quiver is too large for the minor enumeration."""
    S = _symmetric_form(quiver)
    n = quiver.n
    if all(_minor(S, tuple(range(k))) > 0 for k in range(1, n + 1)):
        return QuiverType.DYNKIN
    if S.convert_to(ZZ.get_field()).rank() != n - 1:
        return QuiverType.WILD
    if n > settings.CLASSIFY_MINOR_LIMIT:
        return None
    for k in range(1, n):
        for idx in itertools.combinations(range(n), k):
            if _minor(S, idx) < 0:
                return QuiverType.WILD
    return QuiverType.EUCLIDEAN


def _star(arms: List[int]) -> nx.MultiGraph:
    g = nx.MultiGraph()
    g.add_node(0)
    nxt = 1
    for length in arms:
        prev = 0
        for _ in range(length):
            g.add_edge(prev, nxt)
            prev = nxt
            nxt += 1
    return g


def _two_branch(n: int) -> nx.MultiGraph:
    """A path on n - 4 vertices with two leaves hung at each end."""
    g = nx.MultiGraph(nx.path_graph(n - 4))
    g.add_edges_from([(0, n - 4), (0, n - 3), (n - 5, n - 2), (n - 5, n - 1)])
    return g


def diagram_candidates(n: int) -> List[Tuple[QuiverType, str, nx.MultiGraph]]:
    out: List[Tuple[QuiverType, str, nx.MultiGraph]] = []
    if n >= 1:
        out.append((QuiverType.DYNKIN, f"A{n}", nx.MultiGraph(nx.path_graph(n))))
    if n >= 4:
        out.append((QuiverType.DYNKIN, f"D{n}", _star([1, 1, n - 3])))
    if n in (6, 7, 8):
        out.append((QuiverType.DYNKIN, f"E{n}", _star([1, 2, n - 4])))
    if n == 2:
        out.append((QuiverType.EUCLIDEAN, f"A{TILDE}1", nx.MultiGraph([(0, 1), (0, 1)])))
    if n >= 3:
        out.append((QuiverType.EUCLIDEAN, f"A{TILDE}{n - 1}", nx.MultiGraph(nx.cycle_graph(n))))
    if n >= 5:
        out.append((QuiverType.EUCLIDEAN, f"D{TILDE}{n - 1}", _two_branch(n)))
    euclidean_e = {7: [2, 2, 2], 8: [1, 3, 3], 9: [1, 2, 5]}
    if n in euclidean_e:
        out.append((QuiverType.EUCLIDEAN, f"E{TILDE}{n - 1}", _star(euclidean_e[n])))
    return out


def classify_by_graph(quiver: Quiver) -> Tuple[QuiverType, Optional[str]]:
    g = quiver.underlying_graph()
    for tag, label, candidate in diagram_candidates(quiver.n):
        if candidate.number_of_edges() == g.number_of_edges() and nx.is_isomorphic(g, candidate):
            return tag, label
    return QuiverType.WILD, None


def classify_quiver(quiver: Quiver) -> QuiverClass:
    if not quiver.is_connected:
        raise InvalidQuiverError("classification needs a connected quiver")
    graph_tag, label = classify_by_graph(quiver)
    form_tag = classify_by_form(quiver)
    if form_tag is None:
        logger.warning(f"Quiver with {quiver.n} vertices exceeds the minor limit; using diagram matching only")
    elif form_tag is not graph_tag:
        raise InvalidQuiverError(
            f"classification mismatch: quadratic form says {form_tag.value}, diagram matching says {graph_tag.value}"
        )
    return QuiverClass(tag=graph_tag, label=label)
