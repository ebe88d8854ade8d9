from __future__ import annotations

from functools import cached_property
from typing import Dict, List, Sequence, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import MultiDiGraphMatcher
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from errors import DimensionMismatchError, InvalidQuiverError

IntVector = Tuple[int, ...]


class Arrow(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    tail: str
    head: str


class Quiver(BaseModel):
    """A finite quiver without oriented cycles.

    Vertex and arrow order is declaration order; every integer vector in the
    package is indexed by it.
    """

    model_config = ConfigDict(frozen=True)

    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...] = ()

    @field_validator("vertices")
    @classmethod
    def _unique_vertices(cls, v: Tuple[str, ...]) -> Tuple[str, ...]:
        seen = set()
        for name in v:
            if name in seen:
                raise ValueError(f"duplicate vertex {name!r}")
            seen.add(name)
        return v

    @model_validator(mode="after")
    def _check_arrows(self) -> "Quiver":
        names = set()
        known = set(self.vertices)
        for a in self.arrows:
            if a.name in names:
                raise ValueError(f"duplicate arrow {a.name!r}")
            names.add(a.name)
            for end in (a.tail, a.head):
                if end not in known:
                    raise ValueError(f"arrow {a.name!r} references undeclared vertex {end!r}")
        if not nx.is_directed_acyclic_graph(self.graph):
            raise ValueError("quiver has an oriented cycle")
        return self

    @classmethod
    def build(cls, vertices: Sequence[str], arrows: Sequence[Tuple[str, str, str]]) -> "Quiver":
        try:
            return cls(
                vertices=tuple(vertices),
                arrows=tuple(Arrow(name=n, tail=t, head=h) for n, t, h in arrows),
            )
        except ValueError as exc:
            raise InvalidQuiverError(str(exc)) from exc

    @cached_property
    def graph(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.vertices)
        for a in self.arrows:
            g.add_edge(a.tail, a.head, key=a.name)
        return g

    @cached_property
    def vertex_index(self) -> Dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def arrow_index(self) -> Dict[str, int]:
        return {a.name: i for i, a in enumerate(self.arrows)}

    @cached_property
    def topological_order(self) -> List[str]:
        return list(nx.lexicographical_topological_sort(self.graph, key=self.vertex_index.get))

    @property
    def is_connected(self) -> bool:
        return len(self.vertices) > 0 and nx.is_weakly_connected(self.graph)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, vertex: str) -> int:
        try:
            return self.vertex_index[vertex]
        except KeyError:
            raise InvalidQuiverError(f"unknown vertex {vertex!r}") from None

    def arrow(self, name: str) -> Arrow:
        try:
            return self.arrows[self.arrow_index[name]]
        except KeyError:
            raise InvalidQuiverError(f"unknown arrow {name!r}") from None

    def incoming(self, vertex: str) -> List[Arrow]:
        return [a for a in self.arrows if a.head == vertex]

    def outgoing(self, vertex: str) -> List[Arrow]:
        return [a for a in self.arrows if a.tail == vertex]

    def is_sink(self, vertex: str) -> bool:
        self.index(vertex)
        return not self.outgoing(vertex)

    def is_source(self, vertex: str) -> bool:
        self.index(vertex)
        return not self.incoming(vertex)

    def check_vector(self, vector: Sequence[int], what: str = "vector") -> IntVector:
        if len(vector) != self.n:
            raise DimensionMismatchError(f"{what} has {len(vector)} entries, quiver has {self.n} vertices")
        return tuple(int(x) for x in vector)

    def reversed_at(self, vertex: str) -> "Quiver":
        """The quiver with every arrow incident to ``vertex`` reversed."""
        self.index(vertex)
        arrows = []
        for a in self.arrows:
            if vertex in (a.tail, a.head):
                arrows.append((a.name, a.head, a.tail))
            else:
                arrows.append((a.name, a.tail, a.head))
        return Quiver.build(self.vertices, arrows)

    def opposite(self) -> "Quiver":
        return Quiver.build(self.vertices, [(a.name, a.head, a.tail) for a in self.arrows])

    def is_isomorphic(self, other: "Quiver") -> bool:
        if self.n != other.n or len(self.arrows) != len(other.arrows):
            return False
        return MultiDiGraphMatcher(self.graph, other.graph).is_isomorphic()

    def underlying_graph(self) -> nx.MultiGraph:
        return nx.MultiGraph(self.graph.to_undirected())


def kronecker(m: int, names: Sequence[str] = ("1", "2")) -> Quiver:
    """The generalized Kronecker quiver with m parallel arrows."""
    source, sink = names
    return Quiver.build([source, sink], [(f"a{i + 1}", source, sink) for i in range(m)])


def path_quiver(n: int) -> Quiver:
    vertices = [str(i + 1) for i in range(n)]
    return Quiver.build(vertices, [(f"a{i + 1}", vertices[i], vertices[i + 1]) for i in range(n - 1)])


def parse_vector(text: str) -> IntVector:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"not an integer vector: {text!r}") from exc


def format_vector(vector: Sequence[int]) -> str:
    return ",".join(str(int(x)) for x in vector)
