"""Nonnegative integer flows under the boundary map I(lambda)_x = out(x) - in(x)."""
from __future__ import annotations

import logging
from typing import Iterator, List, Optional, Sequence, Set

import networkx as nx
import numpy as np
from scipy.optimize import linprog

from errors import DimensionMismatchError
from quivers.quiver_model import IntVector, Quiver

logger = logging.getLogger(__name__)


def _check_flow(quiver: Quiver, flow: Sequence[int]) -> IntVector:
    if len(flow) != len(quiver.arrows):
        raise DimensionMismatchError(f"flow has {len(flow)} entries, quiver has {len(quiver.arrows)} arrows")
    flow = tuple(int(x) for x in flow)
    if any(x < 0 for x in flow):
        raise DimensionMismatchError(f"flow {flow} has a negative entry")
    return flow


def boundary(quiver: Quiver, flow: Sequence[int]) -> IntVector:
    flow = _check_flow(quiver, flow)
    out = [0] * quiver.n
    for a, value in zip(quiver.arrows, flow):
        out[quiver.index(a.tail)] += value
        out[quiver.index(a.head)] -= value
    return tuple(out)


def incidence_matrix(quiver: Quiver) -> np.ndarray:
    M = np.zeros((quiver.n, len(quiver.arrows)), dtype=np.int64)
    for j, a in enumerate(quiver.arrows):
        M[quiver.index(a.tail), j] += 1
        M[quiver.index(a.head), j] -= 1
    return M


def _compositions(total: int, parts: int) -> Iterator[tuple]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_fiber(quiver: Quiver, sigma: Sequence[int], allowed: Optional[Set[str]] = None) -> Iterator[IntVector]:
    """Every nonnegative integer flow with boundary sigma.

    Vertices are visited in topological order; when x is reached its inflow is
    fixed, so the outflow is exactly sigma(x) + inflow(x) and only its
    distribution over the arrows leaving x remains free.
    """
    sigma = quiver.check_vector(sigma, "weight")
    order = quiver.topological_order
    inflow = [0] * quiver.n
    flow = [0] * len(quiver.arrows)

    def visit(pos: int) -> Iterator[IntVector]:
        if pos == len(order):
            yield tuple(flow)
            return
        v = order[pos]
        i = quiver.index(v)
        total = sigma[i] + inflow[i]
        outs = [a for a in quiver.outgoing(v) if allowed is None or a.name in allowed]
        if total < 0 or (not outs and total != 0):
            return
        if not outs:
            yield from visit(pos + 1)
            return
        for comp in _compositions(total, len(outs)):
            for a, c in zip(outs, comp):
                flow[quiver.arrow_index[a.name]] = c
                inflow[quiver.index(a.head)] += c
            yield from visit(pos + 1)
            for a, c in zip(outs, comp):
                flow[quiver.arrow_index[a.name]] = 0
                inflow[quiver.index(a.head)] -= c

    return visit(0)


def fiber_count(quiver: Quiver, sigma: Sequence[int]) -> int:
    return sum(1 for _ in enumerate_fiber(quiver, sigma))


def feasible_flow(quiver: Quiver, sigma: Sequence[int], allowed: Optional[Set[str]] = None) -> Optional[IntVector]:
    """A minimal-cost nonnegative integer flow with boundary sigma on the allowed arrows, or None.

    Network simplex on integral data returns an integral optimum.
    """
    sigma = quiver.check_vector(sigma, "weight")
    if sum(sigma) != 0:
        return None
    if not any(sigma):
        return (0,) * len(quiver.arrows)
    g = nx.MultiDiGraph()
    for v, s in zip(quiver.vertices, sigma):
        g.add_node(v, demand=-s)
    for a in quiver.arrows:
        if allowed is None or a.name in allowed:
            g.add_edge(a.tail, a.head, key=a.name, weight=1)
    try:
        _, flow_dict = nx.network_simplex(g)
    except nx.NetworkXUnfeasible:
        return None
    out = [0] * len(quiver.arrows)
    for a in quiver.arrows:
        if allowed is None or a.name in allowed:
            out[quiver.arrow_index[a.name]] = int(flow_dict[a.tail][a.head][a.name])
    return tuple(out)


def lp_relaxation_feasible(quiver: Quiver, sigma: Sequence[int], allowed: Optional[Set[str]] = None) -> bool:
    """Feasibility of I(lambda) = sigma over nonnegative reals with the support constraint."""
    sigma = quiver.check_vector(sigma, "weight")
    m = len(quiver.arrows)
    if m == 0:
        return not any(sigma)
    bounds: List[tuple] = [
        (0, None) if allowed is None or a.name in allowed else (0, 0) for a in quiver.arrows
    ]
    res = linprog(np.zeros(m), A_eq=incidence_matrix(quiver), b_eq=np.array(sigma, dtype=float),
                  bounds=bounds, method="highs")
    return res.status == 0
