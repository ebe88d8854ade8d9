"""Shrinking a through-vertex into composed arrows.

v0 with a single outgoing arrow b: v0 -> w and incoming arrows a_i: v_i -> v0
is removed; each pair becomes one arrow v_i -> w carrying W(b) W(a_i). The
reversed configuration (single incoming b: w -> v0, outgoing a_i) is handled
the same way with W(a_i) W(b).
"""
from __future__ import annotations

import logging
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from errors import PreconditionError
from quivers.quiver_model import Arrow, IntVector, Quiver
from representations.rep_model import Representation

logger = logging.getLogger(__name__)


class ShrinkResult(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    quiver: Quiver
    beta: Optional[IntVector] = None
    rep: Optional[Representation] = None
    weight: Optional[IntVector] = None
    # composed arrow name -> (outer arrow, inner arrow), the composite being outer after inner
    composed: List[Tuple[str, str, str]]


def _fresh_name(base: str, taken: set) -> str:
    name, k = base, 1
    while name in taken:
        k += 1
        name = f"{base}{k}"
    taken.add(name)
    return name


def _configuration(quiver: Quiver, v0: str) -> Tuple[Arrow, List[Arrow], bool]:
    """The single arrow b, the arrows a_i and whether the orientation is reversed."""
    out, inc = quiver.outgoing(v0), quiver.incoming(v0)
    if len(out) == 1 and inc:
        return out[0], inc, False
    if len(inc) == 1 and out:
        return inc[0], out, True
    raise PreconditionError([
        f"vertex {v0!r} needs exactly one outgoing arrow and at least one incoming arrow (or the reverse); "
        f"it has {len(out)} outgoing and {len(inc)} incoming"
    ])


def shrink(
    quiver: Quiver,
    v0: str,
    W: Optional[Representation] = None,
    sigma: Optional[Sequence[int]] = None,
    beta: Optional[Sequence[int]] = None,
) -> ShrinkResult:
    quiver.index(v0)
    if W is not None:
        beta = W.dims
    b, others, reversed_ = _configuration(quiver, v0)
    w = b.tail if reversed_ else b.head
    violations: List[str] = []
    if beta is not None:
        beta = quiver.check_vector(beta, "dimension vector")
        if beta[quiver.index(v0)] < beta[quiver.index(w)]:
            violations.append(f"beta({v0}) = {beta[quiver.index(v0)]} < beta({w}) = {beta[quiver.index(w)]}")
    if sigma is not None:
        sigma = quiver.check_vector(sigma, "weight")
        if sigma[quiver.index(v0)] != 0:
            violations.append(f"sigma({v0}) = {sigma[quiver.index(v0)]} is nonzero")
    if violations:
        raise PreconditionError(violations)

    removed = {b.name} | {a.name for a in others}
    kept = [a for a in quiver.arrows if a.name not in removed]
    taken = {a.name for a in kept}
    composed, new_arrows = [], [(a.name, a.tail, a.head) for a in kept]
    for a in others:
        if reversed_:
            name = _fresh_name(f"{a.name}{b.name}", taken)
            new_arrows.append((name, w, a.head))
            composed.append((name, a.name, b.name))
        else:
            name = _fresh_name(f"{b.name}{a.name}", taken)
            new_arrows.append((name, a.tail, w))
            composed.append((name, b.name, a.name))
    vertices = [v for v in quiver.vertices if v != v0]
    new_quiver = Quiver.build(vertices, new_arrows)
    keep = [quiver.index(v) for v in vertices]

    rep = None
    if W is not None:
        maps = {a.name: W.maps[a.name] for a in kept}
        for name, outer, inner in composed:
            maps[name] = W.maps[outer] * W.maps[inner]
        rep = Representation(quiver=new_quiver, dims=tuple(W.dims[i] for i in keep), maps=maps)
    logger.debug(f"Shrunk vertex {v0!r}: {len(composed)} composed arrows")
    return ShrinkResult(
        quiver=new_quiver,
        beta=tuple(beta[i] for i in keep) if beta is not None else None,
        rep=rep,
        weight=tuple(sigma[i] for i in keep) if sigma is not None else None,
        composed=composed,
    )
