"""The map d^V_W: (phi(x))_x -> (phi(head a) V(a) - W(a) phi(tail a))_a.

Frozen basis order, used by every serialized witness:
  source coordinates run over vertices in declaration order, block for x is
  Hom(V(x), W(x)) as a dim W(x) x dim V(x) matrix read row-major;
  target coordinates run over arrows in declaration order, block for a is
  Hom(V(tail a), W(head a)) as a dim W(head a) x dim V(tail a) matrix read row-major.
"""
from __future__ import annotations

import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from errors import DimensionMismatchError, InvalidQuiverError, PreconditionError
from linalg import rational_matrix as rm
from linalg.poly_matrix import polynomial_ring, symbolic_determinant
from quivers.euler_form import euler_form
from quivers.quiver_model import Quiver
from representations.rep_model import Representation, same_quiver

logger = logging.getLogger(__name__)


class HomExt(BaseModel):
    model_config = ConfigDict(frozen=True)

    hom: int
    ext: int


def _offsets(sizes: Sequence[int]) -> List[int]:
    out, total = [], 0
    for s in sizes:
        out.append(total)
        total += s
    return out


def interaction_shape(quiver: Quiver, alpha: Sequence[int], beta: Sequence[int]) -> Tuple[int, int]:
    """(rows, cols) of d^V_W for dim V = alpha, dim W = beta."""
    cols = sum(a * b for a, b in zip(alpha, beta))
    rows = sum(beta[quiver.index(a.head)] * alpha[quiver.index(a.tail)] for a in quiver.arrows)
    return rows, cols


def _interaction_entries(
    quiver: Quiver,
    alpha: Sequence[int],
    beta: Sequence[int],
    v_entry: Callable[[str, int, int], object],
    w_entry: Callable[[str, int, int], object],
) -> Tuple[Dict[Tuple[int, int], object], int, int]:
    idx = quiver.index
    src = _offsets([alpha[i] * beta[i] for i in range(quiver.n)])
    tgt = _offsets([beta[idx(a.head)] * alpha[idx(a.tail)] for a in quiver.arrows])
    nrows, ncols = interaction_shape(quiver, alpha, beta)
    entries: Dict[Tuple[int, int], object] = {}

    def add(key, value):
        if key in entries:
            entries[key] = entries[key] + value
        else:
            entries[key] = value

    for ai, a in enumerate(quiver.arrows):
        t, h = idx(a.tail), idx(a.head)
        for i in range(beta[h]):
            for j in range(alpha[t]):
                row = tgt[ai] + i * alpha[t] + j
                for k in range(alpha[h]):
                    add((row, src[h] + i * alpha[h] + k), v_entry(a.name, k, j))
                for k in range(beta[t]):
                    add((row, src[t] + k * alpha[t] + j), -w_entry(a.name, i, k))
    return entries, nrows, ncols


def interaction_matrix(V: Representation, W: Representation) -> DomainMatrix:
    same_quiver(V, W)
    vdata = {name: m.to_list() for name, m in V.maps.items()}
    wdata = {name: m.to_list() for name, m in W.maps.items()}
    entries, nrows, ncols = _interaction_entries(
        V.quiver, V.dims, W.dims,
        lambda a, k, j: vdata[a][k][j],
        lambda a, i, k: wdata[a][i][k],
    )
    return rm.from_sparse(entries, nrows, ncols)


def variable_names(quiver: Quiver, alpha: Sequence[int]) -> List[str]:
    """One indeterminate per entry of a representation of dimension alpha."""
    names = []
    for a in quiver.arrows:
        rows, cols = alpha[quiver.index(a.head)], alpha[quiver.index(a.tail)]
        names += [f"{a.name}_{i}_{j}" for i in range(rows) for j in range(cols)]
    return names


def symbolic_interaction_matrix(quiver: Quiver, alpha: Sequence[int], W: Representation):
    """d^V_W with V generic of dimension alpha, over QQ[V-entries].

    Returns the matrix and the variable names in generator order.
    """
    names = variable_names(quiver, alpha)
    K = polynomial_ring(names or ["_"])
    gens = K.gens
    position = {}
    for n, name in enumerate(names):
        position[name] = n
    wdata = {name: m.to_list() for name, m in W.maps.items()}
    entries, nrows, ncols = _interaction_entries(
        quiver, alpha, W.dims,
        lambda a, k, j: gens[position[f"{a}_{k}_{j}"]],
        lambda a, i, k: K.convert(wdata[a][i][k]),
    )
    return rm.from_sparse(entries, nrows, ncols, domain=K), names


def hom_ext(V: Representation, W: Representation) -> HomExt:
    d = interaction_matrix(V, W)
    r = rm.rank(d)
    return HomExt(hom=d.shape[1] - r, ext=d.shape[0] - r)


def hom_basis(V: Representation, W: Representation) -> List[Dict[str, DomainMatrix]]:
    """Basis of Hom(V, W), each element a per-vertex matrix dim W(x) x dim V(x)."""
    d = interaction_matrix(V, W)
    kernel = rm.kernel_basis(d).to_list()
    basis = []
    for c in range(len(kernel[0]) if kernel else 0):
        vec = [row[c] for row in kernel]
        basis.append(unflatten_morphism(V.quiver, V.dims, W.dims, vec))
    return basis


def unflatten_morphism(quiver: Quiver, alpha, beta, vec) -> Dict[str, DomainMatrix]:
    out, pos = {}, 0
    for i, v in enumerate(quiver.vertices):
        rows, cols = beta[i], alpha[i]
        block = [[vec[pos + r * cols + c] for c in range(cols)] for r in range(rows)]
        out[v] = DomainMatrix(block, (rows, cols), QQ)
        pos += rows * cols
    return out


def endomorphism_basis(V: Representation) -> List[Dict[str, DomainMatrix]]:
    return hom_basis(V, V)


def schofield_eval(V: Representation, W: Representation):
    same_quiver(V, W)
    value = euler_form(V.quiver, V.dims, W.dims)
    if value != 0:
        raise PreconditionError([f"Euler form <{V.dims},{W.dims}> = {value} is nonzero"])
    return rm.determinant(interaction_matrix(V, W))


def is_orthogonal(V: Representation, W: Representation) -> bool:
    """V perp W, decided through the nonvanishing of c(V, W)."""
    same_quiver(V, W)
    if euler_form(V.quiver, V.dims, W.dims) != 0:
        return False
    return rm.is_nonsingular(interaction_matrix(V, W))


def _kronecker_arrows(quiver: Quiver) -> List[str]:
    if quiver.n != 2 or not quiver.arrows:
        raise InvalidQuiverError("functional determinant needs a generalized Kronecker quiver")
    tail, head = quiver.arrows[0].tail, quiver.arrows[0].head
    if any((a.tail, a.head) != (tail, head) for a in quiver.arrows):
        raise InvalidQuiverError("functional determinant needs all arrows parallel")
    return [a.name for a in quiver.arrows]


def functional_determinant(W: Representation, limit: Optional[int] = None):
    """det(t1 W(a1) + ... + tm W(am)) as a polynomial in QQ[t1..tm]."""
    arrows = _kronecker_arrows(W.quiver)
    if W.dims[0] != W.dims[1]:
        raise DimensionMismatchError(f"functional determinant needs equal dimensions, got {W.dims}")
    n = W.dims[0]
    K = polynomial_ring([f"t{i + 1}" for i in range(len(arrows))])
    rows = [[K.zero] * n for _ in range(n)]
    for ti, name in zip(K.gens, arrows):
        data = W.maps[name].to_list()
        for i in range(n):
            for j in range(n):
                if data[i][j]:
                    rows[i][j] = rows[i][j] + ti * K.convert(data[i][j])
    return symbolic_determinant(DomainMatrix(rows, (n, n), K), limit)


def has_simple_summand(V: Representation, vertex: str) -> bool:
    """S_x splits off V iff the joint kernel of the arrows leaving x is not inside
    the sum of images of the arrows entering x."""
    q = V.quiver
    d = V.dim_at(vertex)
    if d == 0:
        return False
    out_maps = [V.maps[a.name] for a in q.outgoing(vertex)]
    joint_kernel = rm.kernel_basis(rm.vstack(out_maps, d)) if out_maps else rm.identity(d)
    in_maps = [V.maps[a.name] for a in q.incoming(vertex)]
    images = rm.hstack(in_maps, d) if in_maps else rm.zeros(d, 0)
    base = rm.rank(images)
    return rm.rank(rm.hstack([images, joint_kernel], d)) > base
