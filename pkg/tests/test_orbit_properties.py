import pytest

from errors import SymbolicLimitExceeded
from linalg import rational_matrix as rm
from orbit.membership_service import membership
from orbit.orbit_models import MembershipMode
from orbit.saturation_service import saturation_scan, weight_box
from quivers.quiver_model import Quiver, kronecker, path_quiver
from representations.interaction import schofield_eval
from representations.rep_model import direct_sum, from_dims, random_change_of_basis, random_representation
from thin.thin_service import thin_membership
from transforms.shrink import shrink


def _certified(W, sigma):
    try:
        return membership(W, sigma, MembershipMode.SYMBOLIC, trials=4)
    except SymbolicLimitExceeded:
        return None


FORK_IN = Quiver.build(["x", "y", "c", "z"], [("a1", "x", "c"), ("a2", "y", "c"), ("b", "c", "z")])
FORK_OUT = Quiver.build(["z", "c", "x", "y"], [("b", "z", "c"), ("a1", "c", "x"), ("a2", "c", "y")])


@pytest.mark.parametrize(
    "quiver, v0, dims, seed",
    [
        (FORK_IN, "c", (1, 1, 2, 1), 1),
        (FORK_IN, "c", (1, 1, 1, 1), 2),
        (FORK_OUT, "c", (1, 2, 1, 1), 3),
        (path_quiver(3), "2", (1, 1, 1), 4),
        (path_quiver(4), "3", (1, 1, 2, 1), 5),
    ],
)
def test_shrinking_preserves_membership(quiver, v0, dims, seed):
    W = random_representation(quiver, dims, seed=seed, bound=3)
    result = shrink(quiver, v0, W=W)
    i0 = quiver.index(v0)
    compared = 0
    for sigma in weight_box((2,) * quiver.n):
        if sigma[i0] != 0:
            continue
        before = _certified(W, sigma)
        after = _certified(result.rep, sigma[:i0] + sigma[i0 + 1:])
        if before is None or after is None:
            continue
        compared += 1
        assert before.status is after.status, sigma
    assert compared > 0


@pytest.mark.parametrize("m, dims1, dims2", [(2, (1, 1), (2, 2)), (2, (1, 1), (1, 1)), (3, (1, 1), (2, 2))])
def test_witness_of_a_direct_sum_is_orthogonal_to_each_summand(m, dims1, dims2):
    q = kronecker(m)
    W1 = random_representation(q, dims1, seed=7, bound=5)
    W2 = random_representation(q, dims2, seed=8, bound=5)
    W = direct_sum(W1, W2)
    witnesses = 0
    for sigma in weight_box((3, 3)):
        verdict = membership(W, sigma, trials=4)
        if not verdict.is_member or verdict.witness.is_zero():
            continue
        witnesses += 1
        V = verdict.witness
        assert schofield_eval(V, W1) != 0
        assert schofield_eval(V, W2) != 0
    assert witnesses > 0


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_verdicts_are_invariant_under_change_of_basis(skew_rep, seed):
    moved = skew_rep.transport(random_change_of_basis(skew_rep, seed))
    for sigma in weight_box((1, 1)):
        before = membership(skew_rep, sigma, MembershipMode.SYMBOLIC, allow_fallback=True)
        after = membership(moved, sigma, MembershipMode.SYMBOLIC, allow_fallback=True)
        assert before.status is after.status, sigma
        assert before.proof is after.proof


def test_verdicts_are_invariant_under_change_of_basis_on_theta2(theta2):
    W = random_representation(theta2, (2, 2), seed=12, bound=4)
    moved = W.transport(random_change_of_basis(W, 13))
    for sigma in weight_box((2, 2)):
        before = membership(W, sigma, MembershipMode.SYMBOLIC, allow_fallback=True)
        after = membership(moved, sigma, MembershipMode.SYMBOLIC, allow_fallback=True)
        assert before.status is after.status, sigma


@pytest.mark.parametrize("dims, seed", [((1, 1), 21), ((2, 1), 22), ((1, 2), 23)])
def test_generic_representation_of_a_wild_quiver_is_saturated(kron3, dims, seed):
    W = random_representation(kron3, dims, seed=seed, bound=10**6)
    assert saturation_scan(W, (2, 2), n_max=3) == []


def _thin_cases():
    theta2 = kronecker(2)
    cases = [
        ("theta2-generic", from_dims(theta2, (1, 1), {"a1": rm.matrix([[1]]), "a2": rm.matrix([[2]])})),
        ("theta2-one-zero", from_dims(theta2, (1, 1), {"a1": rm.matrix([[0]]), "a2": rm.matrix([[3]])})),
        ("theta2-zero", from_dims(theta2, (1, 1))),
        ("A3-broken", from_dims(path_quiver(3), (1, 1, 1), {"a1": rm.identity(1)})),
        ("A3-full", from_dims(path_quiver(3), (1, 1, 1), {"a1": rm.identity(1), "a2": rm.matrix([[-2]])})),
        ("A3-gap", from_dims(path_quiver(3), (1, 0, 1))),
    ]
    square = Quiver.build(["1", "2", "3", "4"], [("p", "1", "2"), ("q", "2", "4"), ("r", "1", "3"), ("s", "3", "4")])
    cases.append(("square", from_dims(square, (1, 1, 1, 1), {"p": rm.matrix([[1]]), "q": rm.matrix([[2]]),
                                                            "r": rm.matrix([[0]]), "s": rm.matrix([[5]])})))
    return cases


@pytest.mark.parametrize("name, W", _thin_cases(), ids=lambda x: x if isinstance(x, str) else None)
def test_thin_membership_agrees_with_symbolic_membership(name, W):
    compared = 0
    for sigma in weight_box((2,) * W.quiver.n):
        general = _certified(W, sigma)
        if general is None:
            continue
        compared += 1
        assert thin_membership(W, sigma).is_member == general.is_member, sigma
    assert compared > 0
