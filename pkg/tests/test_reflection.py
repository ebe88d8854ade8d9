import pytest

from errors import PreconditionError
from linalg import rational_matrix as rm
from representations.decomposition import decompose
from representations.interaction import hom_ext
from representations.rep_model import from_dims, random_representation, simple_representation
from quivers.quiver_model import path_quiver
from transforms.reflection import Direction, explicit_isomorphism, reflect_dim, reflect_rep


def test_reflect_dim_on_a2():
    q = path_quiver(2)
    reflected, alpha = reflect_dim(q, "2", (1, 1))
    assert alpha == (1, 0)
    assert reflected.arrows[0].tail == "2"
    assert reflected.arrows[0].head == "1"


def test_reflect_dim_on_three_arrow_kronecker(kron3):
    _, alpha = reflect_dim(kron3, "2", (1, 1))
    assert alpha == (1, 2)


def test_plus_reflection_of_identity_gives_a_simple():
    q = path_quiver(2)
    V = from_dims(q, (1, 1), {"a1": rm.identity(1)})
    reflected = reflect_rep(V, "2", Direction.PLUS)
    assert reflected.dims == (1, 0)
    assert reflected.quiver == q.reversed_at("2")


def test_simple_at_the_sink_reflects_to_zero(kron3):
    reflected = reflect_rep(simple_representation(kron3, "2"), "2", "plus")
    assert reflected.is_zero()


def test_reflection_matches_dimension_rule(kron3):
    V = random_representation(kron3, (2, 3), seed=4, bound=5)
    reflected = reflect_rep(V, "2", Direction.PLUS)
    assert reflected.dims == reflect_dim(kron3, "2", (2, 3))[1]


def test_reflection_preserves_hom_and_ext(kron3):
    V = random_representation(kron3, (1, 2), seed=1, bound=5)
    W = random_representation(kron3, (2, 3), seed=2, bound=5)
    before = hom_ext(V, W)
    after = hom_ext(reflect_rep(V, "2", "plus"), reflect_rep(W, "2", "plus"))
    assert (after.hom, after.ext) == (before.hom, before.ext)


def test_round_trip_is_isomorphic(kron3):
    V = random_representation(kron3, (2, 3), seed=7, bound=5)
    (summand,) = decompose(V, seed=0).representations()
    back = reflect_rep(reflect_rep(summand, "2", "plus"), "2", "minus")
    assert back.quiver == kron3
    assert explicit_isomorphism(summand, back) is not None


def test_isomorphism_search_rejects_different_dimensions(kron3):
    assert explicit_isomorphism(simple_representation(kron3, "1"), simple_representation(kron3, "2")) is None


@pytest.mark.parametrize("vertex, direction", [("1", "plus"), ("2", "minus")])
def test_reflection_preconditions(kron3, vertex, direction):
    V = random_representation(kron3, (1, 1), seed=0, bound=3)
    with pytest.raises(PreconditionError):
        reflect_rep(V, vertex, direction)
