import pytest

from errors import InvalidQuiverError, PreconditionError, SymbolicLimitExceeded
from linalg import rational_matrix as rm
from linalg.poly_matrix import polynomial_ring
from quivers.euler_form import euler_form
from quivers.quiver_model import path_quiver
from representations.interaction import (
    endomorphism_basis,
    functional_determinant,
    has_simple_summand,
    hom_basis,
    hom_ext,
    interaction_matrix,
    interaction_shape,
    is_orthogonal,
    schofield_eval,
)
from representations.rep_model import (
    direct_sum,
    from_dims,
    random_representation,
    simple_representation,
    zero_representation,
)


def _a2_identity():
    q = path_quiver(2)
    return from_dims(q, (1, 1), {"a1": rm.identity(1)})


def _scalars(quiver, a, b):
    return from_dims(quiver, (1, 1), {"a1": rm.matrix([[a]]), "a2": rm.matrix([[b]])})


def test_interaction_shape_of_simples():
    q = path_quiver(2)
    d = interaction_matrix(simple_representation(q, "1"), simple_representation(q, "2"))
    assert d.shape == (1, 0)
    assert interaction_shape(q, (1, 0), (0, 1)) == (1, 0)


def test_theta2_pairing(theta2):
    V, W = _scalars(theta2, 2, 3), _scalars(theta2, 5, 7)
    d = interaction_matrix(V, W)
    assert d.shape == (2, 2)
    assert abs(rm.determinant(d)) == abs(2 * 7 - 3 * 5)


@pytest.mark.parametrize(
    "make_v, make_w, expected",
    [
        (lambda q: simple_representation(q, "1"), lambda q: simple_representation(q, "2"), (0, 1)),
        (lambda q: _a2_identity(), lambda q: zero_representation(q), (0, 0)),
        (lambda q: _a2_identity(), lambda q: _a2_identity(), (1, 0)),
    ],
)
def test_hom_ext_examples(make_v, make_w, expected):
    q = path_quiver(2)
    result = hom_ext(make_v(q), make_w(q))
    assert (result.hom, result.ext) == expected


def test_hom_minus_ext_is_the_euler_form(kron3):
    V = random_representation(kron3, (1, 2), seed=1, bound=3)
    W = random_representation(kron3, (2, 1), seed=2, bound=3)
    result = hom_ext(V, W)
    assert result.hom - result.ext == euler_form(kron3, V.dims, W.dims)


def test_hom_basis_elements_are_morphisms(theta2):
    V = _scalars(theta2, 1, 2)
    W = direct_sum(V, _scalars(theta2, 1, 3))
    basis = hom_basis(V, W)
    assert len(basis) == hom_ext(V, W).hom == 1
    for f in basis:
        for a in theta2.arrows:
            assert W.maps[a.name] * f[a.tail] == f[a.head] * V.maps[a.name]
    assert len(endomorphism_basis(_a2_identity())) == 1


def test_schofield_eval(skew_rep):
    q = path_quiver(2)
    assert schofield_eval(simple_representation(q, "2"), simple_representation(q, "1")) == 1
    for seed in range(3):
        V = random_representation(skew_rep.quiver, (1, 2), seed=seed, bound=100)
        assert schofield_eval(V, skew_rep) == 0
        assert not is_orthogonal(V, skew_rep)


def test_schofield_eval_rejects_nonzero_euler_form(theta2):
    V = _scalars(theta2, 1, 0)
    with pytest.raises(PreconditionError) as exc:
        schofield_eval(V, simple_representation(theta2, "1"))
    assert "= 1" in str(exc.value)


def test_theta2_orthogonality(theta2):
    assert abs(schofield_eval(_scalars(theta2, 1, 0), _scalars(theta2, 0, 1))) == 1
    assert is_orthogonal(_scalars(theta2, 1, 0), _scalars(theta2, 0, 1))


def test_functional_determinants(theta2, skew_rep, zwara_rep):
    assert not functional_determinant(zwara_rep)
    assert not functional_determinant(skew_rep)
    K = polynomial_ring(["t1", "t2"])
    t1, t2 = K.gens
    assert functional_determinant(_scalars(theta2, 1, 1)) == t1 + t2


def test_functional_determinant_respects_the_symbolic_limit(skew_rep, monkeypatch):
    from settings.config import settings

    with pytest.raises(SymbolicLimitExceeded):
        functional_determinant(skew_rep, limit=2)
    monkeypatch.setattr(settings, "SYMBOLIC_LIMIT", 2)
    with pytest.raises(SymbolicLimitExceeded):
        functional_determinant(skew_rep)


def test_functional_determinant_needs_kronecker():
    with pytest.raises(InvalidQuiverError):
        functional_determinant(random_representation(path_quiver(3), (1, 1, 1), seed=0, bound=2))


def test_simple_summands():
    q = path_quiver(2)
    S1 = simple_representation(q, "1")
    assert has_simple_summand(S1, "1")
    assert not has_simple_summand(_a2_identity(), "1")
    assert not has_simple_summand(_a2_identity(), "2")
    assert has_simple_summand(direct_sum(S1, _a2_identity()), "1")
