import pytest

from errors import DimensionMismatchError
from orbit.generic_service import (
    canonical_decomposition,
    classify_root,
    generic_endomorphism_dim,
    generic_hom_ext,
    verify_multiple_rule,
)
from orbit.orbit_models import RootClass
from quivers.quiver_model import kronecker, path_quiver


@pytest.mark.parametrize(
    "quiver, alpha, beta, expected",
    [
        (path_quiver(2), (1, 0), (0, 1), (0, 1)),
        (path_quiver(2), (0, 1), (1, 0), (0, 0)),
        (path_quiver(2), (1, 1), (1, 1), (1, 0)),
        (kronecker(2), (1, 1), (1, 1), (0, 0)),
        (kronecker(3), (1, 0), (0, 1), (0, 3)),
        (kronecker(3), (1, 2), (3, 3), (0, 0)),
    ],
)
def test_generic_hom_ext(quiver, alpha, beta, expected):
    he = generic_hom_ext(quiver, alpha, beta)
    assert (he.hom, he.ext) == expected


def test_generic_hom_ext_rejects_negative_vectors(theta2):
    with pytest.raises(DimensionMismatchError):
        generic_hom_ext(theta2, (1, -1), (1, 1))


def test_classify_root(theta2, kron3):
    assert classify_root(theta2, (1, 0)) is RootClass.REAL
    assert classify_root(theta2, (1, 1)) is RootClass.ISOTROPIC
    assert classify_root(kron3, (1, 1)) is RootClass.IMAGINARY
    with pytest.raises(ValueError):
        classify_root(path_quiver(2), (2, 0))


@pytest.mark.parametrize(
    "quiver, alpha, expected",
    [
        (path_quiver(2), (2, 2), [((1, 1), 2)]),
        (kronecker(2), (2, 2), [((1, 1), 2)]),
        (kronecker(3), (2, 2), [((2, 2), 1)]),
        (path_quiver(2), (2, 1), [((1, 0), 1), ((1, 1), 1)]),
    ],
)
def test_canonical_decomposition(quiver, alpha, expected):
    decomposition = canonical_decomposition(quiver, alpha, seeds=3)
    assert decomposition.multiset() == expected
    assert decomposition.seeds == [0, 1, 2]


def test_canonical_decomposition_part_labels(theta2):
    decomposition = canonical_decomposition(theta2, (2, 2), seeds=2)
    (part,) = decomposition.parts
    assert part.root_class is RootClass.ISOTROPIC
    assert part.schur
    assert decomposition.describe() == "2x(1,1) [isotropic]"


def test_canonical_decomposition_rejects_negative_alpha(theta2):
    with pytest.raises(DimensionMismatchError):
        canonical_decomposition(theta2, (1, -1))


@pytest.mark.parametrize(
    "quiver, alpha, m",
    [
        (kronecker(2), (1, 1), 3),
        (kronecker(3), (1, 1), 2),
        (path_quiver(2), (1, 0), 5),
    ],
)
def test_multiple_rule(quiver, alpha, m):
    report = verify_multiple_rule(quiver, alpha, m, seeds=2)
    assert report.passed, (report.expected, report.actual)


def test_multiple_rule_needs_a_positive_multiple(theta2):
    with pytest.raises(ValueError):
        verify_multiple_rule(theta2, (1, 1), 0)


def test_generic_endomorphisms(theta2, kron3):
    assert generic_endomorphism_dim(theta2, (1, 1)) == 1
    assert generic_endomorphism_dim(kron3, (2, 2)) == 1
    assert generic_endomorphism_dim(theta2, (2, 2)) == 2
