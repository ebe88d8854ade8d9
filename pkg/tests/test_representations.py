import pytest

from errors import DimensionMismatchError, ParseError
from linalg import rational_matrix as rm
from quivers.quiver_model import kronecker, path_quiver
from representations.rep_model import (
    Representation,
    direct_sum,
    from_dims,
    random_change_of_basis,
    random_representation,
    simple_representation,
    zero_representation,
)
from representations.rep_parser import format_representation, load_representation, parse_representation


def test_shapes_are_validated(theta2):
    with pytest.raises(ValueError):
        Representation(quiver=theta2, dims=(1, 2), maps={"a1": rm.zeros(1, 1), "a2": rm.zeros(2, 1)})
    with pytest.raises(DimensionMismatchError):
        from_dims(theta2, (1, 1), {"a1": rm.zeros(2, 2)})


def test_random_representation_is_deterministic(theta2):
    V = random_representation(theta2, (1, 1), seed=7, bound=10 ** 6)
    assert V == random_representation(theta2, (1, 1), seed=7, bound=10 ** 6)
    assert all(V.maps[a].shape == (1, 1) for a in ("a1", "a2"))
    assert all(abs(V.maps[a].to_list()[0][0]) <= 10 ** 6 for a in ("a1", "a2"))
    assert random_representation(theta2, (0, 0), seed=1, bound=5).is_zero()


def test_direct_sum_and_simples():
    q = path_quiver(2)
    S1, S2 = simple_representation(q, "1"), simple_representation(q, "2")
    total = direct_sum(S1, S2)
    assert total.dims == (1, 1)
    assert total.maps["a1"].is_zero_matrix
    assert zero_representation(q).is_zero()


def test_restrict_and_extend_round_trip():
    q = path_quiver(3)
    V = random_representation(q, (1, 2, 0), seed=3, bound=4)
    keep = [0, 1]
    small = V.restrict(keep)
    assert small.quiver.vertices == ("1", "2")
    assert small.extend(q, keep) == V


def test_transport_preserves_the_isomorphism_class(kron3):
    V = random_representation(kron3, (2, 2), seed=11, bound=5)
    g = random_change_of_basis(V, seed=12)
    W = V.transport(g)
    for a in kron3.arrows:
        assert W.maps[a.name] * g[a.tail] == g[a.head] * V.maps[a.name]


def test_load_skew_fixture(fixtures_path):
    W = load_representation(f"{fixtures_path}/skew.rep")
    assert W.dims == (3, 3)
    assert W.quiver.is_isomorphic(kronecker(3))
    for a in W.quiver.arrows:
        M = W.maps[a.name]
        assert M.transpose() == -M


def test_parse_errors_carry_line_numbers(theta2):
    with pytest.raises(ParseError) as exc:
        parse_representation("rep - dim 1,1\nm a1\n1\nm zz\n1\n", theta2)
    assert exc.value.line == 4
    with pytest.raises(ParseError):
        parse_representation("rep - dim 1,1\nm a1\n1 2\n", theta2)
    with pytest.raises(ParseError):
        parse_representation("rep - dim 1,1\nm a1\n1\n", theta2)


@pytest.mark.parametrize("text", ["", "# only a comment\n\n   \n"])
def test_representation_file_without_header(tmp_path, text):
    path = tmp_path / "blank.rep"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(ParseError) as exc:
        load_representation(path)
    assert exc.value.line == 1
    assert "header" in str(exc.value)


def test_missing_empty_blocks_are_zero():
    q = path_quiver(2)
    V = parse_representation("rep - dim 0,2\n", q)
    assert V.maps["a1"].shape == (2, 0)


def test_format_round_trip(kron3):
    V = random_representation(kron3, (2, 1), seed=5, bound=9)
    assert parse_representation(format_representation(V), kron3) == V


def test_rationals_in_files(theta2):
    V = parse_representation("rep - dim 1,1\nm a1\n1/2\nm a2\n-3/4\n", theta2)
    assert "m a1\n1/2" in format_representation(V)
