import pytest
from pydantic import ValidationError

from errors import ParseError
from orbit.certificate_io import format_certificate, parse_certificates
from orbit.orbit_models import ProofTag, SaturationCertificate
from orbit.saturation_service import ScanConfig, saturation_scan, scan_weights, verify_certificate, weight_box
from representations.rep_model import from_dims, random_representation, zero_representation


@pytest.fixture(scope="module")
def skew_scan():
    from transforms.fixtures import load_fixture_rep

    W = load_fixture_rep("skew")
    return W, scan_weights(W, (2, 2), ScanConfig(n_max=4))


def test_weight_box():
    weights = list(weight_box((1, 2)))
    assert len(weights) == 15
    assert weights[0] == (-1, -2)
    assert weights[-1] == (1, 2)


def test_skew_triple_is_not_saturated(skew_scan):
    W, results = skew_scan
    certificates = [r.certificate for r in results if r.certificate is not None]
    assert [c.weight for c in certificates] == [(1, -1)]
    certificate = certificates[0]
    assert certificate.multiple == 2
    assert certificate.proof is ProofTag.ZERO_SYMBOLIC_DETERMINANT
    assert verify_certificate(W, certificate).passed


def test_scan_outcomes_cover_the_box(skew_scan):
    _, results = skew_scan
    assert len(results) == 25
    by_weight = {r.weight: r for r in results}
    assert by_weight[(2, -2)].verdict.is_member
    assert by_weight[(-1, 1)].verdict.proof is ProofTag.NEGATIVE_ALPHA


def test_certificate_text_round_trip(skew_scan):
    W, results = skew_scan
    certificate = next(r.certificate for r in results if r.certificate is not None)
    text = format_certificate(certificate, "kron3.quiver")
    assert text.startswith("certificate\nweight 1,-1\nmultiple 2\nwitness\nrep kron3.quiver dim 2,4\n")
    assert text.rstrip().endswith("proof zero-symbolic-determinant\nend")
    (parsed,) = parse_certificates(text, W.quiver)
    assert (parsed.weight, parsed.multiple, parsed.proof) == ((1, -1), 2, ProofTag.ZERO_SYMBOLIC_DETERMINANT)
    assert parsed.witness.dims == certificate.witness.dims
    assert verify_certificate(W, parsed).passed


def test_tampered_certificate_is_rejected(skew_scan):
    W, results = skew_scan
    certificate = next(r.certificate for r in results if r.certificate is not None)
    tampered = SaturationCertificate(weight=(1, -1), multiple=2, witness=from_dims(W.quiver, (2, 4)),
                                     proof=certificate.proof)
    check = verify_certificate(W, tampered)
    assert not check.passed
    assert "witness determinant vanishes" in check.problems


def test_unclosed_certificate_block(kron3):
    with pytest.raises(ParseError):
        parse_certificates("certificate\nweight 1,-1\n", kron3)


def test_euclidean_scan_has_no_certificates(theta2):
    W = random_representation(theta2, (2, 2), seed=3, bound=2)
    assert saturation_scan(W, (2, 2), n_max=3) == []


def test_zero_representation_scan(theta2):
    results = scan_weights(zero_representation(theta2), (1, 1), ScanConfig(n_max=2))
    assert all(r.verdict.is_member for r in results)
    assert all(r.certificate is None for r in results)


def test_uncertifiable_weights_can_be_skipped(skew_rep):
    config = ScanConfig(n_max=2, trials=1, sample_uncertified=False)
    results = {r.weight: r for r in scan_weights(skew_rep, (2, 2), config)}
    assert results[(2, -2)].verdict is None
    assert results[(2, -2)].skipped == "symbolic limit exceeded"


def test_scan_config_validation(kron3):
    with pytest.raises(ValidationError):
        ScanConfig(n_max=1)
    with pytest.raises(ValueError):
        SaturationCertificate(weight=(1, -1), multiple=2, witness=from_dims(kron3, (2, 4)),
                              proof=ProofTag.INFEASIBLE_FLOW)
