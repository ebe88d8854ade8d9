import os
import sys

import pytest


def pytest_sessionstart(session):
    # Ensure project root is on sys.path so the feature packages resolve
    project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
    if project_root not in sys.path:
        sys.path.insert(0, project_root)


FIXTURES = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "fixtures"))


@pytest.fixture
def fixtures_path():
    return FIXTURES


@pytest.fixture
def kron3():
    from quivers.quiver_model import kronecker

    return kronecker(3)


@pytest.fixture
def theta2():
    from quivers.quiver_model import kronecker

    return kronecker(2)


@pytest.fixture
def skew_rep():
    from transforms.fixtures import load_fixture_rep

    return load_fixture_rep("skew")


@pytest.fixture
def zwara_rep():
    from transforms.fixtures import load_fixture_rep

    return load_fixture_rep("zwara")


@pytest.fixture
def small_samples(monkeypatch):
    """Shrink the verification sample sizes so the suite stays quick."""
    from settings.config import settings

    for name, value in {
        "VERIFY_TAME_SAMPLES": 1,
        "VERIFY_TAME_MAX_DIM": 2,
        "VERIFY_TAME_BOX": 2,
        "VERIFY_EULER_PAIRS": 10,
        "VERIFY_REFLECTION_PAIRS": 4,
        "VERIFY_ROUND_TRIPS": 3,
        "VERIFY_THIN_QUIVERS": 2,
        "VERIFY_THIN_REPS": 2,
        "VERIFY_THIN_BOX": 1,
        "VERIFY_SHRINK_INSTANCES": 2,
        "VERIFY_SHRINK_BOX": 1,
    }.items():
        monkeypatch.setattr(settings, name, value)
    return settings
