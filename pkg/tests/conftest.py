import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from vocabkit import generate_fixture, load_model

import oracles

# The two standard overlapping-vocabulary fixture models: both name terms
# term_000.., so the smaller one's vocabulary is a subset of the larger's.
ALPHA = dict(seed=42, n=1000, dim=16, clusters=20)
BETA = dict(seed=7, n=800, dim=16, clusters=10)

# Smaller pair for the randomized state-machine torture tests.
MINI_A = dict(seed=3, n=160, dim=8, clusters=6)
MINI_B = dict(seed=11, n=140, dim=8, clusters=5)


@pytest.fixture(scope="session")
def fixture_dir(tmp_path_factory):
    return tmp_path_factory.mktemp("models")


@pytest.fixture(scope="session")
def model_paths(fixture_dir):
    return {
        "alpha": generate_fixture(fixture_dir / "alpha.txt", **ALPHA),
        "beta": generate_fixture(fixture_dir / "beta.txt", **BETA),
    }


@pytest.fixture(scope="session")
def registry(model_paths):
    return {mid: load_model(path, mid) for mid, path in model_paths.items()}


@pytest.fixture(scope="session")
def raw_vectors(model_paths):
    """Oracle-side parse of the same files: {model id: {term: unit vec}}."""
    return {mid: oracles.parse_model_file(path) for mid, path in model_paths.items()}


@pytest.fixture(scope="session")
def mini_registry(fixture_dir):
    paths = {
        "mini_a": generate_fixture(fixture_dir / "mini_a.txt", **MINI_A),
        "mini_b": generate_fixture(fixture_dir / "mini_b.txt", **MINI_B),
    }
    return {mid: load_model(path, mid) for mid, path in paths.items()}
