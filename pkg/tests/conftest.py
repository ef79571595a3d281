import numpy as np
import pytest

from custrank import load_paper_dataset
from custrank.normalization import as_normalized


@pytest.fixture(scope="session")
def paper():
    return load_paper_dataset()


@pytest.fixture(scope="session")
def paper_matrix(paper):
    return as_normalized(paper.matrix)


@pytest.fixture(scope="session")
def paper_weights(paper):
    """Weights behind the published weighted matrix (entropy of the printed proportion grid)."""
    from custrank.entropy import entropy_values, weights_from_entropies

    return weights_from_entropies(entropy_values(paper.appendix_b_proportions, validate=False))


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
