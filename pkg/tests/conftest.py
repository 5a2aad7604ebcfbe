import numpy as np
import pytest

from slantsum import AppConfig, fit_pipeline
from synthetic import marker_corpus


@pytest.fixture(scope="session")
def small_corpus():
    """Separable 50/50 marker corpus, ~400 sentences."""
    return marker_corpus(n_articles=40, fraction_a=0.5, noise=0.0, seed=3)


@pytest.fixture(scope="session")
def small_pipeline(small_corpus):
    return fit_pipeline(small_corpus, AppConfig(seed=3))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
