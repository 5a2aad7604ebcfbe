"""Synthetic corpus generators shared by the test suite.

Two disjoint marker vocabularies stand in for the two editorial stances;
optional shared filler words blur the boundary so classifiers can actually
make mistakes.
"""

from __future__ import annotations

import numpy as np

from slantsum import Article, Dataset, build_dataset

MARKERS_A = [f"alpha{i:02d}" for i in range(30)]
MARKERS_B = [f"beta{i:02d}" for i in range(30)]
SHARED = [f"common{i:02d}" for i in range(40)]


def _sentence(rng, markers, noise):
    n_words = int(rng.integers(6, 11))
    words = []
    for _ in range(n_words):
        pool = SHARED if (noise > 0 and rng.random() < noise) else markers
        words.append(pool[int(rng.integers(0, len(pool)))])
    return " ".join(words).capitalize() + "."


def make_article(rng, article_id, label, markers, noise=0.0,
                 n_sentences=None) -> Article:
    if n_sentences is None:
        n_sentences = int(rng.integers(8, 13))
    body = " ".join(_sentence(rng, markers, noise) for _ in range(n_sentences))
    return Article(article_id, body, source_label=label)


def marker_corpus(n_articles=200, fraction_a=0.7, noise=0.0, noise_b=None,
                  seed=42, labels=("one", "two")) -> Dataset:
    """Two-class corpus of marker-word articles, class sizes split by fraction_a.

    noise is the per-word probability of drawing from the shared pool
    instead of the class markers; noise_b overrides it for the second class.
    """
    rng = np.random.default_rng(seed)
    if noise_b is None:
        noise_b = noise
    n_a = int(round(n_articles * fraction_a))
    articles = [make_article(rng, f"{labels[0]}-{i:03d}", labels[0], MARKERS_A, noise)
                for i in range(n_a)]
    articles += [make_article(rng, f"{labels[1]}-{i:03d}", labels[1], MARKERS_B, noise_b)
                 for i in range(n_articles - n_a)]
    return build_dataset(articles)


def mixed_article(rng, article_id, n_sentences=10, noise=0.0) -> Article:
    """Article whose sentences alternate between the two marker vocabularies."""
    sents = []
    for j in range(n_sentences):
        markers = MARKERS_A if j % 2 == 0 else MARKERS_B
        sents.append(_sentence(rng, markers, noise))
    return Article(article_id, " ".join(sents))
