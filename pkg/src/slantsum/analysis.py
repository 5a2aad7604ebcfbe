"""Model inspection: per-feature ablation explanations and drift checking.

The explanation weights come from zeroing one feature of the sentence
vector at a time (renormalizing the rest) and measuring the probability
change; deterministic, no sampling. The drift score is the defensive check:
how far a summary's mean class probability moved from its article's.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .corpus import Article, split_sentences
from .pipeline import FittedPipeline
from .summarizer import Summary
from .vectorizer import SparseVector


@dataclass
class Explanation:
    sentence: str
    target_class: str
    predicted_prob: float
    contributions: list[tuple[str, float]]  # (feature, weight), |weight| desc


@dataclass
class DriftReport:
    target_class: str
    article_mean_prob: float
    summary_mean_prob: float
    drift: float
    article_probs: list[float]
    summary_probs: list[float]


def _drop_entry(x: SparseVector, pos: int) -> SparseVector:
    """Copy of x with entry at position pos removed and the rest renormalized."""
    idx = np.delete(x.indices, pos)
    vals = np.delete(x.values, pos)
    if len(vals):
        vals = vals / math.sqrt(float(np.sum(vals ** 2)))
    return SparseVector(idx, vals)


def explain(sentence: str, pipeline: FittedPipeline, target_class: str) -> Explanation:
    """Ablation importance of each feature present in the sentence.

    weight(f) = P(target | full vector) - P(target | vector with f zeroed,
    renormalized). An empty vector yields no contributions and the forest's
    prior probability.
    """
    ci = pipeline.class_index(target_class)
    x = pipeline.transform(sentence)
    predicted = float(pipeline.proba_vector(x)[ci])
    term_of = pipeline.vocabulary.term_list

    contributions = []
    for pos in range(len(x)):
        ablated_prob = float(pipeline.proba_vector(_drop_entry(x, pos))[ci])
        contributions.append((term_of[int(x.indices[pos])], predicted - ablated_prob))
    contributions.sort(key=lambda fw: (-abs(fw[1]), fw[0]))
    return Explanation(sentence=sentence, target_class=target_class,
                       predicted_prob=predicted, contributions=contributions)


def drift_score(article: Article, summary: Summary, pipeline: FittedPipeline,
                target_class: str) -> DriftReport:
    """Absolute gap between summary and article mean class probability."""
    ci = pipeline.class_index(target_class)
    sentences = split_sentences(article.body)
    if not sentences:
        raise ValueError(f"article {article.article_id!r} has no sentences")
    if not summary.sentences:
        raise ValueError("summary is empty")
    for s in summary.sentences:
        if not 0 <= s.position < len(sentences):
            raise ValueError(
                f"summary position {s.position} out of range for an article "
                f"with {len(sentences)} sentences")

    article_probs = [float(pipeline.proba(s)[ci]) for s in sentences]
    summary_probs = [article_probs[s.position] for s in summary.sentences]
    a_mean = sum(article_probs) / len(article_probs)
    s_mean = sum(summary_probs) / len(summary_probs)
    return DriftReport(target_class=target_class,
                       article_mean_prob=a_mean, summary_mean_prob=s_mean,
                       drift=abs(s_mean - a_mean),
                       article_probs=article_probs, summary_probs=summary_probs)
