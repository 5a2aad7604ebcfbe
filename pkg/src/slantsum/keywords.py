"""Hashtag keyword suggestion from expected-vs-observed class word counts.

A word scores high for a class when it occurs in the article and appears in
that class's training text more often than a class-independent contingency
model expects. The top suggestions are meant as hashtag raw material.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import Article
from .pipeline import FittedPipeline
from .vectorizer import tokenize


@dataclass
class KeywordScore:
    word: str
    a: int            # occurrences in the input article
    observed: int     # occurrences in the target class's training text
    expected: float   # contingency-table expected count
    d: float          # observed - expected
    score: float      # a * d (times unigram importance when enabled)


def expected_counts(stats: dict[str, dict[str, int]]) -> dict[str, dict[str, float]]:
    """Expected per-class count for every training word.

    With n total word occurrences, word share p_i and class share p_j, the
    expected count is n * p_i * p_j. Summing over words recovers each
    class's total.
    """
    class_totals = {lab: sum(words.values()) for lab, words in stats.items()}
    n = sum(class_totals.values())
    if n == 0:
        raise ValueError("empty class word stats")

    word_totals: dict[str, int] = {}
    for words in stats.values():
        for w, c in words.items():
            word_totals[w] = word_totals.get(w, 0) + c

    out: dict[str, dict[str, float]] = {}
    for w, total in word_totals.items():
        p_i = total / n
        out[w] = {lab: n * p_i * (class_totals[lab] / n) for lab in stats}
    return out


def recommend(article: Article, pipeline: FittedPipeline, target_class: str,
              limit: int = 15, use_feature_importance: bool | None = None) -> list[KeywordScore]:
    """Top keyword suggestions for steering an article toward a class.

    Candidates are the article's unigrams after stopword removal. Words the
    training corpus never saw have d = 0; words with non-positive scores are
    dropped even if that leaves fewer than `limit` results. Ties are broken
    alphabetically.
    """
    idx = pipeline.class_index(target_class)
    target = pipeline.classes[idx]
    if use_feature_importance is None:
        use_feature_importance = pipeline.config.keywords.use_feature_importance

    v = pipeline.config.vectorizer
    tokens = tokenize(article.body, v.min_token_len, v.stopwords())
    if not tokens:
        return []
    article_counts: dict[str, int] = {}
    for t in tokens:
        article_counts[t] = article_counts.get(t, 0) + 1

    expected = expected_counts(pipeline.class_word_stats)
    target_stats = pipeline.class_word_stats[target]
    importances = pipeline.forest.importances

    scored = []
    for word, a in article_counts.items():
        observed = target_stats.get(word, 0)
        e = expected.get(word, {}).get(target, 0.0)
        d = observed - e
        score = a * d
        if use_feature_importance:
            feat = pipeline.vocabulary.terms.get(word)
            score *= float(importances[feat]) if feat is not None else 0.0
        if score > 0.0:
            scored.append(KeywordScore(word=word, a=a, observed=observed,
                                       expected=e, d=d, score=score))
    scored.sort(key=lambda k: (-k.score, k.word))
    return scored[:limit]
