"""Stance-weighted extractive summarization.

Each sentence scores the sum of article-wide frequencies of its words,
weighted by the classifier's target-class probability raised to a steering
exponent and by a quadratic length-weight that discounts very long
sentences. The top-scoring sentences are emitted verbatim, in document
order, within a character budget.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .corpus import Article, split_sentences

if TYPE_CHECKING:
    from .pipeline import FittedPipeline

_WORD_RE = re.compile(r"[a-z0-9]+")

# length-weight defaults: quadratic opens downward, flat 1.0 through l=14,
# decays to 0 at l=48
DEFAULT_LWF_A = -1.0 / 2 ** 11
DEFAULT_LWF_B = 0.0
DEFAULT_LWF_C = 1.1


@dataclass(frozen=True)
class SummaryConfig:
    target_class: str
    exponent_x: float = 2.0
    lwf_a: float = DEFAULT_LWF_A
    lwf_b: float = DEFAULT_LWF_B
    lwf_c: float = DEFAULT_LWF_C
    max_chars: int = 1000
    min_chars: int = 280  # advisory only: reported, never enforced

    def __post_init__(self):
        if self.exponent_x < 0:
            raise ValueError("exponent_x must be >= 0")
        if self.max_chars < self.min_chars:
            raise ValueError("max_chars must be >= min_chars")
        if self.max_chars < 1:
            raise ValueError("max_chars must be positive")


@dataclass
class ScoredSentence:
    position: int
    text: str
    word_count: int
    base_score: float
    class_prob: float
    lwf: float
    weighted: float


@dataclass
class Summary:
    sentences: list[ScoredSentence]  # selected, in document order
    char_count: int

    @property
    def text(self) -> str:
        return " ".join(s.text for s in self.sentences)

    @property
    def positions(self) -> list[int]:
        return [s.position for s in self.sentences]


def _words(text: str) -> list[str]:
    return _WORD_RE.findall(text.lower())


def base_score(article_sentences: list[str], sentence: str) -> float:
    """Sum of article-wide word frequencies over the sentence's words.

    The frequency table covers every word in the article (stopwords
    included); repeated words in the sentence count once per occurrence.
    """
    freq: dict[str, int] = {}
    for s in article_sentences:
        for w in _words(s):
            freq[w] = freq.get(w, 0) + 1
    return float(sum(freq.get(w, 0) for w in _words(sentence)))


def lwf(l: int, a: float = DEFAULT_LWF_A, b: float = DEFAULT_LWF_B,
        c: float = DEFAULT_LWF_C) -> float:
    """Quadratic length weight a*l^2 + b*l + c, clamped to [0, 1]."""
    q = a * l * l + b * l + c
    if q >= 1.0:
        return 1.0
    if q > 0.0:
        return q
    return 0.0


def weighted_score(base: float, p1: float, x: float, l: int,
                   cfg: SummaryConfig) -> float:
    """p1^x * base * lwf(l); 0^0 is taken as 1 so x=0 disables steering."""
    return p1 ** x * base * lwf(l, cfg.lwf_a, cfg.lwf_b, cfg.lwf_c)


def score_sentences(sentences: list[str], class_probs: list[float],
                    cfg: SummaryConfig) -> list[ScoredSentence]:
    """Per-sentence diagnostics for an article given its class probabilities."""
    freq: dict[str, int] = {}
    for s in sentences:
        for w in _words(s):
            freq[w] = freq.get(w, 0) + 1

    scored = []
    for pos, (text, p1) in enumerate(zip(sentences, class_probs)):
        l = len(text.split())
        base = float(sum(freq.get(w, 0) for w in _words(text)))
        scored.append(ScoredSentence(
            position=pos, text=text, word_count=l, base_score=base,
            class_prob=p1, lwf=lwf(l, cfg.lwf_a, cfg.lwf_b, cfg.lwf_c),
            weighted=weighted_score(base, p1, cfg.exponent_x, l, cfg),
        ))
    return scored


def select(scored: list[ScoredSentence], cfg: SummaryConfig) -> Summary:
    """Greedy pick by weighted score into the character budget.

    Candidates are visited in (weighted desc, position asc) order and taken
    while they fit in max_chars, counting one separator space per join; the
    top-ranked sentence is always taken even when it alone exceeds the
    budget. Output keeps document order.
    """
    ranked = sorted(scored, key=lambda s: (-s.weighted, s.position))
    taken: list[ScoredSentence] = []
    used = 0
    for s in ranked:
        extra = len(s.text) + (1 if taken else 0)
        if not taken or used + extra <= cfg.max_chars:
            taken.append(s)
            used += extra
    taken.sort(key=lambda s: s.position)
    return Summary(sentences=taken, char_count=used)


def summarize(article: Article, pipeline: "FittedPipeline",
              cfg: SummaryConfig) -> Summary:
    """Extractive summary of one article steered toward cfg.target_class."""
    sentences = split_sentences(article.body)
    if not sentences:
        raise ValueError(f"article {article.article_id!r} has no sentences")
    probs = [pipeline.proba_of(s, cfg.target_class) for s in sentences]
    return select(score_sentences(sentences, probs, cfg), cfg)
