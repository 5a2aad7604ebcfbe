"""TF-IDF sentence vectorization over a word n-gram vocabulary.

Tokens are lowercase alphanumeric runs; unigrams through trigrams form the
feature space after English stopword removal. Weighting is raw term count
times smoothed idf, L2-normalized per sentence.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np
from scipy import sparse

_TOKEN_RE = re.compile(r"[a-z0-9]+")


def _load_stopwords(path: str | Path | None = None) -> frozenset[str]:
    if path is None:
        data = resources.files("slantsum.data").joinpath("stopwords.txt").read_text("utf-8")
    else:
        data = Path(path).read_text("utf-8")
    return frozenset(w.strip() for w in data.splitlines() if w.strip())


DEFAULT_STOPWORDS = _load_stopwords()


@dataclass(frozen=True)
class VectorizerConfig:
    ngram_min: int = 1
    ngram_max: int = 3
    min_token_len: int = 2
    keep_stopwords_in_ngrams: bool = False
    stopword_path: str | None = None
    # explicit word list, used by model archives so a custom stopword file
    # does not have to exist at load time; wins over stopword_path
    stopword_words: tuple[str, ...] | None = None

    def stopwords(self) -> frozenset[str]:
        if self.stopword_words is not None:
            return frozenset(self.stopword_words)
        if self.stopword_path is None:
            return DEFAULT_STOPWORDS
        return _load_stopwords(self.stopword_path)


def tokenize(text: str, min_token_len: int = 2,
             stopwords: frozenset[str] = DEFAULT_STOPWORDS) -> list[str]:
    """Lowercase alphanumeric tokens, short tokens and stopwords removed."""
    runs = _TOKEN_RE.findall(text.lower())
    return [t for t in runs if len(t) >= min_token_len and t not in stopwords]


def raw_tokens(text: str, min_token_len: int = 2) -> list[str]:
    """Like tokenize but with stopwords retained."""
    runs = _TOKEN_RE.findall(text.lower())
    return [t for t in runs if len(t) >= min_token_len]


def ngrams(tokens: list[str], n_min: int = 1, n_max: int = 3) -> list[str]:
    """All contiguous n-grams for n in [n_min, n_max], space-joined.

    Output lists every size-n gram in token order before moving to n+1,
    e.g. [a, b, c] -> [a, b, c, "a b", "b c", "a b c"].
    """
    if not 1 <= n_min <= n_max:
        raise ValueError(f"need 1 <= n_min <= n_max, got ({n_min}, {n_max})")
    out = []
    for n in range(n_min, n_max + 1):
        for i in range(len(tokens) - n + 1):
            out.append(" ".join(tokens[i:i + n]))
    return out


def analyze(text: str, cfg: VectorizerConfig = VectorizerConfig()) -> list[str]:
    """Feature stream for one sentence under the given config.

    Unigrams always exclude stopwords. Higher-order grams are built over the
    stopword-filtered stream by default; with keep_stopwords_in_ngrams they
    are built over the unfiltered token stream instead.
    """
    stops = cfg.stopwords()
    raw = raw_tokens(text, cfg.min_token_len)
    unigrams = [t for t in raw if t not in stops]
    gram_stream = raw if cfg.keep_stopwords_in_ngrams else unigrams

    out = []
    if cfg.ngram_min == 1:
        out.extend(unigrams)
    lo = max(cfg.ngram_min, 2)
    if lo <= cfg.ngram_max:
        out.extend(ngrams(gram_stream, lo, cfg.ngram_max))
    return out


class SparseVector:
    """Sparse feature vector: parallel index/value arrays, sorted, no zeros."""

    __slots__ = ("indices", "values")

    def __init__(self, indices: np.ndarray, values: np.ndarray):
        self.indices = np.asarray(indices, dtype=np.int64)
        self.values = np.asarray(values, dtype=np.float64)

    @classmethod
    def from_entries(cls, entries) -> "SparseVector":
        """Canonicalize arbitrary (index, value) pairs: sort, merge, drop zeros."""
        acc: dict[int, float] = {}
        for i, v in entries:
            acc[int(i)] = acc.get(int(i), 0.0) + float(v)
        idx = sorted(i for i, v in acc.items() if v != 0.0)
        return cls(np.array(idx, dtype=np.int64),
                   np.array([acc[i] for i in idx], dtype=np.float64))

    @property
    def entries(self) -> list[tuple[int, float]]:
        return list(zip(self.indices.tolist(), self.values.tolist()))

    def norm(self) -> float:
        return float(np.sqrt(np.sum(self.values ** 2)))

    def value_at(self, feature: int) -> float:
        pos = np.searchsorted(self.indices, feature)
        if pos < len(self.indices) and self.indices[pos] == feature:
            return float(self.values[pos])
        return 0.0

    def __len__(self) -> int:
        return len(self.indices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseVector):
            return NotImplemented
        return (np.array_equal(self.indices, other.indices)
                and np.array_equal(self.values, other.values))

    def __repr__(self) -> str:
        return f"SparseVector({self.entries!r})"


@dataclass
class Vocabulary:
    """Fitted n-gram feature space with idf weights.

    terms maps each n-gram to a dense index assigned in lexicographic order;
    document_frequency counts fitted sentences containing the term at least
    once; idf(t) = ln((1 + n_documents) / (1 + df(t))) + 1.
    """

    terms: dict[str, int]
    document_frequency: np.ndarray
    n_documents: int
    idf: np.ndarray
    config: VectorizerConfig = field(default_factory=VectorizerConfig)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def term_list(self) -> list[str]:
        """Terms in index order."""
        out = [""] * len(self.terms)
        for t, i in self.terms.items():
            out[i] = t
        return out


def fit(sentences: list[str], cfg: VectorizerConfig = VectorizerConfig()) -> Vocabulary:
    """Build the vocabulary over every n-gram that appears in any sentence."""
    if not sentences:
        raise ValueError("at least one sentence required")
    df: dict[str, int] = {}
    for text in sentences:
        for term in set(analyze(text, cfg)):
            df[term] = df.get(term, 0) + 1
    if not df:
        raise ValueError("empty vocabulary: no sentence produced any token")

    terms = {t: i for i, t in enumerate(sorted(df))}
    n = len(sentences)
    df_arr = np.zeros(len(terms), dtype=np.int64)
    for t, i in terms.items():
        df_arr[i] = df[t]
    idf = np.log((1.0 + n) / (1.0 + df_arr)) + 1.0
    assert np.all(idf > 0)
    return Vocabulary(terms=terms, document_frequency=df_arr, n_documents=n, idf=idf, config=cfg)


def transform(vocab: Vocabulary, sentence: str) -> SparseVector:
    """TF-IDF vector of one sentence: count * idf per known term, L2-normalized."""
    counts: dict[int, int] = {}
    for term in analyze(sentence, vocab.config):
        idx = vocab.terms.get(term)
        if idx is not None:
            counts[idx] = counts.get(idx, 0) + 1
    if not counts:
        return SparseVector(np.empty(0, dtype=np.int64), np.empty(0, dtype=np.float64))
    indices = np.array(sorted(counts), dtype=np.int64)
    values = np.array([counts[i] for i in indices], dtype=np.float64) * vocab.idf[indices]
    values /= math.sqrt(float(np.sum(values ** 2)))
    return SparseVector(indices, values)


def transform_many(vocab: Vocabulary, sentences: list[str]) -> list[SparseVector]:
    return [transform(vocab, s) for s in sentences]


def as_csr(vectors: list[SparseVector], n_features: int) -> sparse.csr_matrix:
    """Stack sparse vectors into a scipy CSR matrix (rows in input order)."""
    indptr = np.zeros(len(vectors) + 1, dtype=np.int64)
    for i, v in enumerate(vectors):
        indptr[i + 1] = indptr[i] + len(v.indices)
    indices = (np.concatenate([v.indices for v in vectors])
               if vectors else np.empty(0, dtype=np.int64))
    data = (np.concatenate([v.values for v in vectors])
            if vectors else np.empty(0, dtype=np.float64))
    return sparse.csr_matrix((data, indices, indptr), shape=(len(vectors), n_features))
