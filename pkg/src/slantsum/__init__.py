"""Stance-weighted extractive summarization of news articles.

Train a sentence classifier on a two-class corpus (TF-IDF n-grams, SMOTE
balancing, random forest), then build summaries that lean toward either
class, suggest hashtag keywords, explain per-sentence predictions, and
score summaries for context drift.
"""

from .analysis import DriftReport, Explanation, drift_score, explain
from .balance import SmoteConfig, balance_classes, smote
from .config import AppConfig, ConfigError, load_config
from .corpus import (Article, Dataset, DatasetError, LabeledSentence,
                     build_dataset, fetch_article, load_dataset, read_article,
                     read_corpus_dir, save_dataset, split_sentences,
                     strip_markup)
from .forest import ForestConfig, ForestModel, feature_importance, predict, predict_proba, train
from .keywords import KeywordScore, expected_counts, recommend
from .pipeline import (EvalReport, FittedPipeline, ModelArchiveError,
                       evaluate, fit_pipeline, load_pipeline, save_pipeline)
from .summarizer import (ScoredSentence, Summary, SummaryConfig, base_score,
                         lwf, summarize, weighted_score)
from .vectorizer import SparseVector, VectorizerConfig, Vocabulary, ngrams, tokenize

__version__ = "0.1.0"

__all__ = [
    "AppConfig", "Article", "ConfigError", "Dataset", "DatasetError",
    "DriftReport", "EvalReport", "Explanation", "FittedPipeline",
    "ForestConfig", "ForestModel", "KeywordScore", "LabeledSentence",
    "ModelArchiveError", "ScoredSentence", "SmoteConfig", "SparseVector",
    "Summary", "SummaryConfig", "VectorizerConfig", "Vocabulary",
    "balance_classes", "base_score", "build_dataset", "drift_score",
    "evaluate", "expected_counts", "explain", "feature_importance", "fetch_article",
    "fit_pipeline", "load_config", "load_dataset", "load_pipeline", "lwf",
    "ngrams", "predict", "predict_proba", "read_article", "read_corpus_dir",
    "recommend", "save_dataset", "save_pipeline", "smote", "split_sentences",
    "strip_markup", "summarize", "tokenize", "train", "weighted_score",
]
