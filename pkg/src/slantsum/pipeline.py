"""Fit/evaluate the vectorize -> balance -> forest pipeline and persist it.

A fitted pipeline bundles the vocabulary, the forest, and per-class word
counts from the raw training sentences (the keyword recommender's input),
all serialized into one versioned JSON archive with deterministic bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import forest as forest_mod
from . import vectorizer as vec_mod
from .balance import balance_classes
from .config import AppConfig, config_from_dict, config_to_dict
from .corpus import Dataset
from .forest import DecisionTree, ForestModel
from .vectorizer import SparseVector, Vocabulary, tokenize

ARCHIVE_VERSION = 1


class ModelArchiveError(ValueError):
    """Raised when a model archive cannot be read back."""


@dataclass
class FittedPipeline:
    vocabulary: Vocabulary
    forest: ForestModel
    classes: tuple[str, str]
    class_word_stats: dict[str, dict[str, int]]
    config: AppConfig

    @property
    def seed(self) -> int:
        return self.config.seed

    def transform(self, text: str) -> SparseVector:
        return vec_mod.transform(self.vocabulary, text)

    def proba_vector(self, x: SparseVector) -> np.ndarray:
        return forest_mod.predict_proba(self.forest, x)

    def proba(self, text: str) -> np.ndarray:
        return self.proba_vector(self.transform(text))

    def proba_of(self, text: str, class_name: str) -> float:
        return float(self.proba(text)[self.class_index(class_name)])

    def predict(self, text: str) -> str:
        return forest_mod.predict(self.forest, self.transform(text))

    def class_index(self, class_name: str) -> int:
        if class_name not in self.classes:
            raise ValueError(f"unknown class {class_name!r}, model has {self.classes}")
        return self.classes.index(class_name)


def _word_stats(dataset: Dataset, cfg: AppConfig) -> dict[str, dict[str, int]]:
    """Per-class unigram occurrence counts over the raw training sentences."""
    v = cfg.vectorizer
    stops = v.stopwords()
    stats: dict[str, dict[str, int]] = {lab: {} for lab in dataset.labels}
    for s in dataset.sentences:
        bucket = stats[s.label]
        for tok in tokenize(s.text, v.min_token_len, stops):
            bucket[tok] = bucket.get(tok, 0) + 1
    return stats


def fit_pipeline(dataset: Dataset, cfg: AppConfig = AppConfig()) -> FittedPipeline:
    """Vectorize all sentences, balance the classes, train the forest."""
    texts = [s.text for s in dataset.sentences]
    vocab = vec_mod.fit(texts, cfg.vectorizer)
    vectors = [vec_mod.transform(vocab, t) for t in texts]

    by_class: dict[str, list[SparseVector]] = {lab: [] for lab in dataset.labels}
    for s, v in zip(dataset.sentences, vectors):
        by_class[s.label].append(v)
    for lab in dataset.labels:
        if not by_class[lab]:
            raise ValueError(f"class {lab!r} has no sentences")

    if cfg.smote.enabled:
        by_class = balance_classes(by_class, cfg.smote_config())

    X: list[SparseVector] = []
    y: list[str] = []
    for lab in dataset.labels:
        X.extend(by_class[lab])
        y.extend([lab] * len(by_class[lab]))

    model = forest_mod.train(X, y, cfg.forest_config(),
                             n_features=len(vocab), classes=dataset.labels)
    return FittedPipeline(vocabulary=vocab, forest=model, classes=dataset.labels,
                          class_word_stats=_word_stats(dataset, cfg), config=cfg)


@dataclass
class ClassMetrics:
    samples: int
    precision: float
    recall: float


@dataclass
class EvalReport:
    per_class: dict[str, ClassMetrics]
    samples: int
    precision: float  # macro average
    recall: float     # macro average
    accuracy: float
    confusion: dict[str, dict[str, int]] = field(default_factory=dict)


def split_dataset(dataset: Dataset, test_fraction: float, seed: int) -> tuple[Dataset, Dataset]:
    """Stratified seeded train/test split preserving dataset order."""
    if not 0.0 < test_fraction < 1.0:
        raise ValueError("test_fraction must be in (0, 1)")
    rng = np.random.default_rng(seed)
    test_idx: set[int] = set()
    for lab in dataset.labels:
        idx = [i for i, s in enumerate(dataset.sentences) if s.label == lab]
        n_test = int(len(idx) * test_fraction + 0.5)
        if n_test == 0 or n_test == len(idx):
            raise ValueError(
                f"class {lab!r} would get {n_test} of its {len(idx)} sentences as test data; "
                "use a larger dataset or adjust test_fraction")
        picks = rng.permutation(len(idx))[:n_test]
        test_idx.update(idx[p] for p in picks)
    train_s = [s for i, s in enumerate(dataset.sentences) if i not in test_idx]
    test_s = [s for i, s in enumerate(dataset.sentences) if i in test_idx]
    return Dataset(dataset.labels, train_s), Dataset(dataset.labels, test_s)


def evaluate(dataset: Dataset, cfg: AppConfig = AppConfig(),
             test_fraction: float = 0.10, seed: int | None = None) -> EvalReport:
    """Hold out a stratified test split, fit on the rest, report metrics.

    Per-class precision and recall come from the confusion matrix; overall
    precision/recall are macro averages across the two classes.
    """
    if seed is None:
        seed = cfg.seed
    train_ds, test_ds = split_dataset(dataset, test_fraction, seed)
    fitted = fit_pipeline(train_ds, cfg)

    labels = dataset.labels
    confusion = {actual: {pred: 0 for pred in labels} for actual in labels}
    for s in test_ds.sentences:
        confusion[s.label][fitted.predict(s.text)] += 1

    per_class = {}
    for lab in labels:
        actual = sum(confusion[lab].values())
        predicted = sum(confusion[a][lab] for a in labels)
        tp = confusion[lab][lab]
        per_class[lab] = ClassMetrics(
            samples=actual,
            precision=tp / predicted if predicted else 0.0,
            recall=tp / actual if actual else 0.0,
        )
    total = len(test_ds.sentences)
    correct = sum(confusion[lab][lab] for lab in labels)
    return EvalReport(
        per_class=per_class,
        samples=total,
        precision=sum(m.precision for m in per_class.values()) / len(labels),
        recall=sum(m.recall for m in per_class.values()) / len(labels),
        accuracy=correct / total,
        confusion=confusion,
    )


# ---------------------------------------------------------------------------
# archive serialization

def _tree_to_nodes(tree: DecisionTree) -> list[list]:
    nodes = []
    for i in range(tree.n_nodes):
        if tree.feature[i] >= 0:
            nodes.append(["n", int(tree.feature[i]), float(tree.threshold[i]),
                          int(tree.left[i]), int(tree.right[i])])
        else:
            nodes.append(["l", int(tree.counts[i][0]), int(tree.counts[i][1])])
    return nodes


def _tree_from_nodes(nodes: list, n_features: int) -> DecisionTree:
    n = len(nodes)
    if n == 0:
        raise ValueError("tree has no nodes")
    feature = np.full(n, -1, dtype=np.int64)
    threshold = np.zeros(n, dtype=np.float64)
    left = np.full(n, -1, dtype=np.int64)
    right = np.full(n, -1, dtype=np.int64)
    counts = np.zeros((n, 2), dtype=np.int64)
    for i, node in enumerate(nodes):
        tag = node[0]
        if tag == "n":
            _, f, thr, l, r = node
            # preorder children sit strictly after their parent, which also
            # rules out cycles and validates the count propagation below
            if not (0 <= f < n_features and i < l < n and i < r < n):
                raise ValueError(f"node {i} has out-of-range links")
            feature[i], threshold[i], left[i], right[i] = f, thr, l, r
        elif tag == "l":
            _, c0, c1 = node
            if c0 + c1 < 1:
                raise ValueError(f"leaf {i} has empty class counts")
            counts[i] = (c0, c1)
        else:
            raise ValueError(f"node {i} has unknown tag {tag!r}")
    # leaves carry the counts; propagate sums upward so internal nodes have
    # them too (the reverse of preorder visits children before parents)
    for i in range(n - 1, -1, -1):
        if feature[i] >= 0:
            counts[i] = counts[left[i]] + counts[right[i]]
    return DecisionTree(feature=feature, threshold=threshold, left=left,
                        right=right, counts=counts)


def save_pipeline(p: FittedPipeline, path: str | Path) -> None:
    """Write the archive; identical pipelines produce identical bytes."""
    doc = {
        "format_version": ARCHIVE_VERSION,
        "classes": list(p.classes),
        "seed": p.seed,
        "config": config_to_dict(p.config),
        "vocabulary": {
            "terms": p.vocabulary.term_list,
            "df": p.vocabulary.document_frequency.tolist(),
            "n_documents": p.vocabulary.n_documents,
        },
        "forest": {"trees": [_tree_to_nodes(t) for t in p.forest.trees]},
        "class_word_stats": {lab: dict(sorted(words.items()))
                             for lab, words in p.class_word_stats.items()},
    }
    Path(path).write_text(
        json.dumps(doc, ensure_ascii=False, sort_keys=True, separators=(",", ":")) + "\n",
        "utf-8")


def load_pipeline(path: str | Path) -> FittedPipeline:
    """Read an archive written by save_pipeline; field-for-field inverse."""
    try:
        doc = json.loads(Path(path).read_text("utf-8"))
    except json.JSONDecodeError as e:
        raise ModelArchiveError(f"model archive is truncated or not valid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise ModelArchiveError("model archive must be a JSON object")

    version = doc.get("format_version")
    if version != ARCHIVE_VERSION:
        raise ModelArchiveError(
            f"archive format version {version!r} not supported, expected {ARCHIVE_VERSION}")

    try:
        classes = tuple(doc["classes"])
        if len(classes) != 2:
            raise ValueError("need exactly 2 classes")
    except (KeyError, TypeError, ValueError) as e:
        raise ModelArchiveError(f"classes section invalid: {e}") from e

    try:
        cfg = config_from_dict(doc["config"])
    except (KeyError, ValueError) as e:
        raise ModelArchiveError(f"config section invalid: {e}") from e

    try:
        vsec = doc["vocabulary"]
        terms = {t: i for i, t in enumerate(vsec["terms"])}
        df = np.asarray(vsec["df"], dtype=np.int64)
        n_documents = int(vsec["n_documents"])
        if len(df) != len(terms):
            raise ValueError("terms and df lengths differ")
        idf = np.log((1.0 + n_documents) / (1.0 + df)) + 1.0
        vocab = Vocabulary(terms=terms, document_frequency=df,
                           n_documents=n_documents, idf=idf, config=cfg.vectorizer)
    except (KeyError, TypeError, ValueError) as e:
        raise ModelArchiveError(f"vocabulary section invalid: {e}") from e

    try:
        trees = [_tree_from_nodes(nodes, len(terms)) for nodes in doc["forest"]["trees"]]
        if not trees:
            raise ValueError("no trees")
    except (KeyError, TypeError, ValueError, IndexError) as e:
        raise ModelArchiveError(f"forest section invalid: {e}") from e

    try:
        stats = {lab: {str(w): int(c) for w, c in words.items()}
                 for lab, words in doc["class_word_stats"].items()}
    except (KeyError, TypeError, AttributeError, ValueError) as e:
        raise ModelArchiveError(f"class_word_stats section invalid: {e}") from e

    model = ForestModel(trees=trees, n_features=len(terms), classes=classes,
                        config=cfg.forest_config(),
                        importances=forest_mod.compute_importances(trees, len(terms)))
    return FittedPipeline(vocabulary=vocab, forest=model, classes=classes,
                          class_word_stats=stats, config=cfg)
