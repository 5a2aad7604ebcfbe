"""One config document covering every stage, with strict key checking.

Missing keys take the documented defaults; unknown keys are rejected by
name. The same structure is snapshotted into saved model archives so a
loaded model reproduces its training-time behavior (including the
effective stopword list).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields, replace
from pathlib import Path

from .balance import SmoteConfig
from .forest import ForestConfig
from .vectorizer import VectorizerConfig


class ConfigError(ValueError):
    """Raised for unknown keys or out-of-range values in a config document."""


@dataclass(frozen=True)
class SmoteSettings:
    k_neighbors: int = 5
    enabled: bool = True

    def __post_init__(self):
        if self.k_neighbors < 1:
            raise ValueError("k_neighbors must be >= 1")


@dataclass(frozen=True)
class ForestSettings:
    n_trees: int = 100
    max_features: str | int = "sqrt"
    min_leaf: int = 1
    max_depth: int | None = None

    def __post_init__(self):
        if self.n_trees < 1:
            raise ValueError("n_trees must be >= 1")
        if self.min_leaf < 1:
            raise ValueError("min_leaf must be >= 1")
        if self.max_depth is not None and self.max_depth < 1:
            raise ValueError("max_depth must be >= 1 or null")
        if isinstance(self.max_features, str) and self.max_features not in ("sqrt", "all"):
            raise ValueError("max_features must be 'sqrt', 'all', or an integer")


@dataclass(frozen=True)
class SummarySettings:
    exponent_x: float = 2.0
    lwf_a: float = -1.0 / 2 ** 11
    lwf_b: float = 0.0
    lwf_c: float = 1.1
    max_chars: int = 1000
    min_chars: int = 280

    def __post_init__(self):
        if self.exponent_x < 0:
            raise ValueError("exponent_x must be >= 0")
        if not 0 <= self.min_chars <= self.max_chars:
            raise ValueError("need 0 <= min_chars <= max_chars")


@dataclass(frozen=True)
class KeywordSettings:
    limit: int = 15
    use_feature_importance: bool = False

    def __post_init__(self):
        if self.limit < 1:
            raise ValueError("limit must be >= 1")


@dataclass(frozen=True)
class AppConfig:
    seed: int = 0
    vectorizer: VectorizerConfig = field(default_factory=VectorizerConfig)
    smote: SmoteSettings = field(default_factory=SmoteSettings)
    forest: ForestSettings = field(default_factory=ForestSettings)
    summarizer: SummarySettings = field(default_factory=SummarySettings)
    keywords: KeywordSettings = field(default_factory=KeywordSettings)

    def smote_config(self) -> SmoteConfig:
        return SmoteConfig(k_neighbors=self.smote.k_neighbors, seed=self.seed)

    def forest_config(self) -> ForestConfig:
        f = self.forest
        return ForestConfig(n_trees=f.n_trees, max_features=f.max_features,
                            min_leaf=f.min_leaf, max_depth=f.max_depth, seed=self.seed)

    def with_seed(self, seed: int) -> "AppConfig":
        return replace(self, seed=seed)


_SECTIONS = {
    "vectorizer": VectorizerConfig,
    "smote": SmoteSettings,
    "forest": ForestSettings,
    "summarizer": SummarySettings,
    "keywords": KeywordSettings,
}


def _build_section(name: str, cls, data) -> object:
    if not isinstance(data, dict):
        raise ConfigError(f"section {name!r} must be an object")
    allowed = {f.name for f in fields(cls)}
    unknown = set(data) - allowed
    if unknown:
        raise ConfigError(f"unknown key {sorted(unknown)[0]!r} in section {name!r}")
    if isinstance(data.get("stopword_words"), list):
        data = dict(data, stopword_words=tuple(data["stopword_words"]))
    try:
        return cls(**data)
    except (TypeError, ValueError) as e:
        raise ConfigError(f"invalid value in section {name!r}: {e}") from e


def config_from_dict(data: dict) -> AppConfig:
    """Build an AppConfig from a parsed document, rejecting unknown keys."""
    if not isinstance(data, dict):
        raise ConfigError("config document must be an object")
    unknown = set(data) - (set(_SECTIONS) | {"seed"})
    if unknown:
        raise ConfigError(f"unknown key {sorted(unknown)[0]!r} in config")
    kwargs = {}
    if "seed" in data:
        if not isinstance(data["seed"], int) or isinstance(data["seed"], bool):
            raise ConfigError("seed must be an integer")
        kwargs["seed"] = data["seed"]
    for name, cls in _SECTIONS.items():
        if name in data:
            kwargs[name] = _build_section(name, cls, data[name])
    return AppConfig(**kwargs)


def load_config(path: str | Path) -> AppConfig:
    """Read a JSON config document from disk."""
    try:
        data = json.loads(Path(path).read_text("utf-8"))
    except json.JSONDecodeError as e:
        raise ConfigError(f"config file is not valid JSON: {e}") from e
    return config_from_dict(data)


def config_to_dict(cfg: AppConfig) -> dict:
    """Plain-dict snapshot, suitable for embedding in a model archive.

    The effective stopword list rides along so a loaded model tokenizes
    identically even if the original stopword file is gone.
    """
    v = cfg.vectorizer
    vec = {
        "ngram_min": v.ngram_min,
        "ngram_max": v.ngram_max,
        "min_token_len": v.min_token_len,
        "keep_stopwords_in_ngrams": v.keep_stopwords_in_ngrams,
        "stopword_path": v.stopword_path,
    }
    if v.stopword_path is not None or v.stopword_words is not None:
        vec["stopword_words"] = sorted(v.stopwords())
    return {
        "seed": cfg.seed,
        "vectorizer": vec,
        "smote": {"k_neighbors": cfg.smote.k_neighbors, "enabled": cfg.smote.enabled},
        "forest": {
            "n_trees": cfg.forest.n_trees,
            "max_features": cfg.forest.max_features,
            "min_leaf": cfg.forest.min_leaf,
            "max_depth": cfg.forest.max_depth,
        },
        "summarizer": {
            "exponent_x": cfg.summarizer.exponent_x,
            "lwf_a": cfg.summarizer.lwf_a,
            "lwf_b": cfg.summarizer.lwf_b,
            "lwf_c": cfg.summarizer.lwf_c,
            "max_chars": cfg.summarizer.max_chars,
            "min_chars": cfg.summarizer.min_chars,
        },
        "keywords": {
            "limit": cfg.keywords.limit,
            "use_feature_importance": cfg.keywords.use_feature_importance,
        },
    }
