"""SMOTE oversampling so both classes train on equal sentence counts.

Synthetic minority vectors are convex combinations of a real sample and one
of its k nearest minority neighbors, generated deterministically from a
seed. Runs in TF-IDF vector space, after vectorization.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .vectorizer import SparseVector, as_csr


@dataclass(frozen=True)
class SmoteConfig:
    k_neighbors: int = 5
    seed: int = 0

    def __post_init__(self):
        if self.k_neighbors < 1:
            raise ValueError("k_neighbors must be >= 1")


def interpolate(parent: SparseVector, neighbor: SparseVector, g: float) -> SparseVector:
    """Point at fraction g along the segment from parent to neighbor.

    Computed per coordinate as x + g*(nn - x), which stays inside
    [min(x, nn), max(x, nn)] exactly in floating point.
    """
    union = np.union1d(parent.indices, neighbor.indices)
    x = np.zeros(len(union))
    nn = np.zeros(len(union))
    x[np.searchsorted(union, parent.indices)] = parent.values
    nn[np.searchsorted(union, neighbor.indices)] = neighbor.values
    vals = x + g * (nn - x)
    keep = vals != 0.0
    return SparseVector(union[keep], vals[keep])


def _nearest_neighbors(vectors: list[SparseVector], k: int) -> np.ndarray:
    """Index matrix of each sample's k nearest peers by Euclidean distance.

    Ties go to the lower sample index; a sample is never its own neighbor.
    """
    m = len(vectors)
    n_features = 1 + max((int(v.indices[-1]) for v in vectors if len(v)), default=0)
    X = as_csr(vectors, n_features)
    gram = (X @ X.T).toarray()
    sq = gram.diagonal()
    d2 = sq[:, None] + sq[None, :] - 2.0 * gram
    np.fill_diagonal(d2, np.inf)
    # lexsort: distance is the primary key, sample index breaks ties
    order = np.lexsort((np.tile(np.arange(m), (m, 1)), d2), axis=1)
    return order[:, :k]


def smote(minority: list[SparseVector], target_count: int, cfg: SmoteConfig) -> list[SparseVector]:
    """Generate target_count - len(minority) synthetic minority vectors.

    Parents cycle round-robin through the minority samples; for each parent
    the seeded generator picks one of its k nearest minority neighbors and
    an interpolation fraction g in [0, 1]. With a single minority sample the
    synthetics are exact copies of it.
    """
    m = len(minority)
    if m == 0:
        raise ValueError("minority class is empty")
    if target_count < m:
        raise ValueError(f"cannot undersample: target {target_count} < minority size {m}")

    n_needed = target_count - m
    if n_needed == 0:
        return []
    if m == 1:
        only = minority[0]
        return [SparseVector(only.indices.copy(), only.values.copy()) for _ in range(n_needed)]

    k = min(cfg.k_neighbors, m - 1)
    neighbors = _nearest_neighbors(minority, k)
    rng = np.random.default_rng(cfg.seed)
    out = []
    for i in range(n_needed):
        parent_idx = i % m
        nn_idx = int(neighbors[parent_idx, rng.integers(0, k)])
        g = float(rng.random())
        out.append(interpolate(minority[parent_idx], minority[nn_idx], g))
    return out


def balance_classes(vectors_by_class: dict[str, list[SparseVector]],
                    cfg: SmoteConfig) -> dict[str, list[SparseVector]]:
    """Equalize the two class counts by SMOTE-extending the smaller one.

    Majority vectors are passed through untouched (same objects); equal
    counts are returned as-is.
    """
    if len(vectors_by_class) != 2:
        raise ValueError(f"exactly 2 classes required, got {len(vectors_by_class)}")
    (label_a, vecs_a), (label_b, vecs_b) = vectors_by_class.items()
    if not vecs_a or not vecs_b:
        raise ValueError("both classes must be non-empty")
    if len(vecs_a) == len(vecs_b):
        return {label_a: vecs_a, label_b: vecs_b}
    if len(vecs_a) < len(vecs_b):
        minority_label, minority, target = label_a, vecs_a, len(vecs_b)
    else:
        minority_label, minority, target = label_b, vecs_b, len(vecs_a)
    extended = minority + smote(minority, target, cfg)
    return {
        label_a: extended if minority_label == label_a else vecs_a,
        label_b: extended if minority_label == label_b else vecs_b,
    }
