"""Random forest over sparse sentence vectors, with class probabilities.

Trees are grown CART-style on Gini impurity from seeded bootstrap samples,
with a random feature subset considered at each split. Probabilities are
the across-tree average of leaf class frequencies, which is what the
summarizer exponentiates, so their semantics matter here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import sparse

from .vectorizer import SparseVector, as_csr


@dataclass(frozen=True)
class ForestConfig:
    n_trees: int = 100
    max_features: str | int = "sqrt"  # "sqrt", "all", or an explicit count
    min_leaf: int = 1
    max_depth: int | None = None
    seed: int = 0


@dataclass
class DecisionTree:
    """One fitted tree, stored as parallel arrays in preorder.

    Node i is internal when feature[i] >= 0 (value <= threshold routes to
    left[i], else right[i]) and a leaf when feature[i] == -1, in which case
    counts[i] holds the per-class training sample counts.
    """

    feature: np.ndarray    # int64, -1 for leaves
    threshold: np.ndarray  # float64
    left: np.ndarray       # int64 node index
    right: np.ndarray      # int64 node index
    counts: np.ndarray     # int64, shape (n_nodes, 2)

    def route(self, values: dict[int, float]) -> np.ndarray:
        """Leaf class counts for a sparse vector given as an index->value map."""
        i = 0
        while self.feature[i] >= 0:
            v = values.get(int(self.feature[i]), 0.0)
            i = int(self.left[i]) if v <= self.threshold[i] else int(self.right[i])
        return self.counts[i]

    def leaf_counts(self, x: SparseVector) -> np.ndarray:
        return self.route(dict(zip(x.indices.tolist(), x.values.tolist())))

    @property
    def n_nodes(self) -> int:
        return len(self.feature)


@dataclass
class ForestModel:
    trees: list[DecisionTree]
    n_features: int
    classes: tuple[str, str]
    config: ForestConfig
    importances: np.ndarray = field(repr=False, default=None)


def _gini_decrease(c0_node, c1_node, c0_left, c1_left):
    """Impurity decrease for splitting (c0_node, c1_node) at each candidate.

    c0_left/c1_left are arrays of left-side class weights per candidate.
    Returns the per-candidate decrease of node Gini minus the child-weighted
    mean Gini.
    """
    w = c0_node + c1_node
    gini_node = 1.0 - (c0_node ** 2 + c1_node ** 2) / w ** 2
    wl = c0_left + c1_left
    wr = w - wl
    c0_right = c0_node - c0_left
    c1_right = c1_node - c1_left
    gini_l = 1.0 - (c0_left ** 2 + c1_left ** 2) / wl ** 2
    gini_r = 1.0 - (c0_right ** 2 + c1_right ** 2) / wr ** 2
    return gini_node - (wl * gini_l + wr * gini_r) / w


def _best_split(feats, vals, ew, ec1, w_total, c1_total):
    """Best (feature, threshold, decrease) over a node's candidate entries.

    feats/vals/ew/ec1 list every nonzero (feature, value) entry of the
    node's rows on the candidate features, with per-entry sample weight and
    class-1 weight. Rows absent from a column sit at value 0; each feature's
    zero block enters the scan as one merged virtual entry. Candidate
    thresholds are midpoints between consecutive distinct observed values of
    a feature; ties on the decrease go to the lower feature id, then the
    lower threshold.
    """
    c0_total = w_total - c1_total

    # per-feature residual weight at value zero (sums of integer-valued
    # floats, so exact)
    uniq, local = np.unique(feats, return_inverse=True)
    w_zero = w_total - np.bincount(local, weights=ew, minlength=len(uniq))
    c1_zero = c1_total - np.bincount(local, weights=ec1, minlength=len(uniq))
    has_zero = w_zero > 0
    if has_zero.any():
        feats = np.concatenate([feats, uniq[has_zero]])
        vals = np.concatenate([vals, np.zeros(int(has_zero.sum()))])
        ew = np.concatenate([ew, w_zero[has_zero]])
        ec1 = np.concatenate([ec1, c1_zero[has_zero]])

    order = np.lexsort((vals, feats))
    fs = feats[order]
    vs = vals[order]
    cum_w = np.cumsum(ew[order])
    cum_c1 = np.cumsum(ec1[order])

    same_feat = fs[:-1] == fs[1:]
    boundary = np.nonzero(same_feat & (vs[:-1] != vs[1:]))[0]
    if not len(boundary):
        return None

    # cumulative sums restarted per feature: subtract the running total just
    # before each feature's first entry
    starts = np.nonzero(np.concatenate(([True], ~same_feat)))[0]
    seg = np.searchsorted(starts, boundary, side="right") - 1
    seg_start = starts[seg]
    base_w = np.where(seg_start > 0, cum_w[np.maximum(seg_start - 1, 0)], 0.0)
    base_c1 = np.where(seg_start > 0, cum_c1[np.maximum(seg_start - 1, 0)], 0.0)
    left_w = cum_w[boundary] - base_w
    left_c1 = cum_c1[boundary] - base_c1

    thresholds = (vs[boundary] + vs[boundary + 1]) / 2.0
    # a midpoint of two adjacent floats can round up to the larger one,
    # which would push the whole right block left; fall back to the lower
    # value so both children stay non-empty
    rounded_up = thresholds >= vs[boundary + 1]
    thresholds[rounded_up] = vs[boundary][rounded_up]

    decrease = _gini_decrease(float(c0_total), float(c1_total), left_w - left_c1, left_c1)
    best = int(np.argmax(decrease))  # first occurrence wins on ties
    return int(fs[boundary[best]]), float(thresholds[best]), float(decrease[best])


def grow_tree(X: sparse.csr_matrix, y01: np.ndarray, *,
              min_leaf: int = 1, max_depth: int | None = None,
              max_features: str | int = "all",
              sample_weight: np.ndarray | None = None,
              rng: np.random.Generator | None = None) -> DecisionTree:
    """Grow a single CART tree; nodes are emitted in preorder.

    Splits maximize weighted Gini decrease over the candidate features;
    growth stops when a node is pure, holds fewer than 2*min_leaf samples,
    hits max_depth, or no split reduces impurity. Feature subsets are drawn
    from rng per node in preorder, so a fixed rng state fixes the tree.
    """
    n_rows, n_features = X.shape
    if sample_weight is None:
        sample_weight = np.ones(n_rows)
    if isinstance(max_features, int):
        k_feat = min(max_features, n_features)
    elif max_features == "sqrt":
        k_feat = min(math.ceil(math.sqrt(n_features)), n_features)
    elif max_features == "all":
        k_feat = n_features
    else:
        raise ValueError(f"max_features must be 'sqrt', 'all', or an int, got {max_features!r}")

    active = np.nonzero(sample_weight > 0)[0]
    cand_mask = np.zeros(n_features, dtype=bool)  # scratch, reset after use
    feature, threshold, left, right, counts = [], [], [], [], []

    def new_node() -> int:
        feature.append(-1)
        threshold.append(0.0)
        left.append(-1)
        right.append(-1)
        counts.append((0, 0))
        return len(feature) - 1

    root = new_node()
    # stack holds (node index, row ids, row weights, depth); children are
    # pushed right-first so the left subtree is emitted before the right
    stack = [(root, active, sample_weight[active].astype(float), 0)]
    while stack:
        node, rows, w, depth = stack.pop()
        w_total = float(w.sum())
        y_node = y01[rows].astype(float)
        c1_total = float(w @ y_node)
        c0_total = w_total - c1_total
        counts[node] = (int(round(c0_total)), int(round(c1_total)))

        if (c0_total == 0.0 or c1_total == 0.0 or w_total < 2 * min_leaf
                or (max_depth is not None and depth >= max_depth)):
            continue

        if k_feat >= n_features:
            candidates = None  # every feature is a candidate
        else:
            candidates = rng.choice(n_features, size=k_feat, replace=False)

        # flatten the node's rows into (feature, value, row) entry arrays,
        # restricted to the candidate features
        sub = X[rows]
        erows = np.repeat(np.arange(len(rows)), np.diff(sub.indptr))
        feats = sub.indices.astype(np.int64)
        vals = sub.data
        if candidates is not None:
            cand_mask[candidates] = True
            keep = cand_mask[feats]
            cand_mask[candidates] = False
            feats, vals, erows = feats[keep], vals[keep], erows[keep]
        if not len(feats):
            continue

        found = _best_split(feats, vals, w[erows], w[erows] * y_node[erows],
                            w_total, c1_total)
        if found is None:
            continue
        f, thr, dec = found
        if dec <= 0.0:
            continue

        # rows absent from the column have value 0; they go right only when
        # the threshold is negative
        in_col = feats == f
        go_right = np.full(len(rows), thr < 0.0)
        go_right[erows[in_col]] = vals[in_col] > thr
        feature[node] = f
        threshold[node] = thr
        left_idx = new_node()
        right_idx = new_node()
        left[node] = left_idx
        right[node] = right_idx
        stack.append((right_idx, rows[go_right], w[go_right], depth + 1))
        stack.append((left_idx, rows[~go_right], w[~go_right], depth + 1))

    return DecisionTree(
        feature=np.array(feature, dtype=np.int64),
        threshold=np.array(threshold, dtype=np.float64),
        left=np.array(left, dtype=np.int64),
        right=np.array(right, dtype=np.int64),
        counts=np.array(counts, dtype=np.int64),
    )


def compute_importances(trees: list[DecisionTree], n_features: int) -> np.ndarray:
    """Gini importance per feature from tree structure alone.

    Each split contributes its weighted impurity decrease, scaled by the
    fraction of the tree's root samples reaching the node; the final vector
    is normalized to sum to 1 (all zeros for a forest of stumps). Derived
    purely from stored node counts, so it is identical before and after
    serialization.
    """
    imp = np.zeros(n_features)
    for tree in trees:
        w_root = float(tree.counts[0].sum())
        for i in range(tree.n_nodes):
            f = int(tree.feature[i])
            if f < 0:
                continue
            c0, c1 = (float(v) for v in tree.counts[i])
            l, r = int(tree.left[i]), int(tree.right[i])
            cl0, cl1 = (float(v) for v in tree.counts[l])
            dec = _gini_decrease(c0, c1, np.float64(cl0), np.float64(cl1))
            imp[f] += ((c0 + c1) / w_root) * float(dec)
    total = imp.sum()
    return imp / total if total > 0 else imp


def train(X: list[SparseVector], y: list[str], cfg: ForestConfig = ForestConfig(),
          n_features: int | None = None,
          classes: tuple[str, str] | None = None) -> ForestModel:
    """Fit the ensemble; (data, config, seed) fully determine the model.

    Each tree t uses its own generator seeded with cfg.seed + t for the
    bootstrap and for per-node feature subsets, so trees are independent of
    build order.
    """
    if len(X) != len(y):
        raise ValueError("X and y lengths differ")
    if len(X) < 2:
        raise ValueError("need at least 2 training samples")
    if classes is None:
        seen: list[str] = []
        for lab in y:
            if lab not in seen:
                seen.append(lab)
        if len(seen) != 2:
            raise ValueError(f"exactly 2 classes required, got {seen}")
        classes = (seen[0], seen[1])
    y01 = np.array([0 if lab == classes[0] else 1 for lab in y], dtype=np.int64)
    if y01.min() == y01.max():
        raise ValueError("training data contains a single class")

    if n_features is None:
        n_features = 1 + max((int(v.indices[-1]) for v in X if len(v)), default=0)
    Xm = as_csr(X, n_features)
    n = len(X)

    trees = []
    for t in range(cfg.n_trees):
        rng = np.random.default_rng(cfg.seed + t)
        boot = rng.integers(0, n, size=n)
        weights = np.bincount(boot, minlength=n).astype(float)
        trees.append(grow_tree(Xm, y01, min_leaf=cfg.min_leaf, max_depth=cfg.max_depth,
                               max_features=cfg.max_features, sample_weight=weights,
                               rng=rng))

    return ForestModel(trees=trees, n_features=n_features, classes=classes,
                       config=cfg, importances=compute_importances(trees, n_features))


def predict_proba(model: ForestModel, x: SparseVector) -> np.ndarray:
    """Mean of per-tree leaf class frequencies; a valid 2-class distribution."""
    values = dict(zip(x.indices.tolist(), x.values.tolist()))
    acc = np.zeros(2)
    for tree in model.trees:
        c = tree.route(values).astype(float)
        acc += c / c.sum()
    return acc / len(model.trees)


def predict(model: ForestModel, x: SparseVector) -> str:
    """Argmax class; exact ties go to the first class."""
    p = predict_proba(model, x)
    return model.classes[0] if p[0] >= p[1] else model.classes[1]


def feature_importance(model: ForestModel) -> np.ndarray:
    """Gini importance per feature, summing to 1 (0 for unused features)."""
    return model.importances.copy()
