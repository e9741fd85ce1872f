"""Three-class polarity classifier over short clauses.

Features are character 2-4-grams and word 1-2-grams of the normalized
text plus three lexicon counters (negating adverbs, positive words,
negative words).  Columns are scored with a chi-squared statistic, the
top 80th percentile is kept, and a deterministic CART tree with Gini
impurity does the classification.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .lexicon import Lexicon

LABELS = ("negative", "neutral", "positive")

CHAR_NGRAM_RANGE = (2, 4)
WORD_NGRAM_RANGE = (1, 2)
NUMERIC_COLUMNS = ("NEG_ADVERBS", "POS_WORDS", "NEG_WORDS")


class SentimentError(ValueError):
    pass


def normalize_text(text: str) -> str:
    """Lowercase, punctuation to spaces, runs of whitespace collapsed."""
    chars = [c if c.isalnum() else " " for c in text.lower()]
    return " ".join("".join(chars).split())


def char_ngrams(text: str, n_min: int, n_max: int) -> list[str]:
    grams = []
    for n in range(n_min, n_max + 1):
        grams.extend(text[i:i + n] for i in range(len(text) - n + 1))
    return grams


def word_ngrams(tokens: list[str], n_min: int, n_max: int) -> list[str]:
    grams = []
    for n in range(n_min, n_max + 1):
        grams.extend(" ".join(tokens[i:i + n])
                     for i in range(len(tokens) - n + 1))
    return grams


@dataclass
class FeatureSpec:
    """Fitted vocabulary mapping n-grams to dense column indices.

    Char and word grams live in separate namespaces ("c:" / "w:"); the
    three numeric counters always occupy the last three columns.
    """

    char_ngram_range: tuple[int, int] = CHAR_NGRAM_RANGE
    word_ngram_range: tuple[int, int] = WORD_NGRAM_RANGE
    vocabulary: dict[str, int] = field(default_factory=dict)

    @property
    def n_columns(self) -> int:
        return len(self.vocabulary) + len(NUMERIC_COLUMNS)

    @classmethod
    def build(cls, texts: list[str],
              char_ngram_range: tuple[int, int] = CHAR_NGRAM_RANGE,
              word_ngram_range: tuple[int, int] = WORD_NGRAM_RANGE) -> "FeatureSpec":
        """Sorted vocabulary over all grams of the texts (order independent)."""
        keys: set[str] = set()
        for text in texts:
            norm = normalize_text(text)
            keys.update("c:" + g for g in char_ngrams(norm, *char_ngram_range))
            keys.update("w:" + g for g in word_ngrams(norm.split(), *word_ngram_range))
        vocabulary = {key: i for i, key in enumerate(sorted(keys))}
        return cls(char_ngram_range=char_ngram_range,
                   word_ngram_range=word_ngram_range,
                   vocabulary=vocabulary)

    def extract(self, text: str, lexicon: Lexicon) -> np.ndarray:
        """Count vector for one text (vocabulary grams + numeric tail)."""
        vec = np.zeros(self.n_columns, dtype=np.int64)
        norm = normalize_text(text)
        for gram in char_ngrams(norm, *self.char_ngram_range):
            col = self.vocabulary.get("c:" + gram)
            if col is not None:
                vec[col] += 1
        tokens = norm.split()
        for gram in word_ngrams(tokens, *self.word_ngram_range):
            col = self.vocabulary.get("w:" + gram)
            if col is not None:
                vec[col] += 1
        base = len(self.vocabulary)
        vec[base:base + 3] = lexicon.polarity_counts(tokens)
        return vec

    def matrix(self, texts: list[str], lexicon: Lexicon) -> np.ndarray:
        return np.stack([self.extract(t, lexicon) for t in texts]) if texts \
            else np.zeros((0, self.n_columns), dtype=np.int64)


def extract_features(text: str, spec: FeatureSpec, lexicon: Lexicon) -> np.ndarray:
    return spec.extract(text, lexicon)


def chi2_scores(X: np.ndarray, y: list[str] | np.ndarray) -> np.ndarray:
    """Chi-squared score per column.

    For column j: observed O_cj is the per-class sum of counts, expected
    E_cj is the class prior times the column total, and the score is
    sum_c (O_cj - E_cj)^2 / E_cj.  All-zero columns score 0.
    """
    X = np.asarray(X)
    if np.any(X < 0):
        raise SentimentError("chi2 requires non-negative counts")
    y = np.asarray(y)
    classes = np.unique(y)
    if classes.size < 2:
        raise SentimentError("chi2 undefined for one class")
    n = y.size
    priors = np.array([(y == c).sum() / n for c in classes])
    observed = np.stack([X[y == c].sum(axis=0) for c in classes]).astype(float)
    totals = observed.sum(axis=0)
    expected = priors[:, None] * totals[None, :]
    scores = np.zeros(X.shape[1])
    nonzero = totals > 0
    diff = observed[:, nonzero] - expected[:, nonzero]
    scores[nonzero] = (diff * diff / expected[:, nonzero]).sum(axis=0)
    return scores


def select_percentile(scores: np.ndarray, percentile: float = 0.80) -> np.ndarray:
    """Indices of the top ceil(percentile * V) columns, ties to lower index."""
    scores = np.asarray(scores, dtype=float)
    v = scores.size
    if v == 0:
        raise SentimentError("no columns to select from")
    keep = math.ceil(percentile * v)
    order = sorted(range(v), key=lambda j: (-scores[j], j))
    return np.array(sorted(order[:keep]), dtype=np.int64)


@dataclass
class TreeNode:
    counts: np.ndarray                 # class counts, aligned with tree.classes
    feature: int | None = None         # column in the fitted matrix
    threshold: float | None = None
    left: "TreeNode | None" = None
    right: "TreeNode | None" = None

    @property
    def is_leaf(self) -> bool:
        return self.feature is None


@dataclass
class DecisionTree:
    root: TreeNode
    classes: tuple[str, ...]

    def predict_counts(self, x: np.ndarray) -> np.ndarray:
        node = self.root
        while not node.is_leaf:
            node = node.left if x[node.feature] <= node.threshold else node.right
        return node.counts

    def training_accuracy(self, X: np.ndarray, y: np.ndarray) -> float:
        pred = [self.classes[int(np.argmax(self.predict_counts(row)))] for row in X]
        return float(np.mean([p == t for p, t in zip(pred, y)]))


def _gini_children(cum: np.ndarray, total: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Weighted Gini of left/right children for every split position.

    cum[i] holds class counts of the first i+1 sorted rows; returns the
    impurity share of each side already weighted by its size.
    """
    n = total.sum()
    left_n = cum.sum(axis=1)
    right = total[None, :] - cum
    right_n = n - left_n
    with np.errstate(invalid="ignore", divide="ignore"):
        gini_l = 1.0 - ((cum / left_n[:, None]) ** 2).sum(axis=1)
        gini_r = 1.0 - ((right / np.where(right_n == 0, 1, right_n)[:, None]) ** 2).sum(axis=1)
    gini_r[right_n == 0] = 0.0
    return left_n / n * gini_l, right_n / n * gini_r


def fit_tree(X: np.ndarray, y: list[str] | np.ndarray,
             max_depth: int = 32, min_samples_split: int = 2,
             classes: tuple[str, ...] | None = None) -> DecisionTree:
    """Deterministic CART: Gini impurity, thresholds at midpoints of sorted
    unique values, best (impurity decrease, lowest column, lowest threshold).
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y)
    if X.shape[0] < 1:
        raise SentimentError("cannot fit a tree on an empty matrix")
    if classes is None:
        classes = tuple(sorted(set(y.tolist())))
    class_index = {c: i for i, c in enumerate(classes)}
    y_idx = np.array([class_index[v] for v in y], dtype=np.int64)
    n_classes = len(classes)

    def counts_of(idx: np.ndarray) -> np.ndarray:
        return np.bincount(y_idx[idx], minlength=n_classes)

    def gini(counts: np.ndarray) -> float:
        n = counts.sum()
        if n == 0:
            return 0.0
        p = counts / n
        return float(1.0 - (p * p).sum())

    def build(idx: np.ndarray, depth: int) -> TreeNode:
        counts = counts_of(idx)
        node = TreeNode(counts=counts)
        n = idx.size
        parent_gini = gini(counts)
        if (depth >= max_depth or n < min_samples_split
                or parent_gini == 0.0):
            return node
        Xs = X[idx]
        onehot = np.zeros((n, n_classes))
        onehot[np.arange(n), y_idx[idx]] = 1.0
        best = None  # (neg_decrease, feature, threshold)
        col_min = Xs.min(axis=0)
        col_max = Xs.max(axis=0)
        for j in range(X.shape[1]):
            if col_min[j] == col_max[j]:
                continue
            order = np.argsort(Xs[:, j], kind="stable")
            xv = Xs[order, j]
            cum = np.cumsum(onehot[order], axis=0)
            valid = np.nonzero(xv[:-1] < xv[1:])[0]
            if valid.size == 0:
                continue
            wl, wr = _gini_children(cum[:-1], counts.astype(float))
            dvals = parent_gini - (wl[valid] + wr[valid])
            pos = int(np.argmax(dvals))
            k = int(valid[pos])
            d = float(dvals[pos])
            threshold = (xv[k] + xv[k + 1]) / 2.0
            if d <= 1e-12:
                continue
            cand = (-d, j, threshold)
            if best is None or cand < best:
                best = cand
        if best is None:
            return node
        _, j, threshold = best
        mask = Xs[:, j] <= threshold
        node.feature = j
        node.threshold = threshold
        node.left = build(idx[mask], depth + 1)
        node.right = build(idx[~mask], depth + 1)
        return node

    root = build(np.arange(X.shape[0]), 0)
    return DecisionTree(root=root, classes=classes)


@dataclass
class SentimentModel:
    feature_spec: FeatureSpec
    selected_columns: np.ndarray       # original column indices, sorted
    tree: DecisionTree

    @property
    def classes(self) -> tuple[str, ...]:
        return self.tree.classes


def train_model(rows: list[tuple[str, str]], lexicon: Lexicon,
                percentile: float = 0.80, max_depth: int = 32,
                min_samples_split: int = 2) -> SentimentModel:
    """Full pipeline: vocabulary, chi2 selection, tree fit.

    rows are (text, label) pairs with labels in LABELS.
    """
    if not rows:
        raise SentimentError("empty training corpus")
    texts = [t for t, _ in rows]
    labels = [l for _, l in rows]
    for l in labels:
        if l not in LABELS:
            raise SentimentError(f"unknown label {l!r}")
    spec = FeatureSpec.build(texts)
    X = spec.matrix(texts, lexicon)
    scores = chi2_scores(X, labels)
    selected = select_percentile(scores, percentile)
    tree = fit_tree(X[:, selected], labels,
                    max_depth=max_depth, min_samples_split=min_samples_split)
    return SentimentModel(feature_spec=spec, selected_columns=selected, tree=tree)


def predict(model: SentimentModel, text: str, lexicon: Lexicon
            ) -> tuple[str, dict[str, float]]:
    """Label plus normalized class probabilities from the reached leaf."""
    vec = model.feature_spec.extract(text, lexicon)
    counts = model.tree.predict_counts(vec[model.selected_columns])
    total = counts.sum()
    probs = counts / total if total else np.full(len(counts), 1 / len(counts))
    label = model.classes[int(np.argmax(counts))]
    return label, {c: float(p) for c, p in zip(model.classes, probs)}


# ---------------------------------------------------------------------------
# evaluation harness


@dataclass
class FoldResult:
    confusion: np.ndarray              # confusion[true, predicted]
    classes: tuple[str, ...]

    @property
    def accuracy(self) -> float:
        return float(np.trace(self.confusion) / self.confusion.sum())

    def precision(self, c: int) -> float:
        col = self.confusion[:, c].sum()
        return float(self.confusion[c, c] / col) if col else 0.0

    def recall(self, c: int) -> float:
        row = self.confusion[c].sum()
        return float(self.confusion[c, c] / row) if row else 0.0

    def f1(self, c: int) -> float:
        p, r = self.precision(c), self.recall(c)
        return 2 * p * r / (p + r) if (p + r) else 0.0

    @property
    def p_macro(self) -> float:
        return float(np.mean([self.precision(c) for c in range(len(self.classes))]))

    @property
    def f_macro(self) -> float:
        return float(np.mean([self.f1(c) for c in range(len(self.classes))]))


@dataclass
class CvReport:
    p_macro: float
    f_macro: float
    accuracy: float
    folds: list[FoldResult]


def assign_folds(labels: list[str], folds: int, seed: int) -> list[int]:
    """Stratified assignment: per-class round-robin after a seeded shuffle."""
    rng = random.Random(seed)
    assignment = [0] * len(labels)
    for cls in sorted(set(labels)):
        idx = [i for i, l in enumerate(labels) if l == cls]
        if len(idx) < folds:
            raise SentimentError(
                f"class {cls!r} has {len(idx)} examples, fewer than {folds} folds"
            )
        rng.shuffle(idx)
        for pos, i in enumerate(idx):
            assignment[i] = pos % folds
    return assignment


def cross_validate(rows: list[tuple[str, str]], lexicon: Lexicon,
                   folds: int = 10, seed: int = 0,
                   fold_assignment: list[int] | None = None,
                   percentile: float = 0.80, max_depth: int = 32) -> CvReport:
    """Stratified k-fold with class-balanced test subsets.

    The whole pipeline (vocabulary, chi2 selection, tree) is refit inside
    every fold; each fold's test rows are downsampled to equal per-class
    counts with a seeded draw over a canonical (text-sorted) order.
    """
    labels = [l for _, l in rows]
    if fold_assignment is None:
        fold_assignment = assign_folds(labels, folds, seed)
    classes = tuple(sorted(set(labels)))
    fold_results: list[FoldResult] = []
    for f in range(folds):
        train = [rows[i] for i in range(len(rows)) if fold_assignment[i] != f]
        test = [rows[i] for i in range(len(rows)) if fold_assignment[i] == f]
        if not train or not test:
            raise SentimentError(f"fold {f} has an empty train or test split")
        model = train_model(train, lexicon,
                            percentile=percentile, max_depth=max_depth)
        balanced = _balance(test, classes, random.Random(f"{seed}:{f}"))
        confusion = np.zeros((len(classes), len(classes)), dtype=np.int64)
        for text, label in balanced:
            pred, _ = predict(model, text, lexicon)
            confusion[classes.index(label), classes.index(pred)] += 1
        fold_results.append(FoldResult(confusion=confusion, classes=classes))
    return CvReport(
        p_macro=float(np.mean([fr.p_macro for fr in fold_results])),
        f_macro=float(np.mean([fr.f_macro for fr in fold_results])),
        accuracy=float(np.mean([fr.accuracy for fr in fold_results])),
        folds=fold_results,
    )


def _balance(test: list[tuple[str, str]], classes: tuple[str, ...],
             rng: random.Random) -> list[tuple[str, str]]:
    """Seeded downsample to the per-class minimum, order independent."""
    buckets = {c: sorted([r for r in test if r[1] == c]) for c in classes}
    k = min(len(b) for b in buckets.values())
    out: list[tuple[str, str]] = []
    for c in classes:
        bucket = buckets[c]
        out.extend(bucket if len(bucket) == k else rng.sample(bucket, k))
    return out


# ---------------------------------------------------------------------------
# serialization


def save_model(model: SentimentModel, path: str | Path) -> None:
    nodes: list[dict] = []

    def walk(node: TreeNode) -> int:
        record: dict = {"counts": node.counts.tolist()}
        my_id = len(nodes)
        nodes.append(record)
        if not node.is_leaf:
            record["feature"] = int(node.feature)
            record["threshold"] = float(node.threshold)
            record["left"] = walk(node.left)
            record["right"] = walk(node.right)
        return my_id

    walk(model.tree.root)
    doc = {
        "feature_spec": {
            "char_ngram_range": list(model.feature_spec.char_ngram_range),
            "word_ngram_range": list(model.feature_spec.word_ngram_range),
            "vocabulary": sorted(model.feature_spec.vocabulary,
                                 key=model.feature_spec.vocabulary.get),
        },
        "selected_columns": model.selected_columns.tolist(),
        "classes": list(model.tree.classes),
        "tree": {"nodes": nodes},
    }
    Path(path).write_text(json.dumps(doc, ensure_ascii=False, indent=1),
                          encoding="utf-8")


def load_model(path: str | Path) -> SentimentModel:
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    spec_doc = doc["feature_spec"]
    spec = FeatureSpec(
        char_ngram_range=tuple(spec_doc["char_ngram_range"]),
        word_ngram_range=tuple(spec_doc["word_ngram_range"]),
        vocabulary={k: i for i, k in enumerate(spec_doc["vocabulary"])},
    )
    raw = doc["tree"]["nodes"]

    def build(i: int) -> TreeNode:
        rec = raw[i]
        node = TreeNode(counts=np.array(rec["counts"], dtype=np.int64))
        if "feature" in rec:
            node.feature = rec["feature"]
            node.threshold = rec["threshold"]
            node.left = build(rec["left"])
            node.right = build(rec["right"])
        return node

    tree = DecisionTree(root=build(0), classes=tuple(doc["classes"]))
    return SentimentModel(
        feature_spec=spec,
        selected_columns=np.array(doc["selected_columns"], dtype=np.int64),
        tree=tree,
    )


def load_corpus(path: str | Path) -> list[tuple[str, str]]:
    """Corpus TSV: label<TAB>text per row."""
    rows: list[tuple[str, str]] = []
    path = Path(path)
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        cells = line.split("\t")
        if len(cells) != 2:
            raise SentimentError(f"{path.name}:{lineno}: expected label<TAB>text")
        label, text = cells
        if label not in LABELS:
            raise SentimentError(f"{path.name}:{lineno}: unknown label {label!r}")
        rows.append((text, label))
    return rows
