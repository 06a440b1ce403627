"""Regression tree over difference vectors, built and applied from scratch.

Greedy binary splitting on squared error with midpoint thresholds.  The
usual library seed plays no role here: equal-gain candidates break ties on
the lowest dimension index, then the lowest threshold, so training is fully
deterministic on any platform.  The seed is accepted and recorded to keep
the external contract stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

_GAIN_EPS = 1e-12


@dataclass
class TreeNode:
    dimension: int | None = None
    threshold: float | None = None
    left: "TreeNode | None" = None
    right: "TreeNode | None" = None
    mean_score: float | None = None
    sample_count: int = 0

    @property
    def is_leaf(self) -> bool:
        return self.dimension is None

    def to_dict(self) -> dict:
        if self.is_leaf:
            return {"mean": self.mean_score, "count": self.sample_count}
        return {
            "dim": self.dimension,
            "thr": self.threshold,
            "left": self.left.to_dict(),
            "right": self.right.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TreeNode":
        if "mean" in data:
            return cls(mean_score=data["mean"], sample_count=data["count"])
        return cls(
            dimension=data["dim"],
            threshold=data["thr"],
            left=cls.from_dict(data["left"]),
            right=cls.from_dict(data["right"]),
        )


@dataclass
class RegressionTree:
    root: TreeNode
    input_length: int
    min_samples_leaf: int
    seed: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "input_length": self.input_length,
                "min_samples_leaf": self.min_samples_leaf,
                "seed": self.seed,
                "root": self.root.to_dict(),
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "RegressionTree":
        data = json.loads(text)
        return cls(
            root=TreeNode.from_dict(data["root"]),
            input_length=data["input_length"],
            min_samples_leaf=data["min_samples_leaf"],
            seed=data["seed"],
        )


def _sse(values: list[float]) -> float:
    if not values:
        return 0.0
    mean = sum(values) / len(values)
    return sum((v - mean) ** 2 for v in values)


def best_split(
    X: list[list[float]], y: list[float], min_samples_leaf: int
) -> tuple[int, float, float] | None:
    """Best (dimension, threshold, gain) under the leaf-size constraint.

    Thresholds are midpoints between adjacent observed values; strictly
    better gain wins, so the lowest dimension and threshold take ties.
    """
    n = len(y)
    parent_sse = _sse(y)
    best: tuple[int, float, float] | None = None
    n_features = len(X[0])
    for dim in range(n_features):
        order = sorted(range(n), key=lambda i: X[i][dim])
        xs = [X[i][dim] for i in order]
        ys = [y[i] for i in order]
        prefix = [0.0]
        prefix_sq = [0.0]
        for v in ys:
            prefix.append(prefix[-1] + v)
            prefix_sq.append(prefix_sq[-1] + v * v)
        total, total_sq = prefix[-1], prefix_sq[-1]
        for k in range(1, n):
            if xs[k] == xs[k - 1]:
                continue
            if k < min_samples_leaf or n - k < min_samples_leaf:
                continue
            left_sse = prefix_sq[k] - prefix[k] ** 2 / k
            right_sum = total - prefix[k]
            right_sse = (total_sq - prefix_sq[k]) - right_sum**2 / (n - k)
            gain = parent_sse - left_sse - right_sse
            threshold = (xs[k - 1] + xs[k]) / 2.0
            if gain > _GAIN_EPS and (best is None or gain > best[2] + _GAIN_EPS):
                best = (dim, threshold, gain)
    return best


def _grow(X, y, min_samples_leaf) -> TreeNode:
    split = best_split(X, y, min_samples_leaf)
    if split is None:
        return TreeNode(mean_score=sum(y) / len(y), sample_count=len(y))
    dim, threshold, _ = split
    left_idx = [i for i in range(len(y)) if X[i][dim] <= threshold]
    right_idx = [i for i in range(len(y)) if X[i][dim] > threshold]
    return TreeNode(
        dimension=dim,
        threshold=threshold,
        left=_grow([X[i] for i in left_idx], [y[i] for i in left_idx], min_samples_leaf),
        right=_grow([X[i] for i in right_idx], [y[i] for i in right_idx], min_samples_leaf),
    )


def train_cart(
    X: list[list[float]],
    y: list[float],
    min_samples_leaf: int = 10,
    seed: int = 0,
) -> RegressionTree:
    if not X:
        raise ValueError("empty training set")
    lengths = {len(row) for row in X}
    if len(lengths) != 1:
        raise ValueError(f"inconsistent row lengths: {sorted(lengths)}")
    if len(X) != len(y):
        raise ValueError("X and y sizes differ")
    root = _grow([list(map(float, row)) for row in X], list(map(float, y)), min_samples_leaf)
    return RegressionTree(
        root=root,
        input_length=lengths.pop(),
        min_samples_leaf=min_samples_leaf,
        seed=seed,
    )


def pad_vector(codes, length: int, fill: int = 0) -> list[float]:
    padded = list(codes) + [fill] * (length - len(codes))
    return [float(c) for c in padded]


def predict(tree: RegressionTree, vector) -> float:
    values = [float(v) for v in vector]
    if len(values) != tree.input_length:
        raise ValueError(
            f"vector length {len(values)} != model input length {tree.input_length}"
        )
    node = tree.root
    while not node.is_leaf:
        node = node.left if values[node.dimension] <= node.threshold else node.right
    return node.mean_score
