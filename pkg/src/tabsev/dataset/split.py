"""Seeded train/test splitting, K-fold partitioning, class marginals."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from tabsev.errors import BadKError, EmptyInputError, EmptySplitError

# Fixed stream tag so fold shuffling never aliases the split shuffle.
_FOLD_STREAM = 104729


@dataclass(frozen=True)
class SplitPlan:
    train_indices: np.ndarray
    test_indices: np.ndarray
    seed: int
    folds: tuple[np.ndarray, ...] = field(default_factory=tuple)

    @property
    def n(self) -> int:
        return int(self.train_indices.size + self.test_indices.size)


def split(n: int, test_fraction: float, seed: int) -> SplitPlan:
    """Shuffle 0..n-1 by seed; train gets floor(n*(1-f)), test the rest."""
    if not 0.0 < test_fraction < 1.0:
        raise EmptySplitError(f"test_fraction must be in (0, 1), got {test_fraction}")
    n_train = int(np.floor(n * (1.0 - test_fraction)))
    n_test = n - n_train
    if n_train == 0 or n_test == 0:
        raise EmptySplitError(
            f"n={n}, test_fraction={test_fraction} leaves an empty side"
        )
    perm = np.random.default_rng(seed).permutation(n)
    return SplitPlan(perm[:n_train].copy(), perm[n_train:].copy(), seed)


def kfold(plan: SplitPlan, k: int) -> SplitPlan:
    """Partition the train indices into k seeded folds of near-equal size.

    The first (n_train mod k) folds carry one extra index.
    """
    n_train = plan.train_indices.size
    if k < 2 or k > n_train:
        raise BadKError(f"K must satisfy 2 <= K <= {n_train}, got {k}")
    rng = np.random.default_rng([plan.seed, _FOLD_STREAM])
    shuffled = rng.permutation(plan.train_indices)
    base, extra = divmod(n_train, k)
    folds = []
    start = 0
    for i in range(k):
        size = base + (1 if i < extra else 0)
        folds.append(shuffled[start : start + size].copy())
        start += size
    return SplitPlan(plan.train_indices, plan.test_indices, plan.seed, tuple(folds))


def class_marginals(labels: np.ndarray) -> np.ndarray:
    """Per-class proportions in class-index order (0..max label)."""
    labels = np.asarray(labels, dtype=np.int64)
    if labels.size == 0:
        raise EmptyInputError("class_marginals needs at least one label")
    if labels.min() < 0:
        raise EmptyInputError("labels must be non-negative")
    counts = np.bincount(labels)
    return counts / labels.size
