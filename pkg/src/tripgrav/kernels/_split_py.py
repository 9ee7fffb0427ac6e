"""Pure-numpy best-split search for regression trees.

Semantics (shared bit-for-bit with the compiled twin in ``_split_cy``):

* candidate thresholds are midpoints between consecutive distinct sorted
  values of each feature;
* a split is valid only if both sides hold at least ``min_samples_leaf``
  rows;
* the score of a split is the exact decrease in sum of squared errors,
  computed as lsum^2/nl + rsum^2/nr - total^2/n from sequential prefix
  sums of y in sorted order;
* ties are broken toward the lowest feature index, then the lowest
  threshold, by scanning candidates in ascending order with a strict
  greater-than comparison;
* rows sort by numpy's stable argsort in both kernels, so equal feature
  values contribute to prefix sums in the same order.

A returned feature of -1 means no score-improving valid split exists.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def best_split(X: np.ndarray, y: np.ndarray, feature_ids: np.ndarray, min_samples_leaf: int):
    """Best (feature, threshold, sse_reduction) over the given features.

    X is the node's row subset (n, d); feature_ids are ascending column
    indices to scan.  Returns (-1, 0.0, 0.0) when no valid split improves
    the squared error.
    """
    n = y.shape[0]
    total = float(np.cumsum(y)[-1]) if n else 0.0
    best_feat = -1
    best_thr = 0.0
    best_red = 0.0
    if n < 2 * min_samples_leaf or n < 2:
        return best_feat, best_thr, best_red
    parent_term = total * total / n

    counts = np.arange(1, n, dtype=np.float64)
    msl_ok = (counts >= min_samples_leaf) & (n - counts >= min_samples_leaf)

    for f in feature_ids:
        xs = X[:, f]
        order = np.argsort(xs, kind="stable")
        xf = xs[order]
        csum = np.cumsum(y[order])
        valid = (xf[1:] > xf[:-1]) & msl_ok
        cand = np.flatnonzero(valid)
        if cand.size == 0:
            continue
        lsum = csum[cand]
        rsum = total - lsum
        nl = counts[cand]
        nr = n - nl
        red = lsum * lsum / nl + rsum * rsum / nr - parent_term
        j = int(np.argmax(red))  # first occurrence wins: lowest threshold
        if red[j] > best_red:
            b = cand[j]
            a, c = xf[b], xf[b + 1]
            thr = (a + c) / 2.0
            if thr == c:  # midpoint rounded up to the right value
                thr = a
            best_feat = int(f)
            best_thr = float(thr)
            best_red = float(red[j])
    return best_feat, best_thr, best_red
