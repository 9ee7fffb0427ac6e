# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled best-split search; semantics identical to ``_split_py``.

Rows are ordered by sorting (value, original index) pairs, a total order
whose result is exactly the stable permutation numpy's stable argsort
produces.  Prefix sums run sequentially like np.cumsum and candidates are
scanned in ascending order with strict greater-than comparisons, so both
kernels return bit-identical splits.
"""

import numpy as np

cimport numpy as cnp
from libcpp.algorithm cimport sort as cpp_sort
from libcpp.pair cimport pair
from libcpp.vector cimport vector

cnp.import_array()

BACKEND = "compiled"


def best_split(cnp.ndarray[double, ndim=2] X, cnp.ndarray[double, ndim=1] y,
               feature_ids, long min_samples_leaf):
    """Best (feature, threshold, sse_reduction); feature -1 when none."""
    cdef cnp.ndarray[long, ndim=1] feats = np.ascontiguousarray(feature_ids, dtype=np.int64)
    cdef long n = y.shape[0]
    cdef long n_feats = feats.shape[0]
    cdef long best_feat = -1
    cdef double best_thr = 0.0
    cdef double best_red = 0.0
    cdef double total = 0.0
    cdef long i, j, f, fi, b
    cdef double lsum, rsum, red, a, c, thr, parent_term
    cdef double nl, nr

    for i in range(n):
        total += y[i]
    if n < 2 * min_samples_leaf or n < 2:
        return best_feat, best_thr, best_red
    parent_term = total * total / n

    cdef vector[pair[double, long]] items
    cdef vector[double] ysorted
    items.resize(n)
    ysorted.resize(n)

    for fi in range(n_feats):
        f = feats[fi]
        for i in range(n):
            items[i].first = X[i, f]
            items[i].second = i
        cpp_sort(items.begin(), items.end())
        for i in range(n):
            ysorted[i] = y[items[i].second]
        # sequential prefix-sum scan over boundaries b = 0..n-2
        lsum = 0.0
        for b in range(n - 1):
            lsum += ysorted[b]
            a = items[b].first
            c = items[b + 1].first
            if c <= a:
                continue
            j = b + 1  # rows on the left
            if j < min_samples_leaf or n - j < min_samples_leaf:
                continue
            nl = <double> j
            nr = <double> (n - j)
            rsum = total - lsum
            red = lsum * lsum / nl + rsum * rsum / nr - parent_term
            if red > best_red:
                thr = (a + c) / 2.0
                if thr == c:
                    thr = a
                best_feat = f
                best_thr = thr
                best_red = red
    return best_feat, best_thr, best_red
