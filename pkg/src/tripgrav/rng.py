"""Deterministic counter-based pseudo-random numbers.

Everything stochastic in this package (splits, bootstraps, searches,
synthetic data) draws from :class:`Rng`, a counter-mode SplitMix64
stream: output ``i`` of a stream with key ``K`` is the SplitMix64
finalizer applied to ``K + (i + 1) * GOLDEN`` (all arithmetic mod 2**64).

Counter mode has two properties we rely on:

* bulk generation is a pure vectorized map over ``arange``, so scalar
  and array draws produce the same values on every platform;
* ``derive`` builds child streams (per tree, fold, trial, county, ...)
  by rekeying, without consuming parent state, so parallel and
  sequential execution see identical values.
"""

from __future__ import annotations

import enum
import math

import numpy as np

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

# 2**-53, the spacing of doubles in [0.5, 1): (u64 >> 11) * _INV53 is the
# standard 53-bit uniform in [0, 1).
_INV53 = 1.0 / (1 << 53)


class Stream(enum.IntEnum):
    """First derive() tag per consumer, so distinct pipeline stages fed the
    same user seed never share a stream."""

    SPLIT = 1
    TREE = 2
    STAGE = 3
    MLP_INIT = 4
    MLP_EPOCH = 5
    MLP_DROPOUT = 6
    FOLDS = 7
    TRIAL = 8
    PERMUTE = 9
    COUNTY = 10
    PAIR = 11
    FLOW_NOISE = 12
    FEATURE_SUBSET = 13


def mix64(z: int) -> int:
    """SplitMix64 output function on one 64-bit integer."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return (z ^ (z >> 31)) & _MASK


def _mix64_array(z: np.ndarray) -> np.ndarray:
    # uint64 array ops wrap mod 2**64, matching mix64 exactly.
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    return z ^ (z >> np.uint64(31))


def derive_seed(seed: int, *tags: int) -> int:
    """Integer seed for a child stream; Rng(derive_seed(s, *t)) is
    decorrelated from Rng(s) and from any other tag path."""
    return Rng(seed).derive(*tags).key


class Rng:
    """Seeded stream with cheap, independent derived substreams."""

    __slots__ = ("key", "_ctr")

    def __init__(self, seed: int):
        self.key = mix64(int(seed))
        self._ctr = 0

    @classmethod
    def _from_key(cls, key: int) -> "Rng":
        rng = cls.__new__(cls)
        rng.key = key & _MASK
        rng._ctr = 0
        return rng

    def derive(self, *tags: int) -> "Rng":
        """Child stream addressed by integer tags; does not advance self."""
        key = self.key
        for t in tags:
            key = mix64(key ^ mix64(((int(t) + 1) * _GOLDEN) & _MASK))
        return Rng._from_key(key)

    def u64(self, n: int) -> np.ndarray:
        """Next ``n`` raw 64-bit outputs."""
        idx = np.arange(self._ctr + 1, self._ctr + n + 1, dtype=np.uint64)
        self._ctr += n
        return _mix64_array(np.uint64(self.key) + idx * np.uint64(_GOLDEN))

    def random(self, n: int | None = None):
        """Uniform float64 in [0, 1) with 53 random bits."""
        out = (self.u64(1 if n is None else n) >> np.uint64(11)).astype(np.float64) * _INV53
        return float(out[0]) if n is None else out

    def uniform(self, low: float, high: float, n: int | None = None):
        return low + (high - low) * self.random(n)

    def log_uniform(self, low: float, high: float, n: int | None = None):
        """Uniform on a log scale; low and high must be positive."""
        u = self.uniform(math.log(low), math.log(high), n)
        return np.exp(u) if n is not None else math.exp(u)

    def normal(self, n: int | None = None, loc: float = 0.0, scale: float = 1.0):
        """Standard normals via Box-Muller; consumes 2*ceil(n/2) raw draws."""
        m = 1 if n is None else int(n)
        pairs = (m + 1) // 2
        u = self.u64(2 * pairs)
        # u1 in (0, 1] so the log is finite; u2 in [0, 1).
        u1 = ((u[0::2] >> np.uint64(11)) + np.uint64(1)).astype(np.float64) * _INV53
        u2 = (u[1::2] >> np.uint64(11)).astype(np.float64) * _INV53
        r = np.sqrt(-2.0 * np.log(u1))
        theta = (2.0 * np.pi) * u2
        z = np.empty(2 * pairs)
        z[0::2] = r * np.cos(theta)
        z[1::2] = r * np.sin(theta)
        z = loc + scale * z[:m]
        return float(z[0]) if n is None else z

    def integers(self, bound: int, n: int | None = None):
        """Uniform integers in [0, bound); bias is negligible for
        bound << 2**53."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        r = self.random(1 if n is None else n)
        out = np.minimum((r * bound).astype(np.int64), bound - 1)
        return int(out[0]) if n is None else out

    def permutation(self, n: int) -> np.ndarray:
        """Random permutation of range(n): stable argsort of random keys."""
        return np.argsort(self.u64(n), kind="stable")

    def subset(self, n: int, k: int) -> np.ndarray:
        """k distinct indices from range(n), in ascending order."""
        return np.sort(self.permutation(n)[:k])

    def poisson(self, lam: float) -> int:
        """Poisson draw: Knuth's product method for small means, rounded
        normal approximation above 30 (adequate for synthetic counts)."""
        if lam < 0:
            raise ValueError("lam must be nonnegative")
        if lam == 0:
            return 0
        if lam <= 30.0:
            limit = math.exp(-lam)
            k, p = 0, 1.0
            while True:
                p *= self.random()
                if p < limit:
                    return k
                k += 1
        return max(0, int(round(lam + math.sqrt(lam) * self.normal())))
