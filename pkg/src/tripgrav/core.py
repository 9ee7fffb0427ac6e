"""Shared domain types: counties, flows, featurized records, dataset variants.

No I/O and no learning here; every type is immutable after construction and
safe to share across workers.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ParseError, SchemaError, ValidationError

N_COUNTY_FEATURES = 27
FEATURE_NAMES = tuple(f"F{i}" for i in range(1, N_COUNTY_FEATURES + 1))

# Zero-based positions of selected features within the F1..F27 vector.
POPULATION = 26        # F27
COLLEGE_RATE = 25      # F26
MEDIAN_INCOME = 21     # F22
COMMERCE_POI = 8       # F9
EDUCATION_POI = 7      # F8
TERMINALS = 18         # F19
UNEMPLOYMENT = 20      # F21

# Feature indices holding counts (nonnegative), true percentage rates
# (bounded [0, 100]) and ratios/levels (nonnegative, unbounded).  F23 is a
# percentage *of the state median income* and routinely exceeds 100, so it
# is validated as nonnegative only.
COUNT_INDICES = tuple(range(20))
PERCENT_INDICES = (20, 23, 24, 25)        # F21, F24, F25, F26
NONNEGATIVE_INDICES = (21, 22)            # F22 income, F23 % of state median

WEEKDAY = "weekday"
WEEKEND = "weekend"
ALL_DAYS = "all"  # day-aggregated records carry no day type
DAY_TYPES = (WEEKDAY, WEEKEND, ALL_DAYS)


class DatasetVariant(Enum):
    """The two model-input schemas."""

    DATASET1 = "dataset1"   # populations + distance + time
    DATASET2 = "dataset2"   # full origin/destination feature concatenation

    @classmethod
    def parse(cls, name: str) -> "DatasetVariant":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValidationError(f"unknown dataset variant {name!r}", module="core_model") from None


def schema_width(variant: DatasetVariant) -> int:
    """Width of the x vector for a variant (4 or 56)."""
    if variant is DatasetVariant.DATASET1:
        return 4
    if variant is DatasetVariant.DATASET2:
        return 2 * N_COUNTY_FEATURES + 2
    raise ValidationError(f"unknown dataset variant {variant!r}", module="core_model")


# Fixed x-vector layout, documented and tested as a contract:
#   Dataset 1: [P_origin, P_dest, distance, time]
#   Dataset 2: [origin F1..F27, dest F1..F27, distance, time]
D1_P_ORIGIN, D1_P_DEST, D1_DISTANCE, D1_TIME = 0, 1, 2, 3
D2_ORIGIN_START = 0
D2_DEST_START = N_COUNTY_FEATURES
D2_DISTANCE = 2 * N_COUNTY_FEATURES
D2_TIME = 2 * N_COUNTY_FEATURES + 1
D2_P_ORIGIN = D2_ORIGIN_START + POPULATION
D2_P_DEST = D2_DEST_START + POPULATION


def feature_labels(variant: DatasetVariant) -> list[str]:
    """Column labels in x-vector order ("F27-O", "F26-D", "Distance", ...)."""
    if variant is DatasetVariant.DATASET1:
        return ["F27-O", "F27-D", "Distance", "Time"]
    return (
        [f"{name}-O" for name in FEATURE_NAMES]
        + [f"{name}-D" for name in FEATURE_NAMES]
        + ["Distance", "Time"]
    )


def population_distance_columns(variant: DatasetVariant) -> tuple[int, int, int]:
    """(origin population, dest population, distance) column indices."""
    if variant is DatasetVariant.DATASET1:
        return D1_P_ORIGIN, D1_P_DEST, D1_DISTANCE
    return D2_P_ORIGIN, D2_P_DEST, D2_DISTANCE


def day_type(date: dt.date | str) -> str:
    """'weekend' for Saturday/Sunday, else 'weekday' (proleptic Gregorian)."""
    if isinstance(date, str):
        date = parse_date(date)
    return WEEKEND if date.weekday() >= 5 else WEEKDAY


def parse_date(text: str) -> dt.date:
    try:
        return dt.date.fromisoformat(text)
    except ValueError:
        raise ParseError(f"invalid ISO date {text!r}", module="core_model") from None


def _frozen_array(values, length: int, what: str) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64).copy()
    if arr.shape != (length,):
        raise SchemaError(f"{what} must have length {length}, got shape {arr.shape}", module="core_model")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class CountyId:
    state: str
    fips: str

    def __post_init__(self):
        if len(self.state) != 2:
            raise ValidationError(f"state must be a 2-letter code, got {self.state!r}", module="core_model")
        if len(self.fips) != 5 or not self.fips.isdigit():
            raise ValidationError(f"fips must be 5 decimal digits, got {self.fips!r}", module="core_model")


@dataclass(frozen=True)
class CountyFeatures:
    """The 27-value feature vector for one county.

    Cells may be NaN before imputation; ``validate`` enforces the
    post-imputation invariants.
    """

    id: CountyId
    f: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "f", _frozen_array(self.f, N_COUNTY_FEATURES, "county feature vector"))

    def validate(self) -> None:
        f = self.f
        if np.isnan(f).any():
            missing = [FEATURE_NAMES[i] for i in np.flatnonzero(np.isnan(f))]
            raise ValidationError(f"county {self.id.fips}: unimputed values in {missing}", module="core_model")
        for i in COUNT_INDICES + NONNEGATIVE_INDICES:
            if f[i] < 0:
                raise ValidationError(f"county {self.id.fips}: {FEATURE_NAMES[i]} must be >= 0", module="core_model")
        for i in PERCENT_INDICES:
            if not 0.0 <= f[i] <= 100.0:
                raise ValidationError(f"county {self.id.fips}: {FEATURE_NAMES[i]} must be in [0, 100]", module="core_model")
        if not f[POPULATION] > 0:
            raise ValidationError(f"county {self.id.fips}: population (F27) must be > 0", module="core_model")

    @property
    def population(self) -> float:
        return float(self.f[POPULATION])


@dataclass(frozen=True)
class FlowRecord:
    """One dated origin->destination flow observation."""

    origin: CountyId
    dest: CountyId
    date: dt.date
    flow: float

    def __post_init__(self):
        if not np.isfinite(self.flow) or self.flow < 0:
            raise ValidationError(
                f"flow {self.origin.fips}->{self.dest.fips} on {self.date}: must be finite and >= 0",
                module="core_model",
            )


@dataclass(frozen=True)
class Separation:
    """Distance (miles) and travel time (minutes) for an ordered pair."""

    distance: float
    time: float

    def __post_init__(self):
        if self.distance < 0 or self.time < 0:
            raise ValidationError("distance and time must be >= 0", module="core_model")


@dataclass(frozen=True)
class GravityParams:
    """Scale and exponents of the generalized gravity law."""

    k: float
    lam: float
    alpha: float
    beta: float

    def __post_init__(self):
        values = (self.k, self.lam, self.alpha, self.beta)
        if not all(np.isfinite(v) for v in values):
            raise ValidationError("gravity parameters must be finite", module="core_model")
        if self.k <= 0:
            raise ValidationError("gravity scale k must be > 0", module="core_model")

    @classmethod
    def traditional(cls, beta: float) -> "GravityParams":
        """The classic form: unit scale, unit population exponents."""
        return cls(k=1.0, lam=1.0, alpha=1.0, beta=beta)


@dataclass(frozen=True)
class FeaturizedRecord:
    """One model-input row: x vector, target, and segmentation metadata."""

    origin: CountyId
    dest: CountyId
    x: np.ndarray
    y: float
    day_type: str
    distance_raw: float

    def __post_init__(self):
        arr = np.asarray(self.x, dtype=np.float64).copy()
        arr.setflags(write=False)
        object.__setattr__(self, "x", arr)
        if not np.isfinite(self.y):
            raise ValidationError("target y must be finite", module="core_model")
        if self.day_type not in DAY_TYPES:
            raise ValidationError(f"day_type must be one of {DAY_TYPES}, got {self.day_type!r}", module="core_model")

    @property
    def pair(self) -> tuple[CountyId, CountyId]:
        return (self.origin, self.dest)


def build_record(
    origin: CountyFeatures,
    dest: CountyFeatures,
    sep: Separation,
    y: float,
    day: str,
    variant: DatasetVariant,
) -> FeaturizedRecord:
    """Assemble the x vector for a pair under the fixed layout contract."""
    if variant is DatasetVariant.DATASET1:
        x = np.array([origin.population, dest.population, sep.distance, sep.time])
    else:
        x = np.concatenate([origin.f, dest.f, [sep.distance, sep.time]])
    return FeaturizedRecord(
        origin=origin.id, dest=dest.id, x=x, y=float(y), day_type=day, distance_raw=float(sep.distance)
    )


class Dataset:
    """Immutable list of featurized records plus fitted scaling state.

    Records hold raw (unscaled) values; ``X``/``y`` return the scaled
    matrices once a scaler is attached by ``train_test_split``.
    """

    def __init__(self, records, variant: DatasetVariant, scaler=None):
        records = tuple(records)
        width = schema_width(variant)
        for r in records:
            if r.x.shape != (width,):
                raise SchemaError(
                    f"record {r.origin.fips}->{r.dest.fips} has width {r.x.shape[0]}, expected {width}",
                    module="core_model",
                )
        self.records = records
        self.variant = variant
        self.scaler = scaler
        self._cache: dict = {}

    def __len__(self) -> int:
        return len(self.records)

    def _cached(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def x_raw(self) -> np.ndarray:
        return self._cached("x_raw", lambda: np.array([r.x for r in self.records]))

    @property
    def y_raw(self) -> np.ndarray:
        return self._cached("y_raw", lambda: np.array([r.y for r in self.records]))

    @property
    def distances_raw(self) -> np.ndarray:
        return self._cached("dist", lambda: np.array([r.distance_raw for r in self.records]))

    @property
    def day_types(self) -> list[str]:
        return self._cached("days", lambda: [r.day_type for r in self.records])

    @property
    def pairs(self) -> list[tuple[str, str]]:
        return self._cached("pairs", lambda: [(r.origin.fips, r.dest.fips) for r in self.records])

    def _require_scaler(self):
        if self.scaler is None:
            raise ValidationError("dataset has no fitted scaler; split it first", module="core_model")
        return self.scaler

    @property
    def X(self) -> np.ndarray:
        """Scaled feature matrix (n, width)."""
        return self._cached("X", lambda: self._require_scaler().transform_x(self.x_raw))

    @property
    def y(self) -> np.ndarray:
        """Scaled target vector (log1p then train-minmax)."""
        return self._cached("y", lambda: self._require_scaler().transform_y(self.y_raw))

    def with_scaler(self, scaler) -> "Dataset":
        return Dataset(self.records, self.variant, scaler)
