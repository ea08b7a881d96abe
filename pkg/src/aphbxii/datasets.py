"""Benchmark lifetime datasets, descriptive statistics, and the TTT transform.

Three classic reliability datasets ship with the package: stress-rupture
failure times of Kevlar 49/epoxy strands at 90% stress (n=101, hours),
remission times of bladder-cancer patients (n=128, months), and failure
times of 50 devices on a life test. They are embedded verbatim and
checksum-pinned in the test suite.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DataError

__all__ = [
    "Dataset",
    "DescriptiveStats",
    "EMBEDDED_NAMES",
    "load_embedded",
    "describe",
    "ttt_transform",
    "load_csv",
    "save_csv",
]

_KEVLAR = (
    0.02, 0.09, 0.18, 0.19, 0.20, 0.23, 0.24, 0.24, 0.29, 0.34, 0.35,
    0.36, 0.38, 0.40, 0.42, 0.43, 0.52, 0.54, 0.56, 0.60, 0.60, 0.63,
    0.65, 0.10, 0.12, 0.67, 0.68, 0.72, 0.72, 0.72, 0.73, 0.03, 0.04,
    0.79, 0.79, 0.80, 0.80, 0.83, 0.85, 0.90, 0.92, 0.10, 0.95, 0.99,
    1.00, 1.01, 1.02, 1.03, 1.05, 1.10, 1.10, 0.07, 1.11, 1.15, 1.18,
    1.20, 1.29, 1.31, 1.33, 1.34, 1.40, 0.01, 1.43, 0.11, 0.11, 1.45,
    1.50, 1.51, 1.52, 0.06, 0.08, 1.53, 1.54, 1.54, 0.03, 1.55, 1.58,
    1.60, 1.63, 1.64, 1.80, 0.01, 1.80, 1.81, 2.02, 2.05, 0.09, 0.13,
    2.14, 2.17, 2.33, 0.02, 0.05, 3.03, 3.03, 0.07, 3.34, 4.20, 4.69,
    0.02, 7.89,
)

_CANCER = (
    23.63, 0.40, 2.23, 1.40, 3.02, 4.34, 5.71, 7.93, 11.79, 18.10, 1.46,
    4.40, 5.85, 8.26, 11.98, 19.13, 1.76, 3.25, 4.50, 6.25, 8.37, 12.02,
    2.02, 3.31, 4.51, 6.54, 8.53, 12.03, 20.28, 2.02, 3.36, 6.76, 12.07,
    21.73, 2.07, 3.36, 6.93, 8.65, 12.63, 22.69, 0.08, 2.09, 3.48, 4.87,
    6.94, 8.66, 13.11, 0.20, 3.52, 4.98, 6.97, 9.02, 13.29, 2.26, 3.57,
    5.06, 7.09, 9.22, 13.80, 25.74, 0.50, 2.46, 3.64, 5.09, 7.26, 9.47,
    14.24, 25.82, 0.51, 2.54, 3.70, 5.17, 7.28, 10.06, 14.77, 26.31, 0.81,
    2.62, 3.82, 5.32, 7.32, 10.06, 14.77, 32.15, 2.64, 3.88, 5.32, 7.39,
    10.34, 14.83, 34.26, 0.90, 2.69, 4.18, 5.34, 7.59, 10.66, 15.96,
    36.66, 1.05, 2.69, 4.23, 5.41, 7.62, 10.75, 16.62, 43.01, 1.19, 2.75,
    4.26, 5.41, 7.63, 17.12, 46.12, 1.26, 2.83, 4.33, 5.49, 7.66, 11.25,
    17.14, 79.05, 1.35, 2.87, 5.62, 7.87, 11.64, 17.36,
)

_DEVICE = (
    0.1, 0.2, 1, 1, 1, 1, 1, 2, 3, 6, 7, 11, 12, 18, 18, 18, 18, 18, 21,
    32, 36, 40, 45, 46, 47, 50, 55, 60, 63, 63, 67, 67, 67, 67, 72, 75,
    79, 82, 82, 83, 84, 84, 84, 85, 85, 85, 85, 85, 86, 86,
)

_EMBEDDED = {
    "kevlar": (_KEVLAR, "Kevlar 49/epoxy strand stress-rupture failure times (hours)"),
    "cancer": (_CANCER, "bladder cancer remission times (months)"),
    "device": (_DEVICE, "failure times of 50 devices on a life test"),
}

EMBEDDED_NAMES = tuple(_EMBEDDED)


@dataclass(frozen=True)
class Dataset:
    """Immutable vector of strictly positive observations with provenance."""

    name: str
    values: np.ndarray
    source: str = ""

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.size == 0:
            raise DataError("dataset must be nonempty")
        if not np.all(np.isfinite(values)) or np.any(values <= 0):
            raise DataError("all observations must be strictly positive and finite")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return int(self.values.size)

    def sorted_values(self) -> np.ndarray:
        return np.sort(self.values)


@dataclass(frozen=True)
class DescriptiveStats:
    minimum: float
    q1: float
    median: float
    mean: float
    q3: float
    maximum: float
    variance: float
    skewness: float
    kurtosis: float


def load_embedded(name: str) -> Dataset:
    """One of the bundled datasets: 'kevlar', 'cancer', or 'device'."""
    try:
        values, source = _EMBEDDED[name]
    except KeyError:
        raise DataError(
            f"unknown dataset {name!r}; choose from {', '.join(EMBEDDED_NAMES)}"
        ) from None
    return Dataset(name=name, values=np.array(values), source=source)


def describe(dataset: Dataset) -> DescriptiveStats:
    """Location/scale/shape summary.

    Conventions (pinned by the test suite): quartiles by linear interpolation
    of order statistics, variance with the n-1 denominator, skewness
    m3/m2**1.5 and non-excess kurtosis m4/m2**2 with population central
    moments.
    """
    x = dataset.values
    m = float(x.mean())
    q1, med, q3 = np.quantile(x, [0.25, 0.5, 0.75])
    m2 = float(np.mean((x - m) ** 2))
    if m2 == 0.0:
        skew = kurt = 0.0
    else:
        skew = float(np.mean((x - m) ** 3)) / m2 ** 1.5
        kurt = float(np.mean((x - m) ** 4)) / m2 ** 2
    return DescriptiveStats(
        minimum=float(x.min()),
        q1=float(q1),
        median=float(med),
        mean=m,
        q3=float(q3),
        maximum=float(x.max()),
        variance=float(x.var(ddof=1)) if len(x) > 1 else 0.0,
        skewness=skew,
        kurtosis=kurt,
    )


def ttt_transform(dataset: Dataset) -> np.ndarray:
    """Scaled total-time-on-test curve.

    Returns an (n, 2) array of points (i/n, T_i) with
    T_i = (sum of the i smallest values + (n-i) * x_(i)) / (total sum);
    the last point is always (1, 1) and T is nondecreasing.
    """
    x = dataset.sorted_values()
    n = x.size
    i = np.arange(1, n + 1)
    cum = np.cumsum(x)
    t = (cum + (n - i) * x) / cum[-1]
    return np.column_stack([i / n, t])


def load_csv(path, column: str | None = None) -> Dataset:
    """Read one numeric column (or single-column file) of positive values.

    Validation failures carry the 1-based data row index.
    """
    rows = []
    try:
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            rows = [row for row in reader if row and any(cell.strip() for cell in row)]
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc
    if not rows:
        raise DataError(f"{path} contains no data")

    col_idx = 0
    start = 0
    header = rows[0]
    if column is not None:
        if column in header:
            col_idx = header.index(column)
            start = 1
        else:
            raise DataError(f"column {column!r} not found in {path}")
    else:
        # tolerate a single header line on a plain one-column file
        try:
            float(header[0])
        except ValueError:
            start = 1

    values = []
    for rownum, row in enumerate(rows[start:], start=1):
        cell = row[col_idx].strip() if col_idx < len(row) else ""
        try:
            v = float(cell)
        except ValueError:
            raise DataError(f"{path} row {rownum}: non-numeric value {cell!r}") from None
        if not math.isfinite(v) or v <= 0:
            raise DataError(f"{path} row {rownum}: observations must be positive, got {v}")
        values.append(v)
    if not values:
        raise DataError(f"{path} contains no observations")
    return Dataset(name=str(path), values=np.array(values), source=f"csv:{path}")


def save_csv(dataset: Dataset, path, column: str = "value") -> None:
    """Write the dataset as a single named column."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([column])
        for v in dataset.values:
            writer.writerow([repr(float(v))])
