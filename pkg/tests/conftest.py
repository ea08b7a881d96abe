import time

import pytest

from aphbxii.datasets import load_embedded
from aphbxii.estimation import FitConfig, fit

MODEL_NAMES = ("APHBXII", "HBXII", "APBXII", "MOBXII", "BXII")
DATASET_NAMES = ("kevlar", "cancer", "device")


class FitCache(dict):
    """Dataset -> model -> FitResult mapping that remembers its build time."""

    elapsed: float = 0.0


@pytest.fixture(scope="session")
def datasets():
    return {name: load_embedded(name) for name in DATASET_NAMES}


@pytest.fixture(scope="session")
def all_fits(datasets):
    """One full fit per (dataset, model), shared across the suite."""
    config = FitConfig(restarts=8, seed=1)
    out = FitCache()
    start = time.perf_counter()
    for dname, data in datasets.items():
        out[dname] = {m: fit(data, m, config) for m in MODEL_NAMES}
    out.elapsed = time.perf_counter() - start
    return out
