"""Estimator-consistency simulation harness.

Protocol: draw one large pseudo-population from the five-parameter model,
then for each sample size repeatedly subsample it without replacement, refit
the full model, and aggregate absolute bias, standard error, and mean squared
error per parameter. Everything is deterministic given the base seed; each
(cell, replication) owns a seed derived through ``numpy.random.SeedSequence``
so replications are order-independent and could run concurrently.

The replication estimator is a local bounded-box maximum-likelihood fit: a
single Nelder-Mead pass over log-parameters warm-started at the truth,
constrained to a log-symmetric box around it, with estimates clamped to the
box edge when the optimizer runs into it. The box is part of the estimator
by design. The alpha coordinate of this family is nearly flat in the
likelihood (large alpha is compensated almost exactly by the other shapes),
so an unbounded fit would wander arbitrarily far along that ridge on a
sizable fraction of replications and the aggregates would measure optimizer
drift instead of estimator concentration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from .burrxii import AphbxiiParams, sample
from .datasets import Dataset
from .estimation import MODELS, PARAM_NAMES, loglik
from .exceptions import FitError, ParameterError

__all__ = ["McConfig", "McResult", "run_study"]


@dataclass(frozen=True)
class McConfig:
    true_params: AphbxiiParams
    population_size: int = 20000
    sample_sizes: tuple = (20, 50, 100, 150, 200, 250, 350)
    replications: int = 1000
    seed: int = 0
    #: half-width of the search box per coordinate, as a ratio to the true
    #: value (each estimate lies in [true/ratio, true*ratio])
    box_ratio: float = 100.0
    max_iter: int = 1000

    def __post_init__(self):
        if self.replications < 1:
            raise ParameterError("replications must be at least 1")
        if not self.sample_sizes or min(self.sample_sizes) < 1:
            raise ParameterError("sample sizes must be positive")
        if self.population_size < max(self.sample_sizes):
            raise ParameterError("population size must cover the largest sample size")
        if self.box_ratio <= 1.0:
            raise ParameterError("box ratio must exceed 1")


@dataclass(frozen=True)
class McResult:
    """AB/SE/MSE grids indexed by (sample size, parameter).

    AB is the mean absolute estimation error, SE the cross-replication
    standard deviation of the estimates (n-1 denominator), and MSE the mean
    squared error; MSE = SE^2 (R-1)/R + (mean signed bias)^2 holds exactly
    per cell when no replication was excluded. ``censored`` counts
    replications clamped at the search-box edge (included in aggregates);
    ``excluded`` counts outright fit failures (dropped from aggregates).
    """

    true_params: AphbxiiParams
    sample_sizes: tuple
    replications: int
    param_names: tuple = PARAM_NAMES
    ab: np.ndarray = field(default=None)
    se: np.ndarray = field(default=None)
    mse: np.ndarray = field(default=None)
    mean_bias: np.ndarray = field(default=None)
    excluded: tuple = ()
    censored: tuple = ()

    def cell(self, n: int, param: str) -> dict:
        i = self.sample_sizes.index(n)
        j = self.param_names.index(param)
        return {
            "ab": float(self.ab[i, j]),
            "se": float(self.se[i, j]),
            "mse": float(self.mse[i, j]),
        }


def _fit_replication(data: Dataset, z_true, log_ratio, max_iter):
    """Bounded local fit; returns (estimate, hit_edge) or (None, False)."""
    model = MODELS["APHBXII"]

    def objective(z):
        if np.any(np.abs(z - z_true) > log_ratio):
            return 1e10
        return -loglik(data, model, np.exp(z))

    res = minimize(
        objective,
        z_true,
        method="Nelder-Mead",
        options={
            "maxiter": max_iter,
            "xatol": 1e-4,
            "fatol": 1e-6,
            "adaptive": True,
        },
    )
    if not np.all(np.isfinite(res.x)) or not math.isfinite(res.fun):
        return None, False
    z = np.clip(res.x, z_true - log_ratio, z_true + log_ratio)
    return np.exp(z), bool(np.any(z != res.x) or np.any(np.abs(z - z_true) >= log_ratio))


def run_study(config: McConfig) -> McResult:
    """Run the full subsample-and-refit study.

    Per-replication fit failures are excluded from the aggregates and
    counted; a cell where more than half the replications fail aborts the
    study, since its aggregates would be meaningless.
    """
    true_theta = config.true_params.as_array()
    z_true = np.log(true_theta)
    log_ratio = math.log(config.box_ratio)
    population = sample(
        config.population_size,
        config.true_params,
        seed=np.random.SeedSequence([config.seed, 0xB0B]),
    )

    n_sizes = len(config.sample_sizes)
    ab = np.empty((n_sizes, 5))
    se = np.empty((n_sizes, 5))
    mse = np.empty((n_sizes, 5))
    mean_bias = np.empty((n_sizes, 5))
    excluded = []
    censored = []

    for i, n in enumerate(config.sample_sizes):
        errors = []
        failed = 0
        clamped = 0
        for rep in range(config.replications):
            rng = np.random.default_rng(np.random.SeedSequence([config.seed, i, rep]))
            idx = rng.choice(config.population_size, size=n, replace=False)
            data = Dataset(name=f"mc_n{n}_r{rep}", values=population[idx])
            theta, hit_edge = _fit_replication(data, z_true, log_ratio, config.max_iter)
            if theta is None:
                failed += 1
                continue
            clamped += hit_edge
            errors.append(theta - true_theta)
        if failed > config.replications // 2:
            raise FitError(
                f"more than half the replications failed at n={n} "
                f"({failed}/{config.replications})"
            )
        err = np.array(errors)
        r = err.shape[0]
        # column-wise compensated sums keep aggregation order-independent
        for j in range(5):
            col = err[:, j]
            ab[i, j] = math.fsum(np.abs(col)) / r
            mean_bias[i, j] = math.fsum(col) / r
            mse[i, j] = math.fsum(col ** 2) / r
            if r > 1:
                se[i, j] = math.sqrt(math.fsum((col - mean_bias[i, j]) ** 2) / (r - 1))
            else:
                se[i, j] = 0.0
        excluded.append(failed)
        censored.append(clamped)

    return McResult(
        true_params=config.true_params,
        sample_sizes=tuple(config.sample_sizes),
        replications=config.replications,
        ab=ab,
        se=se,
        mse=mse,
        mean_bias=mean_bias,
        excluded=tuple(excluded),
        censored=tuple(censored),
    )
