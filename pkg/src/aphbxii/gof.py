"""Goodness-of-fit measures for comparing fitted lifetime models.

Nine measures per model: deviance at the optimum, four information criteria
(AIC, BIC, HQIC, CAIC), the modified Cramer-von Mises and Anderson-Darling
statistics, and the Kolmogorov-Smirnov distance with its asymptotic p-value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import kolmogorov, ndtr, ndtri

from .burrxii import aphbxii_cdf
from .datasets import Dataset
from .estimation import FitResult
from .exceptions import DataError, ParameterError

__all__ = [
    "EDF_VARIANTS",
    "GofReport",
    "information_criteria",
    "edf_statistics",
    "ks_statistic",
    "gof_report",
]

EDF_VARIANTS = ("classical", "normal_score")


def information_criteria(neg2loglik: float, k: int, n: int) -> dict:
    """AIC, BIC, HQIC and the corrected AIC from the deviance.

    CAIC is the small-sample corrected AIC and requires n > k + 1.
    """
    if k < 1 or n < 1:
        raise ParameterError("k and n must be positive")
    out = {
        "aic": neg2loglik + 2.0 * k,
        "bic": neg2loglik + k * math.log(n),
        "hqic": neg2loglik + 2.0 * k * math.log(math.log(n)),
    }
    if n - k - 1 <= 0:
        raise ParameterError("CAIC requires n > k + 1")
    out["caic"] = out["aic"] + 2.0 * k * (k + 1.0) / (n - k - 1.0)
    return out


def _check_levels(u) -> np.ndarray:
    u = np.sort(np.asarray(u, dtype=float))
    if u.size == 0:
        raise DataError("need at least one probability level")
    if np.any((u <= 0) | (u >= 1) | ~np.isfinite(u)):
        raise DataError("fitted CDF levels must lie strictly inside (0, 1)")
    return u


def edf_statistics(u, variant: str = "normal_score") -> dict:
    """Cramer-von Mises and Anderson-Darling statistics from fitted CDF levels.

    ``u`` holds F(x_i; theta_hat). The "classical" variant uses those levels
    directly. The "normal_score" variant (the reporting default) first maps
    them through the standard normal quantile, standardizes the scores with
    the sample mean and n-1 standard deviation, and maps back; it is the
    appropriate form when theta_hat was estimated from the same data. Both
    statistics carry their small-sample modification factors:
    W* = W^2 (1 + 0.5/n) and A* = A^2 (1 + 0.75/n + 2.25/n^2).
    """
    if variant not in EDF_VARIANTS:
        raise ParameterError(f"variant must be one of {EDF_VARIANTS}")
    u = _check_levels(u)
    n = u.size
    if variant == "normal_score":
        y = ndtri(u)
        z = (y - y.mean()) / y.std(ddof=1)
        u = np.sort(ndtr(z))
    i = np.arange(1, n + 1)
    w2 = float(np.sum((u - (2 * i - 1) / (2 * n)) ** 2) + 1.0 / (12 * n))
    a2 = float(-n - np.mean((2 * i - 1) * (np.log(u) + np.log1p(-u[::-1]))))
    return {
        "cvm": w2 * (1.0 + 0.5 / n),
        "ad": a2 * (1.0 + 0.75 / n + 2.25 / n ** 2),
        "variant": variant,
    }


def ks_statistic(u) -> dict:
    """Kolmogorov-Smirnov distance and its asymptotic p-value.

    D is the sup distance between the empirical CDF and the fitted levels;
    the p-value uses the limiting Kolmogorov distribution at sqrt(n) * D.
    """
    u = _check_levels(u)
    n = u.size
    i = np.arange(1, n + 1)
    d = float(max(np.max(i / n - u), np.max(u - (i - 1) / n)))
    return {"ks": d, "p_value": float(kolmogorov(math.sqrt(n) * d))}


@dataclass(frozen=True)
class GofReport:
    """The nine comparison measures for one fitted model."""

    model: str
    deviance: float
    aic: float
    bic: float
    hqic: float
    caic: float
    cvm: float
    ad: float
    ks: float
    ks_p_value: float
    edf_variant: str

    def as_row(self) -> tuple:
        """Measures in reporting order (deviance first, p-value last)."""
        return (
            self.deviance,
            self.aic,
            self.bic,
            self.hqic,
            self.caic,
            self.cvm,
            self.ad,
            self.ks,
            self.ks_p_value,
        )


def gof_report(
    data: Dataset, result: FitResult, variant: str = "normal_score"
) -> GofReport:
    """All nine measures for a fitted model on its data."""
    n = len(data)
    u = aphbxii_cdf(data.sorted_values(), result.params())
    ic = information_criteria(result.neg2loglik, result.k, n)
    edf = edf_statistics(u, variant)
    ks = ks_statistic(u)
    return GofReport(
        model=result.model,
        deviance=result.neg2loglik,
        aic=ic["aic"],
        bic=ic["bic"],
        hqic=ic["hqic"],
        caic=ic["caic"],
        cvm=edf["cvm"],
        ad=edf["ad"],
        ks=ks["ks"],
        ks_p_value=ks["p_value"],
        edf_variant=variant,
    )
