"""Figure rendering for the CLI report paths.

Every renderer writes a PNG next to the delimited output and returns the
path. The Agg backend is forced so rendering works headless; nothing here is
needed by the numerical layer, which stays import-safe without a display.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .burrxii import AphbxiiParams, aphbxii_cdf, aphbxii_hrf, aphbxii_pdf
from .datasets import Dataset, ttt_transform

__all__ = [
    "render_curves",
    "render_fit_overlay",
    "render_ttt",
    "render_mc_trends",
]

_DPI = 130


def _grid(params: AphbxiiParams, points: int = 400) -> np.ndarray:
    from .burrxii import aphbxii_quantile

    upper = aphbxii_quantile(0.995, params)
    return np.linspace(upper / points, upper, points)


def render_curves(param_sets: dict, path) -> str:
    """Density and hazard panels for one or more labelled parameter sets."""
    fig, (ax_pdf, ax_hrf) = plt.subplots(1, 2, figsize=(9, 3.6))
    for label, params in param_sets.items():
        x = _grid(params)
        ax_pdf.plot(x, aphbxii_pdf(x, params), label=label, lw=1.2)
        ax_hrf.plot(x, aphbxii_hrf(x, params), label=label, lw=1.2)
    ax_pdf.set_title("density")
    ax_hrf.set_title("hazard rate")
    for ax in (ax_pdf, ax_hrf):
        ax.set_xlabel("x")
        ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    return str(path)


def render_fit_overlay(data: Dataset, fitted: dict, path) -> str:
    """Histogram with fitted densities and empirical vs fitted CDFs."""
    x = data.sorted_values()
    n = x.size
    grid = np.linspace(x.min() * 0.5, x.max(), 400)
    fig, (ax_pdf, ax_cdf) = plt.subplots(1, 2, figsize=(9, 3.6))
    ax_pdf.hist(x, bins="auto", density=True, color="0.85", edgecolor="0.6")
    ax_cdf.step(x, np.arange(1, n + 1) / n, where="post", color="0.3",
                lw=1.0, label="empirical")
    for label, params in fitted.items():
        ax_pdf.plot(grid, aphbxii_pdf(grid, params), lw=1.2, label=label)
        ax_cdf.plot(grid, aphbxii_cdf(grid, params), lw=1.2, label=label)
    ax_pdf.set_title(f"{data.name}: fitted densities")
    ax_cdf.set_title(f"{data.name}: fitted CDFs")
    for ax in (ax_pdf, ax_cdf):
        ax.set_xlabel("x")
        ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    return str(path)


def render_ttt(data: Dataset, path) -> str:
    """Scaled total-time-on-test curve against the diagonal."""
    pts = ttt_transform(data)
    fig, ax = plt.subplots(figsize=(4.2, 4.0))
    ax.plot([0, 1], [0, 1], "--", color="0.6", lw=1.0)
    ax.plot(np.concatenate([[0.0], pts[:, 0]]), np.concatenate([[0.0], pts[:, 1]]),
            lw=1.3)
    ax.set_xlabel("i/n")
    ax.set_ylabel("scaled TTT")
    ax.set_title(f"TTT plot: {data.name}")
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    return str(path)


def render_mc_trends(result, path) -> str:
    """MSE against sample size, one line per parameter, log scale."""
    fig, ax = plt.subplots(figsize=(5.2, 3.8))
    for j, p in enumerate(result.param_names):
        ax.plot(result.sample_sizes, result.mse[:, j], marker="o", ms=3,
                lw=1.1, label=p)
    ax.set_yscale("log")
    ax.set_xlabel("sample size")
    ax.set_ylabel("MSE")
    ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    return str(path)
