"""Serialization of analysis results to delimited and JSON files.

All writers are atomic: content goes to a temporary file in the target
directory first and is renamed into place, so a crashed run never leaves a
truncated file behind for downstream comparisons to trip over.
"""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile

import numpy as np

from .estimation import PARAM_NAMES, FitResult
from .gof import GofReport
from .montecarlo import McResult

__all__ = [
    "atomic_write",
    "write_csv",
    "write_json",
    "fit_table",
    "gof_table",
    "league_order",
    "lr_table",
    "mc_table",
]

GOF_COLUMNS = (
    "deviance",
    "aic",
    "bic",
    "hqic",
    "caic",
    "cvm",
    "ad",
    "ks",
    "ks_p_value",
)


def atomic_write(path, text: str) -> None:
    """Write text via temp-file-and-rename in the destination directory."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_csv(path, header, rows) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else v for v in row])
    atomic_write(path, buf.getvalue())


def write_json(path, payload) -> None:
    atomic_write(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def fit_table(results: list) -> tuple:
    """(header, rows) of estimates and standard errors per model."""
    header = ["model", "loglik", "converged"]
    for p in PARAM_NAMES:
        header += [p, f"se_{p}"]
    rows = []
    for r in results:
        row = [r.model, r.loglik, r.converged]
        for p in PARAM_NAMES:
            if p in r.estimates:
                row.append(r.estimates[p])
                row.append(None if r.std_errors is None else r.std_errors[p])
            else:
                row += [None, None]
        rows.append(row)
    return header, rows


def league_order(reports: list) -> list:
    """Models best-first: lowest deviance through KS, highest KS p-value.

    Implemented as the average rank across the nine measures (ascending for
    the first eight, descending for the p-value), which resolves the
    occasional disagreement among measures the same way a reader scanning
    the comparison table would.
    """

    def ranks(values, reverse):
        order = sorted(range(len(values)), key=lambda i: values[i], reverse=reverse)
        out = [0] * len(values)
        for rank, i in enumerate(order):
            out[i] = rank
        return out

    columns = list(zip(*(r.as_row() for r in reports)))
    totals = np.zeros(len(reports))
    for j, col in enumerate(columns):
        totals += ranks(col, reverse=(j == 8))
    return [reports[i] for i in np.argsort(totals, kind="stable")]


def gof_table(reports: list) -> tuple:
    """(header, rows) in the nine-measure comparison layout, best first."""
    header = ["model", *GOF_COLUMNS]
    rows = [[r.model, *r.as_row()] for r in league_order(reports)]
    return header, rows


def lr_table(tests: list) -> tuple:
    """(header, rows) for likelihood-ratio tests of nested reductions."""
    header = ["null_model", "alternative", "statistic", "df", "p_value"]
    rows = [
        [t["null_model"], t["alternative"], t["statistic"], t["df"], t["p_value"]]
        for t in tests
    ]
    return header, rows


def mc_table(result: McResult) -> tuple:
    """(header, rows): one row per sample size, AB/SE/MSE per parameter."""
    header = ["n"]
    for p in result.param_names:
        header += [f"ab_{p}", f"se_{p}", f"mse_{p}"]
    header += ["excluded", "censored"]
    rows = []
    for i, n in enumerate(result.sample_sizes):
        row = [n]
        for j in range(len(result.param_names)):
            row += [result.ab[i, j], result.se[i, j], result.mse[i, j]]
        row += [result.excluded[i], result.censored[i]]
        rows.append(row)
    return header, rows
