"""Command-line interface.

Subcommands: ``fit`` (model comparison on a dataset), ``props`` (quantile,
moment, and entropy report for a parameter vector), ``simulate`` (the
subsample-and-refit consistency study), ``ttt`` (total-time-on-test
coordinates), and ``plotdata`` (plot-ready series for densities, hazards,
and fitted overlays). Each report path writes delimited or JSON output plus
a rendered PNG figure, all atomically, into the output directory.

Exit codes: 0 success, 2 usage or parameter error, 3 data error,
4 numerical failure.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import __version__
from .burrxii import (
    AphbxiiParams,
    aphbxii_cdf,
    aphbxii_hrf,
    aphbxii_pdf,
    aphbxii_quantile,
    quantile_summary,
)
from .datasets import EMBEDDED_NAMES, load_csv, load_embedded, ttt_transform
from .estimation import MODELS, FitConfig, fit, lr_test
from .exceptions import AphbxiiError, DataError, ParameterError
from .gof import gof_report
from .montecarlo import McConfig, run_study
from .properties import (
    mean_residual_life,
    moment_report,
    renyi_entropy,
    shannon_entropy,
)
from .report import (
    fit_table,
    gof_table,
    lr_table,
    mc_table,
    write_csv,
    write_json,
)

__all__ = ["main", "SIMULATION_SETS"]

#: true parameter vectors of the simulation study, as (alpha, c, upsilon,
#: phi, eta)
SIMULATION_SETS = {
    1: (1.8, 0.8, 2.5, 1.0, 2.5),
    2: (2.2, 0.6, 1.5, 1.2, 1.8),
    3: (1.5, 0.4, 3.0, 0.8, 3.0),
    4: (2.5, 0.7, 2.0, 1.5, 2.0),
}

_MODEL_ORDER = ("APHBXII", "HBXII", "APBXII", "MOBXII", "BXII")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aphbxii",
        description="Alpha-power Harris-tilted Burr XII lifetime modeling toolkit",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument(
            "--out",
            default=os.environ.get("APHBXII_OUTPUT_DIR", "."),
            help="output directory (default: $APHBXII_OUTPUT_DIR or the "
            "working directory)",
        )
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument(
            "--no-plots",
            action="store_true",
            help="skip PNG rendering, write only the delimited output",
        )

    def add_data(p):
        p.add_argument(
            "--data",
            required=True,
            help=f"embedded dataset ({', '.join(EMBEDDED_NAMES)}) or a CSV path",
        )
        p.add_argument("--column", help="CSV column name when --data is a file")

    def add_params(p, required=True):
        for name in ("alpha", "c", "upsilon", "phi", "eta"):
            p.add_argument(f"--{name}", type=float, required=required)

    p_fit = sub.add_parser("fit", help="fit models and compare their fit quality")
    add_data(p_fit)
    p_fit.add_argument(
        "--models",
        default="all",
        help="comma-separated model names or 'all' "
        f"(choices: {', '.join(_MODEL_ORDER)})",
    )
    p_fit.add_argument("--seed", type=int, default=0)
    p_fit.add_argument("--restarts", type=int, default=8)
    add_common(p_fit)

    p_props = sub.add_parser("props", help="distributional properties report")
    add_params(p_props)
    p_props.add_argument(
        "--rho",
        type=float,
        action="append",
        default=None,
        help="Renyi entropy order (repeatable)",
    )
    p_props.add_argument(
        "--mrl-grid",
        type=float,
        nargs="*",
        default=(),
        help="time points for the mean residual life",
    )
    add_common(p_props)

    p_sim = sub.add_parser("simulate", help="subsample-and-refit consistency study")
    group = p_sim.add_mutually_exclusive_group(required=False)
    group.add_argument(
        "--set",
        type=int,
        dest="param_set",
        help=f"built-in true-parameter set ({min(SIMULATION_SETS)}-"
        f"{max(SIMULATION_SETS)})",
    )
    add_params(p_sim, required=False)
    p_sim.add_argument("--replications", type=int, default=200)
    p_sim.add_argument("--population", type=int, default=20000)
    p_sim.add_argument(
        "--sizes", type=int, nargs="*", default=(20, 50, 100, 150, 200, 250, 350)
    )
    p_sim.add_argument("--seed", type=int, default=0)
    add_common(p_sim)

    p_ttt = sub.add_parser("ttt", help="total-time-on-test coordinates")
    add_data(p_ttt)
    add_common(p_ttt)

    p_plot = sub.add_parser(
        "plotdata", help="plot-ready series for curves and fitted overlays"
    )
    p_plot.add_argument("--data", help="dataset for the fitted-overlay series")
    p_plot.add_argument("--column")
    p_plot.add_argument(
        "--models", default="APHBXII", help="models for the overlay series"
    )
    add_params(p_plot, required=False)
    p_plot.add_argument("--seed", type=int, default=0)
    p_plot.add_argument("--restarts", type=int, default=8)
    add_common(p_plot)

    return parser


def _load_dataset(args):
    if args.data in EMBEDDED_NAMES:
        return load_embedded(args.data)
    return load_csv(args.data, column=args.column)


def _model_names(spec: str) -> list:
    if spec.strip().lower() == "all":
        return list(_MODEL_ORDER)
    names = [s.strip().upper() for s in spec.split(",") if s.strip()]
    for name in names:
        if name not in MODELS:
            raise ParameterError(
                f"unknown model {name!r}; choose from {', '.join(_MODEL_ORDER)}"
            )
    return names


def _params_from_args(args) -> AphbxiiParams:
    values = [args.alpha, args.c, args.upsilon, args.phi, args.eta]
    if any(v is None for v in values):
        raise ParameterError("all five parameters (--alpha --c --upsilon --phi --eta) are required")
    return AphbxiiParams.from_values(*values)


def _emit(args, stem: str, header, rows):
    path = os.path.join(args.out, f"{stem}.{args.format}")
    if args.format == "csv":
        write_csv(path, header, rows)
    else:
        write_json(path, [dict(zip(header, row)) for row in rows])
    print(path)
    return path


def _cmd_fit(args) -> int:
    data = _load_dataset(args)
    names = _model_names(args.models)
    config = FitConfig(restarts=args.restarts, seed=args.seed)
    results = {name: fit(data, name, config) for name in names}
    reports = [gof_report(data, results[name]) for name in names]

    stem = f"{os.path.basename(data.name)}"
    _emit(args, f"{stem}_fit", *fit_table([results[n] for n in names]))
    _emit(args, f"{stem}_gof", *gof_table(reports))

    if "APHBXII" in results and len(names) > 1:
        tests = []
        for name in names:
            if name == "APHBXII":
                continue
            df = MODELS["APHBXII"].k - MODELS[name].k
            t = lr_test(results["APHBXII"], results[name], df)
            tests.append(
                {"null_model": name, "alternative": "APHBXII", **t}
            )
        _emit(args, f"{stem}_lr", *lr_table(tests))

    if not args.no_plots:
        from .plotting import render_fit_overlay

        fitted = {name: results[name].params() for name in names}
        print(
            render_fit_overlay(
                data, fitted, os.path.join(args.out, f"{stem}_fit.png")
            )
        )
    return 0


def _cmd_props(args) -> int:
    params = _params_from_args(args)
    qs = quantile_summary(params)
    rows = [
        ["q1", qs.q1],
        ["median", qs.q2],
        ["q3", qs.q3],
        ["galton_skewness", qs.galton_s],
        ["moors_kurtosis", qs.moors_k],
    ]
    mr = moment_report(params)
    for r, value in enumerate(mr.raw_moments, start=1):
        rows.append([f"raw_moment_{r}", value])
    for label, value in (
        ("variance", mr.variance),
        ("sd", mr.sd),
        ("cv", mr.cv),
        ("skewness", mr.skewness),
        ("kurtosis", mr.kurtosis),
    ):
        if value is not None:
            rows.append([label, value])
    rows.append(["shannon_entropy", shannon_entropy(params)])
    for rho in args.rho or ():
        rows.append([f"renyi_entropy_{rho:g}", renyi_entropy(rho, params)])
    for t in args.mrl_grid:
        rows.append([f"mean_residual_life_{t:g}", mean_residual_life(t, params)])
    _emit(args, "props", ["quantity", "value"], rows)

    if not args.no_plots:
        from .plotting import render_curves

        print(
            render_curves(
                {"requested": params}, os.path.join(args.out, "props_curves.png")
            )
        )
    return 0


def _cmd_simulate(args) -> int:
    if args.param_set is not None:
        if args.param_set not in SIMULATION_SETS:
            raise ParameterError(
                f"unknown parameter set {args.param_set}; choose from "
                f"{sorted(SIMULATION_SETS)}"
            )
        params = AphbxiiParams.from_values(*SIMULATION_SETS[args.param_set])
    else:
        params = _params_from_args(args)
    config = McConfig(
        true_params=params,
        population_size=args.population,
        sample_sizes=tuple(args.sizes),
        replications=args.replications,
        seed=args.seed,
    )
    result = run_study(config)
    _emit(args, "simulate", *mc_table(result))
    if not args.no_plots:
        from .plotting import render_mc_trends

        print(render_mc_trends(result, os.path.join(args.out, "simulate_mse.png")))
    return 0


def _cmd_ttt(args) -> int:
    data = _load_dataset(args)
    pts = ttt_transform(data)
    stem = os.path.basename(data.name)
    _emit(args, f"{stem}_ttt", ["i_over_n", "scaled_ttt"], pts.tolist())
    if not args.no_plots:
        from .plotting import render_ttt

        print(render_ttt(data, os.path.join(args.out, f"{stem}_ttt.png")))
    return 0


def _cmd_plotdata(args) -> int:
    wrote_something = False
    values = [args.alpha, args.c, args.upsilon, args.phi, args.eta]
    if all(v is not None for v in values):
        params = AphbxiiParams.from_values(*values)
        upper = aphbxii_quantile(0.995, params)
        x = np.linspace(upper / 400, upper, 400)
        rows = list(
            zip(x, aphbxii_pdf(x, params), aphbxii_hrf(x, params),
                aphbxii_cdf(x, params))
        )
        _emit(args, "curves", ["x", "pdf", "hrf", "cdf"], rows)
        if not args.no_plots:
            from .plotting import render_curves

            print(
                render_curves(
                    {"requested": params}, os.path.join(args.out, "curves.png")
                )
            )
        wrote_something = True

    if args.data:
        data = _load_dataset(args)
        stem = os.path.basename(data.name)
        names = _model_names(args.models)
        config = FitConfig(restarts=args.restarts, seed=args.seed)
        x = data.sorted_values()
        n = len(data)
        fitted = {}
        for name in names:
            result = fit(data, name, config)
            fitted[name] = result.params()
            u = aphbxii_cdf(x, fitted[name])
            rows = list(
                zip(
                    x,
                    (np.arange(1, n + 1) - 1) / n,
                    np.arange(1, n + 1) / n,
                    u,
                    aphbxii_pdf(x, fitted[name]),
                )
            )
            _emit(
                args,
                f"{stem}_{name.lower()}_overlay",
                ["x", "ecdf_lower", "ecdf_upper", "fitted_cdf", "fitted_pdf"],
                rows,
            )
        counts, edges = np.histogram(x, bins="auto", density=True)
        _emit(
            args,
            f"{stem}_histogram",
            ["bin_left", "bin_right", "density"],
            list(zip(edges[:-1], edges[1:], counts)),
        )
        from scipy.stats import gaussian_kde

        kde = gaussian_kde(x)
        grid = np.linspace(x.min(), x.max(), 200)
        _emit(args, f"{stem}_kde", ["x", "density"], list(zip(grid, kde(grid))))
        if not args.no_plots:
            from .plotting import render_fit_overlay

            print(
                render_fit_overlay(
                    data, fitted, os.path.join(args.out, f"{stem}_overlay.png")
                )
            )
        wrote_something = True

    if not wrote_something:
        raise ParameterError(
            "plotdata needs either the five parameters, --data, or both"
        )
    return 0


_COMMANDS = {
    "fit": _cmd_fit,
    "props": _cmd_props,
    "simulate": _cmd_simulate,
    "ttt": _cmd_ttt,
    "plotdata": _cmd_plotdata,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit code 2 for usage errors already; pass it through
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (AphbxiiError, FloatingPointError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
