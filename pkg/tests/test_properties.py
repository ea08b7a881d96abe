import math

import numpy as np
import pytest
from scipy import integrate

from aphbxii.burrxii import (
    AphbxiiParams,
    aphbxii_cdf,
    aphbxii_pdf,
    aphbxii_quantile,
    sample,
)
from aphbxii.exceptions import (
    MomentExistenceError,
    ParameterError,
    SeriesConvergenceError,
)
from aphbxii.properties import (
    average_waiting_time,
    bonferroni,
    central_moment,
    cumulant,
    incomplete_moment,
    lorenz,
    mean_deviation_about_mean,
    mean_deviation_about_median,
    mean_residual_life,
    mgf,
    moment_report,
    order_statistic_pdf,
    pwm,
    raw_moment,
    renyi_entropy,
    series_cross_check,
    series_raw_moment,
    shannon_entropy,
    tsallis_entropy,
)

UNIT = AphbxiiParams.from_values(1.0, 1.0, 1.0, 1.0, 1.0)
#: moment-table column 2: alpha=1.5, c=2.5, upsilon=1.5, phi=2.5, eta=3.0
TABLED = AphbxiiParams.from_values(1.5, 2.5, 1.5, 2.5, 3.0)
#: series-friendly set with c inside (0, 2)
SERIESABLE = AphbxiiParams.from_values(1.8, 0.8, 2.5, 1.0, 2.5)


def test_density_normalizes():
    total, err = integrate.quad(
        lambda x: aphbxii_pdf(x, TABLED), 0.0, np.inf, limit=200
    )
    assert total == pytest.approx(1.0, abs=1e-8)


def test_raw_moment_against_sampling():
    mu = raw_moment(1, SERIESABLE)
    draws = sample(200_000, SERIESABLE, seed=11)
    se = draws.std(ddof=1) / math.sqrt(draws.size)
    assert abs(draws.mean() - mu) < 4 * se


def test_moment_existence_boundary():
    thin = AphbxiiParams.from_values(1.5, 0.8, 1.2, 1.0, 1.5)  # phi*eta = 1.5
    assert raw_moment(1, thin) > 0
    with pytest.raises(MomentExistenceError):
        raw_moment(2, thin)


def test_incomplete_moment_limits():
    full = raw_moment(1, TABLED)
    assert incomplete_moment(1, 1e6, TABLED) == pytest.approx(full, rel=1e-6)
    assert incomplete_moment(1, 1e-9, TABLED) == pytest.approx(0.0, abs=1e-9)


def test_central_moment_and_cumulant_relations():
    report = moment_report(TABLED)
    mu = report.raw_moments[0]
    assert central_moment(2, TABLED) == pytest.approx(report.variance, rel=1e-9)
    assert cumulant(1, TABLED) == pytest.approx(mu, rel=1e-12)
    assert cumulant(2, TABLED) == pytest.approx(report.variance, rel=1e-9)
    k3 = cumulant(3, TABLED)
    assert k3 == pytest.approx(central_moment(3, TABLED), rel=1e-8)


def test_lorenz_bonferroni_shape():
    ps = np.linspace(0.05, 0.95, 10)
    lvals = [lorenz(p, SERIESABLE) for p in ps]
    assert all(0 < lv < p for lv, p in zip(lvals, ps))
    assert np.all(np.diff(lvals) > 0)
    assert lorenz(1.0, SERIESABLE) == 1.0
    assert bonferroni(0.5, SERIESABLE) == pytest.approx(lorenz(0.5, SERIESABLE) / 0.5)
    with pytest.raises(ParameterError):
        lorenz(0.0, SERIESABLE)


def test_mean_deviations_against_quadrature():
    mu = raw_moment(1, SERIESABLE)
    med = aphbxii_quantile(0.5, SERIESABLE)
    direct_mean, _ = integrate.quad(
        lambda x: abs(x - mu) * aphbxii_pdf(x, SERIESABLE), 0, np.inf, limit=200
    )
    direct_med, _ = integrate.quad(
        lambda x: abs(x - med) * aphbxii_pdf(x, SERIESABLE), 0, np.inf, limit=200
    )
    assert mean_deviation_about_mean(SERIESABLE) == pytest.approx(direct_mean, rel=1e-6)
    assert mean_deviation_about_median(SERIESABLE) == pytest.approx(direct_med, rel=1e-6)


def test_mean_residual_life_at_zero_is_mean():
    assert mean_residual_life(0.0, SERIESABLE) == pytest.approx(
        raw_moment(1, SERIESABLE), rel=1e-9
    )


def test_waiting_time_plus_residual_decomposition():
    t = 1.3
    mu = raw_moment(1, SERIESABLE)
    cdf = aphbxii_cdf(t, SERIESABLE)
    lhs = cdf * (t - average_waiting_time(t, SERIESABLE)) + (1 - cdf) * (
        t + mean_residual_life(t, SERIESABLE)
    )
    assert lhs == pytest.approx(mu, rel=1e-9)


@pytest.mark.parametrize("r", [0, 1, 2, 3, 5])
def test_pwm_uniformity_identity(r):
    assert pwm(0, r, SERIESABLE) == pytest.approx(1.0 / (r + 1), abs=1e-8)


def test_order_statistic_density_normalizes():
    val, _ = integrate.quad(
        lambda x: order_statistic_pdf(x, 2, 5, SERIESABLE), 0, np.inf, limit=200
    )
    assert val == pytest.approx(1.0, abs=1e-7)


def test_order_statistic_rank_validation():
    with pytest.raises(ParameterError):
        order_statistic_pdf(1.0, 0, 5, SERIESABLE)


def test_mgf_truncation_reports_tail_term():
    value, tail = mgf(0.5, TABLED)
    manual = sum(
        0.5 ** r * raw_moment(r, TABLED) / math.factorial(r) for r in range(1, 7)
    )
    assert value == pytest.approx(1.0 + manual, rel=1e-9)
    assert tail > 0


def test_renyi_entropy_unit_case_log3():
    """With all parameters 1 the density is (1+x)^-2 and the order-2 Renyi
    entropy is log 3 exactly."""
    assert renyi_entropy(2.0, UNIT) == pytest.approx(math.log(3.0), abs=1e-9)


def test_entropy_identities():
    rho = 1.7
    r = renyi_entropy(rho, SERIESABLE)
    t = tsallis_entropy(rho, SERIESABLE)
    # both derive from the same density-power integral
    implied = (math.exp((1.0 - rho) * r) - 1.0) / (1.0 - rho)
    assert t == pytest.approx(implied, abs=1e-10)


def test_shannon_entropy_is_renyi_limit():
    h = shannon_entropy(SERIESABLE)
    near = renyi_entropy(1.0 + 1e-6, SERIESABLE)
    assert h == pytest.approx(near, abs=1e-4)


def test_renyi_order_validation():
    with pytest.raises(ParameterError):
        renyi_entropy(1.0, SERIESABLE)
    with pytest.raises(ParameterError):
        renyi_entropy(-0.5, SERIESABLE)


def test_series_matches_quadrature_inside_region():
    cmp = series_cross_check(SERIESABLE, r=1)
    assert cmp.converged
    assert abs(cmp.discrepancy) <= 1e-5


def test_series_rejects_c_outside_region():
    with pytest.raises(SeriesConvergenceError):
        series_raw_moment(1, TABLED)  # c = 2.5


def test_series_alpha_one_branch():
    params = AphbxiiParams.from_values(1.0, 0.6, 1.4, 2.0, 2.0)
    value, _, converged = series_raw_moment(1, params)
    assert converged
    assert value == pytest.approx(raw_moment(1, params), abs=1e-8)
