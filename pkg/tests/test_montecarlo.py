import numpy as np
import pytest

from aphbxii.burrxii import AphbxiiParams
from aphbxii.estimation import PARAM_NAMES
from aphbxii.exceptions import ParameterError
from aphbxii.montecarlo import McConfig, McResult, run_study

TRUE = AphbxiiParams.from_values(1.8, 0.8, 2.5, 1.0, 2.5)


def _small_config(**overrides):
    base = dict(
        true_params=TRUE,
        population_size=2000,
        sample_sizes=(30, 120),
        replications=6,
        seed=13,
    )
    base.update(overrides)
    return McConfig(**base)


@pytest.fixture(scope="module")
def small_result():
    return run_study(_small_config())


def test_config_validation():
    with pytest.raises(ParameterError):
        _small_config(replications=0)
    with pytest.raises(ParameterError):
        _small_config(sample_sizes=())
    with pytest.raises(ParameterError):
        _small_config(population_size=50)
    with pytest.raises(ParameterError):
        _small_config(box_ratio=1.0)


def test_result_shapes(small_result):
    assert small_result.ab.shape == (2, 5)
    assert small_result.param_names == PARAM_NAMES
    assert len(small_result.excluded) == 2
    cell = small_result.cell(30, "phi")
    assert set(cell) == {"ab", "se", "mse"}


def test_aggregates_nonnegative(small_result):
    assert np.all(small_result.ab >= 0)
    assert np.all(small_result.se >= 0)
    assert np.all(small_result.mse >= 0)


def test_mse_identity_when_no_exclusions(small_result):
    for i in range(2):
        r = small_result.replications - small_result.excluded[i]
        implied = (
            small_result.se[i] ** 2 * (r - 1) / r + small_result.mean_bias[i] ** 2
        )
        np.testing.assert_allclose(implied, small_result.mse[i], atol=1e-10)


def test_deterministic_given_seed():
    a = run_study(_small_config())
    b = run_study(_small_config())
    np.testing.assert_array_equal(a.mse, b.mse)
    np.testing.assert_array_equal(a.ab, b.ab)


def test_seed_changes_results():
    a = run_study(_small_config())
    b = run_study(_small_config(seed=14))
    assert not np.array_equal(a.mse, b.mse)


def test_single_replication_population_sample():
    """R=1 with n=N fits the whole population once; AB is the absolute
    estimation error of that single fit."""
    config = McConfig(
        true_params=TRUE,
        population_size=400,
        sample_sizes=(400,),
        replications=1,
        seed=2,
    )
    result = run_study(config)
    assert result.excluded == (0,)
    np.testing.assert_allclose(result.ab[0], np.abs(result.mean_bias[0]))
    np.testing.assert_allclose(result.mse[0], result.ab[0] ** 2, rtol=1e-12)
    assert np.all(result.se[0] == 0.0)
