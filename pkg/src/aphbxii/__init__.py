"""Alpha-power Harris-tilted lifetime distributions with a Burr XII baseline.

The package provides exact evaluation (density, CDF, quantile, hazard,
sampling) for the five-parameter APHBXII distribution and its nested
submodels, distributional properties by adaptive quadrature, maximum
likelihood fitting with goodness-of-fit comparison, a simulation harness for
estimator consistency, and three embedded benchmark reliability datasets.
"""

from .burrxii import (
    AphbxiiParams,
    BurrXii,
    BurrXiiParams,
    QuantileSummary,
    aphbxii_cdf,
    aphbxii_chrf,
    aphbxii_hrf,
    aphbxii_logpdf,
    aphbxii_pdf,
    aphbxii_quantile,
    aphbxii_rhrf,
    aphbxii_sf,
    burrxii_cdf,
    burrxii_pdf,
    quantile_summary,
    sample,
)
from .datasets import (
    Dataset,
    DescriptiveStats,
    EMBEDDED_NAMES,
    describe,
    load_csv,
    load_embedded,
    save_csv,
    ttt_transform,
)
from .estimation import (
    MODELS,
    PARAM_NAMES,
    FitConfig,
    FitResult,
    ModelSpec,
    fit,
    loglik,
    lr_test,
    score,
)
from .exceptions import (
    AphbxiiError,
    DataError,
    FitError,
    IntegrationError,
    MomentExistenceError,
    ParameterError,
    RangeError,
    SeriesConvergenceError,
    SupportError,
    UnboundedQuantileError,
)
from .family import ALPHA_ONE_EPS, BaselineDistribution, FamilyParams, harris_cdf
from .gof import GofReport, edf_statistics, gof_report, information_criteria, ks_statistic
from .montecarlo import McConfig, McResult, run_study
from .properties import (
    MomentReport,
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

__version__ = "0.1.0"
