import hashlib

import numpy as np
import pytest

from aphbxii.datasets import (
    Dataset,
    EMBEDDED_NAMES,
    describe,
    load_csv,
    load_embedded,
    save_csv,
    ttt_transform,
)
from aphbxii.exceptions import DataError

#: sha256 of the comma-joined repr of each embedded value vector, pinning
#: the data byte-for-byte
_CHECKSUMS = {
    "kevlar": "2c450bccb3119c5e4e1e124288ee735f92d15e1a1739141990c7c0b9068c7df4",
    "cancer": "4ce4a997f16fc321c2457ce28e7b8e3ffbe1da3caa277743d3d58d1530330d9d",
    "device": "e46dd4a3f4bc1c373bf26684cbf6727127983879e7310c91d98390949cc76d18",
}

_SIZES = {"kevlar": 101, "cancer": 128, "device": 50}


def _digest(values) -> str:
    joined = ",".join(repr(float(v)) for v in values)
    return hashlib.sha256(joined.encode()).hexdigest()


@pytest.mark.parametrize("name", EMBEDDED_NAMES)
def test_embedded_checksums_and_sizes(name):
    ds = load_embedded(name)
    assert len(ds) == _SIZES[name]
    assert _digest(ds.values) == _CHECKSUMS[name]


def test_embedded_ranges():
    kev = load_embedded("kevlar")
    assert kev.values.min() == pytest.approx(0.01)
    assert kev.values.max() == pytest.approx(7.89)
    assert load_embedded("cancer").values.max() == pytest.approx(79.05)
    dev = load_embedded("device")
    assert dev.values.min() == pytest.approx(0.1)
    assert dev.values.max() == pytest.approx(86.0)


def test_unknown_embedded_name():
    with pytest.raises(DataError):
        load_embedded("nonexistent")


def test_embedded_values_immutable():
    ds = load_embedded("kevlar")
    with pytest.raises(ValueError):
        ds.values[0] = 99.0


@pytest.mark.parametrize(
    "name, mean, variance, skewness, kurtosis",
    [
        ("kevlar", 1.025, 1.253, 3.002, 16.709),
        ("device", 45.686, 1078.153, -0.138, 1.414),
    ],
)
def test_descriptive_statistics_golden(name, mean, variance, skewness, kurtosis):
    stats = describe(load_embedded(name))
    assert stats.mean == pytest.approx(mean, abs=0.01)
    assert stats.variance == pytest.approx(variance, abs=0.01 * variance)
    assert stats.skewness == pytest.approx(skewness, abs=0.01)
    assert stats.kurtosis == pytest.approx(kurtosis, abs=0.01)


def test_describe_quartile_ordering():
    for name in EMBEDDED_NAMES:
        s = describe(load_embedded(name))
        assert s.minimum <= s.q1 <= s.median <= s.q3 <= s.maximum


def test_describe_constant_data():
    s = describe(Dataset("const", np.full(5, 3.0)))
    assert s.variance == 0.0
    assert s.q1 == s.median == s.q3 == 3.0


def test_dataset_validation():
    with pytest.raises(DataError):
        Dataset("empty", np.array([]))
    with pytest.raises(DataError):
        Dataset("neg", np.array([1.0, -2.0]))
    with pytest.raises(DataError):
        Dataset("nan", np.array([1.0, float("nan")]))


def test_ttt_hand_case():
    pts = ttt_transform(Dataset("abc", np.array([1.0, 2.0, 3.0])))
    np.testing.assert_allclose(pts[:, 1], [0.5, 5.0 / 6.0, 1.0])


def test_ttt_properties_random_inputs():
    rng = np.random.default_rng(5)
    for _ in range(20):
        data = Dataset("r", rng.uniform(0.01, 10.0, size=rng.integers(2, 60)))
        pts = ttt_transform(data)
        assert pts[-1, 0] == pytest.approx(1.0)
        assert pts[-1, 1] == pytest.approx(1.0)
        assert np.all(np.diff(pts[:, 1]) >= -1e-12)


def test_ttt_exponential_near_diagonal():
    rng = np.random.default_rng(42)
    data = Dataset("expo", rng.exponential(1.0, size=20000))
    pts = ttt_transform(data)
    assert np.max(np.abs(pts[:, 1] - pts[:, 0])) < 0.05


def test_csv_round_trip(tmp_path):
    path = tmp_path / "kevlar.csv"
    original = load_embedded("kevlar")
    save_csv(original, path)
    again = load_csv(path, column="value")
    np.testing.assert_array_equal(original.values, again.values)


def test_csv_plain_single_column(tmp_path):
    path = tmp_path / "plain.csv"
    path.write_text("0.5\n1.5\n")
    ds = load_csv(path)
    np.testing.assert_allclose(ds.values, [0.5, 1.5])


def test_csv_errors_carry_row_numbers(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("-1.0\n")
    with pytest.raises(DataError, match="row 1"):
        load_csv(path)
    path.write_text("value\n2.0\nabc\n")
    with pytest.raises(DataError, match="row 2"):
        load_csv(path, column="value")


def test_csv_missing_column_and_file(tmp_path):
    path = tmp_path / "cols.csv"
    path.write_text("a,b\n1,2\n")
    with pytest.raises(DataError, match="not found"):
        load_csv(path, column="c")
    with pytest.raises(DataError):
        load_csv(tmp_path / "nope.csv")
