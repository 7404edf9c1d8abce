# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

import math

import numpy as np
import pandas as pd
import pytest
from scipy import stats

from echelon import (
    InsufficientDataError,
    RankDeficiencyError,
    SCALES,
    ValidationError,
)
from echelon.econ import (
    INTERCEPT,
    DesignSpec,
    Industry,
    PriceSeries,
    RiskRow,
    build_design_matrix,
    ff12_industry,
    load_panel,
    log_returns,
    ols_fit,
    past_vol,
    period_label,
    realized_vol,
    render_risk_table,
    risk_frame,
    risk_regression,
    stars,
    t_pvalue,
    vif,
    window_prices,
)
from echelon.labels import MbtiVector
from echelon.synth import SynthConfig, gen_panel, gen_world, write_world


def series(prices, start="2020-01-06"):
    return PriceSeries(pd.bdate_range(start, periods=len(prices)).values, prices)


# prices


def test_realized_vol_uses_the_days_after_the_call():
    prices = [10.0, 11.0, 10.5, 10.0, 10.8, 11.2, 11.0, 11.9, 12.5, 12.0]
    s = series(prices)
    expected = np.std(np.diff(np.log(prices[3:8])), ddof=1)
    assert realized_vol(s, "2020-01-08") == pytest.approx(expected, rel=1e-12)
    assert list(window_prices(s, "2020-01-08", 5).prices) == prices[3:8]


def test_past_window_excludes_the_call_day():
    prices = list(np.linspace(10.0, 20.0, 80))
    s = series(prices)
    call = s.dates[70]
    window = window_prices(s, call, 63, before=True)
    assert len(window) == 63
    assert window.dates[-1] == s.dates[69]
    assert past_vol(s, call) == pytest.approx(np.std(np.diff(np.log(prices[7:70])), ddof=1))


def test_short_windows_are_reported_with_the_call():
    s = series([10.0, 10.5, 11.0, 10.0])
    with pytest.raises(InsufficientDataError) as info:
        realized_vol(s, s.dates[1], call_id="C1")
    assert info.value.call_id == "C1"
    with pytest.raises(InsufficientDataError):
        log_returns(series([10.0]))


def test_price_series_validation_and_lookup(tmp_path):
    with pytest.raises(ValidationError):
        PriceSeries(np.array(["2020-01-02", "2020-01-01"], dtype="datetime64[D]"), [1.0, 2.0])
    with pytest.raises(ValidationError):
        series([1.0, 0.0])
    s = series([10.0, 12.0, 11.0])
    assert s.last_before("2020-01-06") is None
    assert s.last_before("2020-01-08") == 12.0
    assert s.scaled(2.0).prices.tolist() == [20.0, 24.0, 22.0]
    s.to_csv(tmp_path / "p.csv")
    loaded = PriceSeries.from_csv(tmp_path / "p.csv")
    np.testing.assert_array_equal(loaded.dates, s.dates)
    np.testing.assert_array_equal(loaded.prices, s.prices)


def test_price_scale_does_not_change_volatility():
    rng = np.random.default_rng(0)
    s = series(40.0 * np.exp(np.cumsum(0.01 * rng.standard_normal(30))))
    assert realized_vol(s.scaled(3.5), s.dates[10]) == pytest.approx(realized_vol(s, s.dates[10]))


# industries


@pytest.mark.parametrize(
    "sic, industry",
    [
        (2011, Industry.NODUR),
        ("3711", Industry.DURBL),
        (3312, Industry.MANUF),
        (1311, Industry.ENRGY),
        (2821, Industry.CHEMS),
        (3571, Industry.BUSEQ),
        (7372, Industry.BUSEQ),
        (4813, Industry.TELCM),
        (4911, Industry.UTILS),
        (5411, Industry.SHOPS),
        (2834, Industry.HLTH),
        (6021, Industry.MONEY),
        (8711, Industry.OTHER),
        ("0100", Industry.NODUR),
        (9999, Industry.OTHER),
    ],
)
def test_ff12_industry(sic, industry):
    assert ff12_industry(sic) is industry


@pytest.mark.parametrize("sic", [True, "12345", "abc", -1, 10000, 3.5])
def test_ff12_rejects_non_codes(sic):
    with pytest.raises(ValidationError):
        ff12_industry(sic)


def test_industry_labels_and_periods():
    assert Industry.HLTH.label == "Healthcare"
    assert int(Industry.OTHER) == 12
    assert period_label("2019-08-14") == "2019Q3"


# design matrix


def risk_row(i, **changes):
    values = dict(
        call_id=f"c{i}",
        vola_post=0.02 + 0.001 * (i % 7),
        age=50.0 + i % 11,
        gender=i % 2,
        past_vola=0.01 + 0.002 * (i % 5),
        size=1e9 * (1 + i % 13),
        volume=1e5 * (1 + i % 3),
        leverage=0.3 + 0.01 * (i % 4),
        spread=0.001 * (1 + i % 6),
        btm=0.5 + 0.1 * (i % 9),
        sue=0.01 * (i % 8),
        roa=0.05 + 0.01 * (i % 10),
        industry=Industry.MONEY if i % 2 else Industry.HLTH,
        period="2020Q1" if i % 3 else "2019Q4",
        mbti=MbtiVector(0.1 + 0.05 * (i % 9), 0.5, 0.2 + 0.03 * (i % 7), 0.4 + 0.01 * (i % 5)),
    )
    values.update(changes)
    return RiskRow(**values)


def test_design_matrix_columns_and_standardization():
    rows = [risk_row(i) for i in range(40)]
    design = build_design_matrix(rows, DesignSpec(mbti=True, demographics=True))
    assert design.columns[0] == INTERCEPT
    assert design.columns[1:9] == (
        "past_vola", "size", "volume", "leverage", "spread", "btm", "sue", "roa",
    )
    assert design.columns[-2:] == ("industry_MONEY", "period_2020Q1")
    assert design.reference_levels == {"industry": "HLTH", "period": "2019Q4"}
    assert "sn" in design.dropped_columns
    np.testing.assert_allclose(design.X[:, 0], 1.0)
    np.testing.assert_allclose(design.X[:, 1:].mean(axis=0), 0.0, atol=1e-12)
    np.testing.assert_allclose(design.X[:, 1:].std(axis=0, ddof=1), 1.0)
    size = np.log1p([row.size for row in rows])
    np.testing.assert_allclose(
        design.X[:, design.columns.index("size")], (size - size.mean()) / size.std(ddof=1)
    )
    assert design.y.std(ddof=1) == pytest.approx(1.0)


def test_design_matrix_can_keep_dummies_raw():
    rows = [risk_row(i) for i in range(30)]
    design = build_design_matrix(rows, DesignSpec(standardize_dummies=False))
    assert set(np.unique(design.X[:, -1])) == {0.0, 1.0}


def test_design_matrix_filters_and_rejects():
    rows = [risk_row(i) for i in range(20)] + [risk_row(99, btm=0.0)]
    design = build_design_matrix(rows)
    assert design.n == 20
    assert design.n_filtered == 1
    with pytest.raises(ValidationError):
        build_design_matrix([risk_row(0, btm=-1.0)])
    with pytest.raises(ValidationError):
        build_design_matrix([risk_row(i, period="2020Q1") for i in range(10)])
    with pytest.raises(ValidationError):
        RiskRow(**{**risk_row(0).__dict__, "gender": 2})
    with pytest.raises(ValidationError):
        risk_row(0, mbti=None).value("ei")


# least squares


@pytest.mark.parametrize("seed", range(50))
def test_ols_matches_the_normal_equations(seed):
    rng = np.random.default_rng(seed)
    n, k = 40 + seed, 1 + seed % 5
    X = np.hstack([np.ones((n, 1)), rng.standard_normal((n, k))])
    y = X @ rng.standard_normal(k + 1) + rng.standard_normal(n)
    report = ols_fit(X, y)

    inverse = np.linalg.inv(X.T @ X)
    beta = inverse @ X.T @ y
    residual = y - X @ beta
    sigma2 = residual @ residual / (n - k - 1)
    se = np.sqrt(np.diag(inverse) * sigma2)
    t = beta / se
    r2 = 1.0 - residual @ residual / np.sum((y - y.mean()) ** 2)

    np.testing.assert_allclose(report.beta, beta, atol=1e-10)
    np.testing.assert_allclose(report.se, se, rtol=1e-8)
    np.testing.assert_allclose(report.t, t, rtol=1e-8)
    np.testing.assert_allclose(report.p, 2.0 * stats.t.sf(np.abs(t), n - k - 1), rtol=1e-6, atol=1e-300)
    assert report.r2 == pytest.approx(r2)
    assert report.adj_r2 == pytest.approx(1.0 - (1.0 - r2) * (n - 1) / (n - k - 1))
    assert report.k == k
    assert report.has_intercept
    assert report.df_resid == n - k - 1


def test_adding_regressors_never_lowers_r2():
    rng = np.random.default_rng(12)
    X = np.hstack([np.ones((80, 1)), rng.standard_normal((80, 5))])
    y = X[:, 1] - 0.5 * X[:, 2] + rng.standard_normal(80)
    r2 = [ols_fit(X[:, :k], y).r2 for k in range(2, 7)]
    assert all(later >= earlier - 1e-12 for earlier, later in zip(r2, r2[1:]))


def test_ols_without_intercept_uses_uncentered_r2():
    rng = np.random.default_rng(9)
    X = rng.standard_normal((30, 2))
    y = X @ [1.0, -1.0] + 0.1 * rng.standard_normal(30)
    report = ols_fit(X, y, ["a", "b"])
    residual = y - X @ report.beta
    assert not report.has_intercept
    assert report.k == 2
    assert report.r2 == pytest.approx(1.0 - residual @ residual / (y @ y))
    assert report["b"].beta == pytest.approx(-1.0, abs=0.1)
    frame = report.to_frame()
    assert list(frame.columns) == ["regressor", "beta", "se", "t", "p", "stars"]


def test_ols_rejects_rank_deficient_and_short_designs():
    rng = np.random.default_rng(1)
    a = rng.standard_normal(20)
    X = np.column_stack([np.ones(20), a, 2.0 * a])
    with pytest.raises(RankDeficiencyError) as info:
        ols_fit(X, rng.standard_normal(20), ["const", "a", "a2"])
    assert len(info.value.columns) == 1
    assert info.value.columns[0] in ("a", "a2")
    with pytest.raises(ValidationError):
        ols_fit(np.ones((2, 2)), [1.0, 2.0])


def test_t_pvalue_and_stars():
    t = np.array([0.0, 1.5, -2.5, 4.0, np.inf])
    np.testing.assert_allclose(t_pvalue(t, 17), 2.0 * stats.t.sf(np.abs(t), 17), rtol=1e-10)
    assert [stars(p) for p in (0.0005, 0.001, 0.005, 0.05, 0.051)] == ["***", "***", "**", "*", ""]


def test_vif_for_two_regressors():
    rng = np.random.default_rng(4)
    a = rng.standard_normal(200)
    b = 0.6 * a + rng.standard_normal(200)
    report = vif(np.column_stack([np.ones(200), a, b]), ["const", "a", "b"])
    r = np.corrcoef(a, b)[0, 1]
    assert report.columns == ("a", "b")
    assert report["a"] == pytest.approx(1.0 / (1.0 - r * r))
    assert report["b"] == pytest.approx(1.0 / (1.0 - r * r))
    assert not report.flagged


def test_vif_flags_collinear_columns(caplog):
    a = np.arange(10.0)
    report = vif(np.column_stack([np.ones(10), a, 3.0 * a + 1.0]))
    assert math.isinf(report["x1"])
    assert set(report.flagged) == {"x1", "x2"}
    assert report.to_frame()["collinear"].tolist() == [True, True]
    assert "collinear" in caplog.text


# risk regression


def test_planted_personality_effects_are_recovered():
    recovered = 0
    jp_starred = 0
    for seed in range(20):
        result = risk_regression(gen_panel(SynthConfig(seed=seed), 20000))
        joint = result.joint
        ei, sn, tf, jp = (joint[scale.value] for scale in SCALES)
        if ei.beta > 0 and sn.beta < 0 and tf.beta > 0 and max(ei.p, sn.p, tf.p) <= 0.01:
            recovered += 1
        if jp.p <= 0.05:
            jp_starred += 1
        assert joint.adj_r2 > result.baseline.adj_r2
    assert recovered >= 19
    assert jp_starred <= 1


def test_null_personality_is_not_significant():
    config = SynthConfig(seed=1, mbti_betas={scale: 0.0 for scale in SCALES})
    joint = risk_regression(gen_panel(config, 5000)).joint
    assert all(joint[scale.value].p > 0.001 for scale in SCALES)


def test_risk_regression_tables():
    rows = gen_panel(SynthConfig(seed=2), 600)
    result = risk_regression(rows)
    assert [name for name, _ in result.reports] == ["FIN", "FIN+MBTI"]
    assert "ei" not in result.baseline and "ei" in result.joint
    assert "age" in result.joint and "gender" in result.joint
    table = render_risk_table(result)
    for text in ("FIN+MBTI", "Industry FE", "Period FE", "Adj. R2", "past_vola"):
        assert text in table
    assert "industry_" not in table
    frame = risk_frame(result)
    assert set(frame["model"]) == {"FIN", "FIN+MBTI"}
    assert "const" not in result.vif.columns
    only_fin = risk_regression(rows, include_mbti=False, period_effects=False)
    assert only_fin.joint is None
    assert not any(c.startswith("period_") for c in only_fin.baseline.columns)
    with pytest.raises(ValidationError):
        risk_regression([risk_row(i, mbti=None) for i in range(20)])


def test_gen_panel_rejects_tiny_panels():
    with pytest.raises(ValidationError):
        gen_panel(n_rows=1)


# panel files


@pytest.fixture(scope="module")
def tiny_world():
    return gen_world(SynthConfig(seed=5, n_ceos=3, calls_per_ceo=2, doc_length=60))


def test_panel_rebuilds_the_generated_rows(tiny_world, tmp_path):
    paths = write_world(tiny_world, tmp_path)
    mbti = {row.call_id: row.mbti for row in tiny_world.rows}
    rows = load_panel(paths["panel"], mbti)
    assert [row.call_id for row in rows] == [row.call_id for row in tiny_world.rows]
    for loaded, planted in zip(rows, tiny_world.rows):
        assert loaded.vola_post == pytest.approx(planted.vola_post, rel=1e-9)
        assert loaded.past_vola == pytest.approx(planted.past_vola, rel=1e-9)
        assert loaded.size == pytest.approx(planted.size, rel=1e-9)
        assert loaded.industry is planted.industry
        assert loaded.period == planted.period
        assert loaded.mbti == planted.mbti


def test_panel_without_price_history(tiny_world, tmp_path, caplog):
    paths = write_world(tiny_world, tmp_path)
    frame = pd.read_csv(paths["panel"], dtype={"sic": str})
    frame.loc[0, "date"] = "1990-01-02"
    frame.to_csv(paths["panel"], index=False, float_format="%.17g")
    with pytest.raises(InsufficientDataError):
        load_panel(paths["panel"])
    rows = load_panel(paths["panel"], skip_incomplete=True)
    assert len(rows) == len(tiny_world.rows) - 1
    assert all(row.mbti is None for row in rows)
    assert "skipping" in caplog.text


def test_panel_missing_columns(tmp_path):
    path = tmp_path / "panel.csv"
    path.write_text("call_id,date\nc1,2020-01-02\n", encoding="utf-8")
    with pytest.raises(ValidationError, match="missing columns"):
        load_panel(path)


def test_panel_blank_number_names_line_and_field(tiny_world, tmp_path):
    paths = write_world(tiny_world, tmp_path)
    frame = pd.read_csv(paths["panel"], dtype={"sic": str, "call_id": str})
    frame["leverage"] = frame["leverage"].astype(object)
    frame.loc[1, "leverage"] = ""
    frame.to_csv(paths["panel"], index=False, float_format="%.17g")
    with pytest.raises(ValidationError, match=r"line 3 .*leverage"):
        load_panel(paths["panel"])
