# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

import itertools
import math
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st
from scipy import sparse, stats

from echelon import (
    DivergenceError,
    ModelSelectionError,
    NotFoundError,
    SCALES,
    Scale,
    ValidationError,
)
from echelon.corpus import extract_ceo_document
from echelon.labels import build_label_table
from echelon.model import (
    BoxCoxTransform,
    Candidate,
    FeatureConfig,
    Instance,
    MlpConfig,
    MlpModel,
    PART_NAMES,
    Split,
    SvrModel,
    SvrParams,
    as_csr,
    baseline_reports,
    boxcox_apply,
    boxcox_fit,
    boxcox_invert,
    evaluate,
    evaluate_model,
    explain_linear,
    fit_model,
    group_shuffle_split,
    instances_from,
    kendall_tau,
    load_model,
    log_likelihood,
    mean_absolute_error,
    pearson_r,
    save_model,
    select_model,
    spearman_rho,
    train_mlp,
    train_svr,
)
from echelon.synth import SynthConfig, gen_world


# brute-force reference metrics


def oracle_pearson(x, y):
    n = len(x)
    mx = sum(x) / n
    my = sum(y) / n
    sxy = sum((a - mx) * (b - my) for a, b in zip(x, y))
    sxx = sum((a - mx) ** 2 for a in x)
    syy = sum((b - my) ** 2 for b in y)
    return sxy / math.sqrt(sxx * syy)


def oracle_ranks(x):
    return [
        1 + sum(other < value for other in x) + (sum(other == value for other in x) - 1) / 2
        for value in x
    ]


def oracle_kendall(x, y):
    concordant = discordant = ties_x = ties_y = 0
    for i, j in itertools.combinations(range(len(x)), 2):
        dx = x[i] - x[j]
        dy = y[i] - y[j]
        ties_x += dx == 0
        ties_y += dy == 0
        if dx * dy > 0:
            concordant += 1
        elif dx * dy < 0:
            discordant += 1
    pairs = len(x) * (len(x) - 1) // 2
    return (concordant - discordant) / math.sqrt((pairs - ties_x) * (pairs - ties_y))


paired_values = st.lists(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), min_size=3, max_size=40
)


@settings(max_examples=200)
@given(paired_values)
def test_metrics_match_brute_force(pairs):
    x = [float(a) for a, _ in pairs]
    y = [float(b) for _, b in pairs]
    report = evaluate(x, y)
    assert report.n == len(x)
    assert report.mae == pytest.approx(sum(abs(a - b) for a, b in pairs) / len(pairs), abs=1e-12)
    if len(set(x)) == 1 or len(set(y)) == 1:
        assert math.isnan(report.r)
        assert math.isnan(report.rho)
        assert math.isnan(report.tau)
        assert not report.defined
        return
    assert report.r == pytest.approx(oracle_pearson(x, y), abs=1e-10)
    assert report.rho == pytest.approx(oracle_pearson(oracle_ranks(x), oracle_ranks(y)), abs=1e-10)
    assert report.tau == pytest.approx(oracle_kendall(x, y), abs=1e-10)


def test_metric_edge_cases():
    assert pearson_r([1, 2, 3], [2, 4, 6]) == 1.0
    assert pearson_r([1, 2, 3], [3, 2, 1]) == -1.0
    assert spearman_rho([1, 2, 3, 4], [1, 4, 9, 16]) == pytest.approx(1.0)
    assert kendall_tau([1, 2, 3], [3, 2, 1]) == pytest.approx(-1.0)
    assert mean_absolute_error([1.0], [3.0]) == 2.0
    with pytest.raises(ValidationError):
        evaluate([1, 2], [1, 2])
    with pytest.raises(ValidationError):
        evaluate([1, 2, 3], [1, 2])


# Box-Cox


def test_boxcox_recovers_log_on_lognormal_samples():
    for seed in range(50):
        y = np.random.default_rng(seed).lognormal(0.0, 2.0, size=200)
        lmbda = boxcox_fit(y).lmbda
        assert abs(lmbda) <= 0.15, seed
        grid = np.arange(-1.0, 1.0005, 0.001)
        best = grid[int(np.argmax([stats.boxcox_llf(g, y) for g in grid]))]
        assert lmbda == pytest.approx(best, abs=1e-2), seed


def test_log_likelihood_matches_scipy():
    y = np.random.default_rng(3).uniform(0.05, 1.0, size=50)
    for lmbda in (-1.5, 0.0, 0.4, 2.0):
        assert log_likelihood(y, lmbda) == pytest.approx(stats.boxcox_llf(lmbda, y), rel=1e-9)


def test_boxcox_round_trip_and_rank_invariance():
    rng = np.random.default_rng(11)
    y = rng.beta(2.0, 5.0, size=300)
    prediction = np.clip(y + 0.1 * rng.standard_normal(300), 0.01, 1.0)
    transform = boxcox_fit(y)
    assert np.max(np.abs(boxcox_invert(transform, boxcox_apply(transform, y)) - y)) < 1e-9
    ty = boxcox_apply(transform, y)
    tp = boxcox_apply(transform, prediction)
    assert kendall_tau(ty, tp) == pytest.approx(kendall_tau(y, prediction), abs=1e-12)
    assert spearman_rho(ty, tp) == pytest.approx(spearman_rho(y, prediction), abs=1e-12)


def test_boxcox_zero_lambda_is_log():
    transform = BoxCoxTransform(0.0)
    np.testing.assert_allclose(boxcox_apply(transform, [1.0, math.e]), [0.0, 1.0])
    assert BoxCoxTransform.from_dict(BoxCoxTransform(0.25, 0.5).to_dict()) == BoxCoxTransform(
        0.25, 0.5
    )


@pytest.mark.parametrize(
    "values",
    [[0.5, 0.6], [0.5, 0.5, 0.5], [0.2, 0.0, 0.4], [0.2, -1.0, 0.4], [0.1, math.nan, 0.3]],
)
def test_boxcox_fit_rejects(values):
    with pytest.raises(ValidationError):
        boxcox_fit(values)


def test_boxcox_shift_and_invert_range():
    transform = boxcox_fit([0.0, 0.25, 0.5, 1.0], shift=1.0)
    assert transform.shift == 1.0
    assert boxcox_invert(transform, boxcox_apply(transform, [0.0]))[0] == pytest.approx(0.0)
    with pytest.raises(ValidationError):
        boxcox_invert(BoxCoxTransform(1.0), [-2.0])
    with pytest.raises(ValidationError):
        boxcox_apply(BoxCoxTransform(1.0), [0.0])


# splitting

group_layouts = st.lists(st.integers(1, 6), min_size=3, max_size=30)


@settings(max_examples=100)
@given(group_layouts, st.integers(0, 2**16))
def test_group_split_is_disjoint_and_close_to_target(sizes, seed):
    groups = [f"g{k}" for k, size in enumerate(sizes) for _ in range(size)]
    split = group_shuffle_split(groups, (0.8, 0.1, 0.1), seed)
    parts = [{groups[i] for i in part} for part in split.parts]
    assert not parts[0] & parts[1]
    assert not parts[0] & parts[2]
    assert not parts[1] & parts[2]
    assert sorted(split.train + split.validation + split.test) == list(range(len(groups)))
    for part, fraction in zip(split.parts, (0.8, 0.1, 0.1)):
        assert abs(len(part) - fraction * len(groups)) <= max(sizes)


def test_group_split_is_seeded():
    groups = [i // 3 for i in range(60)]
    assert group_shuffle_split(groups, seed=4) == group_shuffle_split(groups, seed=4)
    assert group_shuffle_split(groups, seed=4) != group_shuffle_split(groups, seed=5)


def test_group_split_rejects():
    with pytest.raises(ValidationError):
        group_shuffle_split(["a", "a", "b"])
    with pytest.raises(ValidationError):
        group_shuffle_split(list("abcd"), (0.5, 0.5))
    with pytest.raises(ValidationError):
        group_shuffle_split(list("abcd"), (0.5, 0.4, 0.4))


def test_split_from_assignment():
    split = Split.from_assignment(["a", "a", "b", "c"], ["train", "train", "validation", "test"])
    assert split.train == (0, 1)
    assert split.part_of(3) == "test"
    assert PART_NAMES == ("train", "validation", "test")
    with pytest.raises(ValidationError):
        Split.from_assignment(["a", "a", "b"], ["train", "test", "validation"])
    with pytest.raises(ValidationError):
        Split.from_assignment(["a"], ["holdout"])


# linear SVR


def line_data(n=40, seed=0):
    rng = np.random.default_rng(seed)
    x = rng.uniform(-1.0, 1.0, size=(n, 1))
    return x, 2.0 * x[:, 0] + 1.0


def test_svr_fits_inside_the_tube():
    x, y = line_data()
    params = SvrParams(C=100.0, epsilon=0.01, tol=1e-6, max_passes=20000)
    model = train_svr(x, y, params)
    assert model.converged
    assert np.max(np.abs(model.predict(x) - y)) <= 0.01 + 1e-3


def test_svr_objective_never_increases():
    rng = np.random.default_rng(1)
    X = sparse.random(60, 15, density=0.3, random_state=1, format="csr")
    y = rng.standard_normal(60)
    model = train_svr(X, y, SvrParams(max_passes=50))
    assert len(model.objective) == model.passes
    assert all(b <= a + 1e-12 for a, b in zip(model.objective, model.objective[1:]))


def test_svr_duplicate_rows_equal_doubled_weight():
    x, y = line_data(12, seed=2)
    y = y + np.random.default_rng(2).normal(0.0, 0.3, size=12)
    params = SvrParams(C=0.5, epsilon=0.05, tol=1e-10, max_passes=100000)
    doubled = np.vstack([x, x[:3]])
    target = np.concatenate([y, y[:3]])
    weight = np.ones(12)
    weight[:3] = 2.0
    duplicated = train_svr(doubled, target, params)
    weighted = train_svr(x, y, params, sample_weight=weight)
    np.testing.assert_allclose(duplicated.weights, weighted.weights, atol=1e-6)
    assert duplicated.bias == pytest.approx(weighted.bias, abs=1e-6)


def test_svr_is_deterministic_and_checks_input():
    x, y = line_data()
    first = train_svr(x, y)
    second = train_svr(x, y)
    np.testing.assert_array_equal(first.weights, second.weights)
    assert first.bias == second.bias
    with pytest.raises(ValidationError):
        first.predict(np.ones((2, 3)))
    with pytest.raises(ValidationError):
        train_svr(x, y, sample_weight=np.zeros(len(y)))
    with pytest.raises(ValidationError):
        train_svr(x, y[:-1])
    with pytest.raises(ValidationError):
        SvrParams(C=0.0)


def test_svr_warns_at_the_pass_cap(caplog):
    x, y = line_data()
    model = train_svr(x, y, SvrParams(tol=1e-12, max_passes=1))
    assert not model.converged
    assert model.passes == 1
    assert "pass cap" in caplog.text


def test_as_csr_accepts_three_forms():
    dense = np.array([[0.0, 1.0], [2.0, 0.0]])
    assert as_csr(dense).nnz == 2
    assert as_csr(sparse.coo_matrix(dense)).format == "csr"
    with pytest.raises(ValidationError):
        as_csr(np.ones(3))


# feed-forward network


def test_mlp_is_deterministic_and_learns():
    rng = np.random.default_rng(5)
    X = rng.uniform(0.0, 1.0, size=(200, 4))
    y = X[:, 0] - X[:, 1]
    config = MlpConfig(hidden=(16, 16), epochs=60, step_size=0.01, batch_size=8, seed=7)
    first = train_mlp(X, y, config)
    second = train_mlp(X, y, config)
    assert len(first.loss_curve) == config.epochs + 1
    assert first.loss_curve == second.loss_curve
    for name, value in first.parameters.items():
        np.testing.assert_array_equal(value, second.parameters[name])
    assert first.loss_curve[-1] < first.loss_curve[0]
    assert first.predict(X).shape == (200,)


def test_mlp_loss_falls_every_epoch_on_a_trend():
    x = np.linspace(0.0, 1.0, 200)
    y = 3.0 * x - 1.0
    config = MlpConfig(hidden=(16, 16), epochs=5, step_size=0.001, batch_size=200, seed=3)
    curve = train_mlp(x[:, None], y, config).loss_curve
    assert len(curve) == 6
    assert all(later <= earlier for earlier, later in zip(curve, curve[1:]))
    assert curve[-1] < curve[0]


def test_mlp_starts_at_the_target_median():
    X = np.zeros((5, 3))
    y = np.array([0.1, 0.2, 0.3, 0.9, 1.0])
    model = train_mlp(X, y, MlpConfig(hidden=(4, 4), epochs=0))
    np.testing.assert_allclose(model.predict(X), 0.3)
    assert model.loss_curve == (pytest.approx(np.mean(np.abs(y - 0.3))),)


def test_mlp_divergence_is_reported():
    rng = np.random.default_rng(0)
    X = rng.uniform(0.5, 1.0, size=(64, 3))
    y = rng.standard_normal(64)
    with pytest.raises(DivergenceError) as info:
        train_mlp(X, y, MlpConfig(hidden=(8, 8), epochs=3, step_size=1e300))
    assert info.value.epoch == 1


def test_mlp_validation():
    with pytest.raises(ValidationError):
        MlpConfig(hidden=(8,))
    with pytest.raises(ValidationError):
        MlpConfig(step_size=0.0)
    parameters = {
        "w1": np.zeros((3, 4)),
        "b1": np.zeros(4),
        "w2": np.zeros((5, 2)),
        "b2": np.zeros(2),
        "w3": np.zeros(2),
        "b3": np.array(0.0),
    }
    with pytest.raises(ValidationError):
        MlpModel(parameters, MlpConfig())


# explanations


def test_linear_explanation_is_the_exact_shapley_value():
    model = SvrModel(np.array([0.5, -2.0, 1.5]), 0.25, SvrParams())
    x = np.array([1.0, 0.5, -1.0])
    background = np.array([0.2, 0.1, 0.3])

    def value(subset):
        point = np.where([j in subset for j in range(3)], x, background)
        return float(model.weights @ point + model.bias)

    shapley = np.zeros(3)
    for j in range(3):
        others = [k for k in range(3) if k != j]
        for size in range(3):
            for subset in itertools.combinations(others, size):
                weight = math.factorial(size) * math.factorial(2 - size) / math.factorial(3)
                shapley[j] += weight * (value(set(subset) | {j}) - value(set(subset)))

    explanation = explain_linear(model, x, background)
    np.testing.assert_allclose(explanation.contributions, shapley, atol=1e-12)
    assert explanation.total == pytest.approx(explanation.prediction - explanation.baseline)
    assert explanation.top(2, ["a", "b", "c"]) == [
        ("c", pytest.approx(-1.95)),
        ("b", pytest.approx(-0.8)),
    ]


def test_explanation_top_skips_zeros_and_breaks_ties_by_position():
    model = SvrModel(np.array([1.0, -1.0, 0.0, 2.0]), 0.0, SvrParams())
    explanation = explain_linear(model, np.array([1.0, 1.0, 5.0, 0.0]), np.zeros(4))
    assert explanation.top(10) == [("0", 1.0), ("1", -1.0)]
    with pytest.raises(ValidationError):
        explain_linear(model, np.ones(3), np.zeros(4))


# the pipeline


@pytest.fixture(scope="module")
def small_world():
    return gen_world(SynthConfig(seed=3, n_ceos=9, calls_per_ceo=3, doc_length=150))


def world_instances(world):
    labels = build_label_table(world.votes)
    docs = [extract_ceo_document(t, world.call_ceo[t.call_id]) for t in world.transcripts]
    return instances_from(docs, labels)


def test_instances_join_labels_by_normalized_name(small_world):
    instances = world_instances(small_world)
    assert len(instances) == len(small_world.transcripts)
    assert all(isinstance(i, Instance) and i.labels is not None for i in instances)
    assert all(i.segments for i in instances)


@pytest.mark.parametrize(
    "candidate",
    [
        Candidate(),
        Candidate(features=FeatureConfig(kind="tfidf+dict", n_max=2)),
        Candidate(algorithm="mlp", mlp=MlpConfig(hidden=(8, 8), epochs=2)),
    ],
    ids=lambda c: c.name,
)
def test_model_round_trips_through_its_file(small_world, candidate, tmp_path):
    instances = world_instances(small_world)
    model = fit_model(candidate, instances)
    path = tmp_path / "model.json"
    save_model(model, path)
    loaded = load_model(path)
    assert loaded.fingerprint == model.fingerprint
    assert loaded.candidate == candidate
    for space in ("transformed", "original"):
        np.testing.assert_array_equal(loaded.predict(instances, space), model.predict(instances, space))
    original = model.predict(instances, "original")
    assert original.shape == (len(instances), 4)
    assert np.all((original >= 0.0) & (original <= 1.0))


def test_training_is_reproducible(small_world):
    instances = world_instances(small_world)
    first = fit_model(Candidate(), instances)
    second = fit_model(Candidate(), instances)
    assert first.fingerprint == second.fingerprint
    for scale in SCALES:
        np.testing.assert_array_equal(first.regressors[scale].weights, second.regressors[scale].weights)


def test_missing_model_file(tmp_path):
    with pytest.raises(NotFoundError, match="run 'train' first"):
        load_model(tmp_path / "model.json")


def test_model_explanations(small_world):
    instances = world_instances(small_world)
    model = fit_model(Candidate(features=FeatureConfig(n_max=1)), instances)
    explanation = model.explain(instances[0], "tf")
    prediction = model.predict(instances[:1])[0, SCALES.index(Scale.TF)]
    assert explanation.prediction == pytest.approx(prediction)
    assert explanation.total == pytest.approx(explanation.prediction - explanation.baseline)
    names = model.features.names
    assert len(names) == model.features.dim
    assert all(name in names for name, _ in explanation.top(5, names))
    mlp = fit_model(Candidate(algorithm="mlp", mlp=MlpConfig(hidden=(4, 4), epochs=1)), instances)
    with pytest.raises(ValidationError):
        mlp.explain(instances[0], "tf")


def test_evaluation_and_baseline(small_world):
    instances = world_instances(small_world)
    split = group_shuffle_split([i.ceo for i in instances], (0.6, 0.2, 0.2), seed=1)
    train = [instances[i] for i in split.train]
    test = [instances[i] for i in split.test]
    model = fit_model(Candidate(), train)
    reports = evaluate_model(model, test, "original")
    baseline = baseline_reports(model, train, test, "original")
    assert set(reports) == set(SCALES) == set(baseline)
    assert all(report.n == len(test) for report in reports.values())
    assert all(math.isnan(report.r) for report in baseline.values())


def test_model_selection(small_world):
    instances = world_instances(small_world)
    split = group_shuffle_split([i.ceo for i in instances], (0.6, 0.2, 0.2), seed=1)
    train = [instances[i] for i in split.train]
    validation = [instances[i] for i in split.validation]
    broken = Candidate(features=FeatureConfig(min_df=10**6))
    candidates = [broken, Candidate(features=FeatureConfig(n_max=1)), Candidate()]
    selection = select_model(candidates, train, validation)
    assert selection.scores[0].failed
    assert selection.scores[0].error.startswith("svr/tfidf/n3: ")
    assert selection.best_index in (1, 2)
    usable = [s for s in selection.scores if not s.failed]
    assert selection.scores[selection.best_index].mean_mae == min(s.mean_mae for s in usable)
    with pytest.raises(ModelSelectionError) as info:
        select_model([broken, broken], train, validation)
    assert len(info.value.failures) == 2


def test_personality_is_recovered_from_synthetic_calls():
    world = gen_world(SynthConfig(seed=0, n_ceos=32, n_calls=700))
    instances = world_instances(world)
    assert len(instances) == 700
    split = group_shuffle_split([i.ceo for i in instances], (0.7, 0.1, 0.2), seed=0)
    train = [instances[i] for i in split.train]
    test = [instances[i] for i in split.test]
    assert len(Counter(i.ceo for i in test)) >= 5
    model = fit_model(Candidate(), train)
    reports = evaluate_model(model, test, "original")
    recovered = [scale for scale, report in reports.items() if report.rho >= 0.5]
    assert len(recovered) >= 3, {scale.value: report.rho for scale, report in reports.items()}
