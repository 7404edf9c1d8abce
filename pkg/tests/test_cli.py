# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

import logging
import os

import pandas as pd
import pytest

from echelon import (
    ConfigError,
    DivergenceError,
    InputError,
    NotFoundError,
    Scale,
    ValidationError,
)
from echelon.cli import (
    COMMANDS,
    RunConfig,
    apply_overrides,
    build_config,
    build_parser,
    candidates,
    exit_code,
    load_config,
    main,
    parse_override,
    provenance,
)

SMALL_WORLD = [
    "--set", "synth.n_ceos=24",
    "--set", "synth.calls_per_ceo=3",
    "--set", "synth.doc_length=200",
    "--set", "features.n_max=2",
    "--set", "eval.feature_kinds=[tfidf, dict]",
    "--set", "risk.industry_effects=false",
]
PIPELINE = ("synth", "ingest", "labels", "iaa", "split", "train", "eval", "predict", "risk")


@pytest.fixture(autouse=True)
def restore_logging():
    root = logging.getLogger()
    handlers = list(root.handlers)
    level = root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


# configuration


def test_defaults():
    config = build_config()
    assert config == RunConfig()
    assert config.seed == 0
    assert config.labels.min_votes == 3
    assert config.split.fractions == (0.8, 0.1, 0.1)
    assert config.evaluation.space == "transformed"
    assert config.path("model") == os.path.join(".", "model.json")
    assert config.path("dictionary") is None


def test_seed_reaches_every_seeded_section():
    config = build_config({"seed": 9})
    assert config.svr.seed == config.mlp.seed == config.synth.seed == 9


def test_file_then_overrides_then_flags(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("seed: 1\nsvr:\n  C: 2\nlabels:\n  min_votes: 5\n", encoding="utf-8")
    config = load_config(str(path), ["svr.C=3", "eval.algorithms=[svr, mlp]"], seed=4, run_dir="out")
    assert config.svr.C == 3.0
    assert isinstance(config.svr.C, float)
    assert config.labels.min_votes == 5
    assert config.evaluation.algorithms == ("svr", "mlp")
    assert config.seed == config.svr.seed == 4
    assert config.report_path("eval.txt") == os.path.join("out", "reports", "eval.txt")
    assert len(candidates(config)) == 2


@pytest.mark.parametrize(
    "raw",
    [
        {"svm": {}},
        {"svr": {"gamma": 1.0}},
        {"svr": {"seed": 3}},
        {"svr": {"C": "large"}},
        {"svr": {"C": -1.0}},
        {"labels": {"min_votes": True}},
        {"labels": {"min_votes": 0}},
        {"split": {"fractions": [0.5, 0.5]}},
        {"split": {"fractions": [0.5, 0.4, 0.4]}},
        {"ingest": {"sections": ["Intro"]}},
        {"eval": {"space": "latent"}},
        {"eval": {"algorithms": ["forest"]}},
        {"risk": {"mbti_source": "oracle"}},
        {"features": {"kind": "bert"}},
        {"synth": {"n_ceos": 0}},
        {"paths": "data"},
        {"seed": -1},
        {"seed": "one"},
    ],
)
def test_invalid_configuration(raw):
    with pytest.raises(ConfigError):
        build_config(raw)


def test_nullable_settings():
    config = build_config({"features": {"max_features": None}, "paths": {"dictionary": None}})
    assert config.features.max_features is None
    with pytest.raises(ConfigError):
        build_config({"svr": {"C": None}})


def test_config_files_errors(tmp_path):
    with pytest.raises(ConfigError):
        load_config(str(tmp_path / "missing.yaml"))
    broken = tmp_path / "broken.yaml"
    broken.write_text("svr: [unclosed\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_config(str(broken))
    listing = tmp_path / "list.yaml"
    listing.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_config(str(listing))
    empty = tmp_path / "empty.yaml"
    empty.write_text("", encoding="utf-8")
    assert load_config(str(empty)) == RunConfig()


def test_overrides():
    assert parse_override("svr.C=0.5") == (("svr", "C"), 0.5)
    assert parse_override("seed=3") == (("seed",), 3)
    assert parse_override("paths.dictionary=") == (("paths", "dictionary"), None)
    for item in ("svr.C", "=3", "a.b.c=1"):
        with pytest.raises(ConfigError):
            apply_overrides({}, [item])
    with pytest.raises(ConfigError):
        apply_overrides({"svr": 1}, ["svr.C=2"])
    raw = {"svr": {"C": 1.0}}
    assert apply_overrides(raw, ["svr.epsilon=0.2"]) == {"svr": {"C": 1.0, "epsilon": 0.2}}
    assert raw == {"svr": {"C": 1.0}}


def test_config_hash():
    first = build_config({"seed": 2}, run_dir="a")
    assert first.config_hash == build_config({"seed": 2}, run_dir="b").config_hash
    assert first.config_hash != build_config({"seed": 3}, run_dir="a").config_hash
    assert len(first.config_hash) == 64
    assert provenance(first) == f"# config_hash: {first.config_hash}\n# seed: 2\n"


# command line


def test_exit_codes():
    assert exit_code(ConfigError("x")) == 2
    assert exit_code(InputError("x")) == 3
    assert exit_code(ValidationError("x")) == 4
    assert exit_code(NotFoundError("x")) == 4
    assert exit_code(DivergenceError(1, float("nan"))) == 5
    assert exit_code(FileNotFoundError("x")) == 3
    assert exit_code(ValueError("x")) == 4
    assert exit_code(ZeroDivisionError()) == 5
    assert exit_code(RuntimeError()) == 1


def test_parser():
    parser = build_parser()
    assert set(COMMANDS) == set(PIPELINE) | {"explain"}
    args = parser.parse_args(["explain", "F001-C01", "tf", "--top", "5", "--seed", "2"])
    assert (args.call_id, args.scale, args.top, args.seed) == ("F001-C01", "tf", 5, 2)
    with pytest.raises(SystemExit):
        parser.parse_args([])
    with pytest.raises(SystemExit):
        parser.parse_args(["explain", "F001-C01", "xy"])


def test_eval_before_train(tmp_path, capsys):
    assert main(["eval", "--run-dir", str(tmp_path)]) == 3
    err = capsys.readouterr().err
    assert "echelon eval: error:" in err
    assert "run 'train' first" in err
    assert main(["predict", "--run-dir", str(tmp_path)]) == 3
    assert main(["explain", "F001-C01", "tf", "--run-dir", str(tmp_path)]) == 3


def test_missing_inputs_and_bad_settings(tmp_path, capsys):
    assert main(["ingest", "--run-dir", str(tmp_path)]) == 3
    assert main(["labels", "--run-dir", str(tmp_path), "--set", "svr.gamma=1"]) == 2
    assert main(["train", "--run-dir", str(tmp_path), "--set", "nonsense"]) == 2
    assert main(["train", "--run-dir", str(tmp_path), "--config", str(tmp_path / "no.yaml")]) == 2
    assert capsys.readouterr().out == ""


def run_pipeline(run_dir):
    common = ["--run-dir", str(run_dir), "--seed", "11", *SMALL_WORLD]
    for command in PIPELINE:
        assert main([command, *common]) == 0, command
    assert main(["explain", "F001-C01", "tf", "--top", "5", *common]) == 0


def tree(directory):
    files = {}
    for root, _, names in os.walk(directory):
        for name in names:
            path = os.path.join(root, name)
            with open(path, "rb") as file:
                files[os.path.relpath(path, directory)] = file.read()
    return files


def test_pipeline_is_reproducible(tmp_path, capsys):
    run_pipeline(tmp_path / "first")
    output = capsys.readouterr().out
    assert "CEO documents: 72" in output
    assert "evaluation space: transformed" in output
    assert "FIN+MBTI" in output
    assert "call F001-C01" in output
    run_pipeline(tmp_path / "second")

    first = tree(tmp_path / "first")
    second = tree(tmp_path / "second")
    assert set(first) == set(second)
    different = [name for name in first if first[name] != second[name]]
    assert not different

    reports = os.path.join("reports", "")
    for name in (
        "corpus.txt", "corpus.csv", "labels.txt", "labels.csv", "correlation.csv",
        "agreement.txt", "agreement.csv", "split.txt", "selection.csv", "train.txt",
        "eval.txt", "eval.csv", "risk.txt", "risk.csv", "vif.csv", "explain_F001-C01_tf.txt",
    ):
        assert first[reports + name].startswith(b"# config_hash: ")
    for name in ("documents.jsonl", "labels.csv", "split.csv", "model.json", "predictions.csv"):
        assert name in first

    predictions = pd.read_csv(tmp_path / "first" / "predictions.csv")
    assert list(predictions.columns) == ["call_id", "ceo", "ei", "sn", "tf", "jp"]
    assert len(predictions) == 72
    assert predictions[[s.value for s in Scale]].stack().between(0.0, 1.0).all()
    split = pd.read_csv(tmp_path / "first" / "split.csv")
    assert split.groupby("ceo")["part"].nunique().max() == 1
    selection = pd.read_csv(tmp_path / "first" / "reports" / "selection.csv", comment="#")
    assert selection["selected"].sum() == 1


def test_risk_from_labels(tmp_path, capsys):
    common = ["--run-dir", str(tmp_path), *SMALL_WORLD]
    for command in ("synth", "ingest", "labels"):
        assert main([command, *common]) == 0
    assert main(["risk", *common, "--set", "risk.mbti_source=labels"]) == 0
    assert "FIN+MBTI" in capsys.readouterr().out
