# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.cli._commands`
================================================================================

One function per subcommand. Each takes the resolved `RunConfig` and the
parsed arguments, reads its inputs, writes its outputs below the run
directory and returns the text it prints.

"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import replace
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from .._constants import SCALES, Scale
from .._errors import InputError, NotFoundError, ValidationError
from ..agreement import agreement_report, tables_from_votes
from ..corpus import (
    CeoDocument,
    FormatConfig,
    ceo_speakers,
    corpus_stats,
    extract_ceo_document,
    normalize_name,
    read_manifest,
    read_transcript,
)
from ..econ import load_panel, render_risk_table, risk_frame, risk_regression
from ..features import load_dictionary
from ..labels import (
    MbtiVector,
    build_label_table,
    cross_correlation,
    label_summary,
    read_big5,
    read_labels,
    read_votes,
    vote_stats,
    write_labels,
)
from ..model import (
    PART_NAMES,
    Candidate,
    Instance,
    baseline_reports,
    evaluate_model,
    fit_model,
    group_shuffle_split,
    instance_from_document,
    instances_from,
    load_model,
    save_model,
    select_model,
)
from ..synth import gen_world, write_world
from ._config import RunConfig
from ._reports import (
    correlation_frame,
    corpus_frame,
    eval_frame,
    render_corpus,
    render_eval,
    render_explanation,
    render_labels,
    selection_frame,
    summary_frame,
    write_csv_report,
    write_data_csv,
    write_text_report,
)

__version__ = "0.0.0+auto.0"

logger = logging.getLogger(__name__)

SPLIT_COLUMNS = ("call_id", "ceo", "part")
PREDICTION_COLUMNS = ("call_id", "ceo") + tuple(scale.value for scale in SCALES)


def _require(path: str, produced_by: Optional[str] = None) -> str:
    if not os.path.exists(path):
        hint = f"; run '{produced_by}' first" if produced_by else ""
        raise InputError(f"{path} does not exist{hint}")
    return path


def write_documents(path: str, docs: Sequence[CeoDocument]):
    """One JSON object per line"""
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as file:
            for doc in docs:
                file.write(json.dumps(doc.to_dict(), sort_keys=True) + "\n")
    except OSError as error:
        raise InputError(f"cannot write {path}: {error}") from error


def read_documents(path: str) -> List[CeoDocument]:
    """Inverse of `write_documents`"""
    _require(path, "ingest")
    try:
        with open(path, encoding="utf-8") as file:
            return [CeoDocument.from_dict(json.loads(line)) for line in file if line.strip()]
    except OSError as error:
        raise InputError(f"cannot read {path}: {error}") from error
    except (json.JSONDecodeError, KeyError) as error:
        raise ValidationError(f"{path}: malformed document ({error})") from error


def _dictionary(config: RunConfig):
    path = config.path("dictionary")
    return load_dictionary(_require(path)) if path is not None else None


def run_synth(config: RunConfig, args) -> str:
    """Generate a synthetic world into the data directory"""
    # pylint: disable=unused-argument
    world = gen_world(config.synth)
    directory = config.path("data")
    paths = write_world(world, directory)
    return (
        f"wrote {len(world.transcripts)} transcripts of {len(world.ceos)} CEOs "
        f"to {paths['transcripts']}\n"
    )


def run_ingest(config: RunConfig, args) -> str:
    """Transcripts to CEO documents plus corpus statistics"""
    # pylint: disable=unused-argument
    format_config = FormatConfig(qa_marker=config.ingest.qa_marker)
    sections = config.ingest.section_set
    docs = []
    for entry in read_manifest(_require(config.path("manifest"))):
        transcript = read_transcript(entry["path"], format_config)
        ceos = [entry["ceo"]] if entry.get("ceo") else ceo_speakers(transcript)
        if not ceos:
            logger.warning("call %s: no CEO speaker", transcript.call_id)
        for ceo in ceos:
            try:
                docs.append(extract_ceo_document(transcript, ceo, sections=sections))
            except NotFoundError as error:
                logger.warning("skipping: %s", error)
    docs.sort(key=lambda d: (d.call_id, d.ceo_name))
    write_documents(config.path("documents"), docs)
    stats = corpus_stats(docs)
    text = render_corpus(stats)
    write_text_report(config, "corpus.txt", text)
    write_csv_report(config, "corpus.csv", corpus_frame(stats))
    return text


def run_labels(config: RunConfig, args) -> str:
    """Votes to MBTI labels, their summary and the Big 5 cross-correlation"""
    # pylint: disable=unused-argument
    votes = read_votes(_require(config.path("votes")))
    labels = build_label_table(votes, config.labels.min_votes)
    if not labels:
        raise ValidationError(f"no entity has at least {config.labels.min_votes} votes per scale")
    write_labels(config.path("labels"), labels)
    summary = label_summary(list(labels.values()))
    text = render_labels(summary, vote_stats(votes))
    write_text_report(config, "labels.txt", text)
    write_csv_report(config, "labels.csv", summary_frame(summary))

    big5_path = config.path("big5")
    if os.path.exists(big5_path):
        big5 = read_big5(big5_path)
        common = [entity for entity in labels if entity in big5]
        matrix = cross_correlation([labels[e] for e in common], [big5[e] for e in common])
        write_csv_report(config, "correlation.csv", correlation_frame(matrix))
        text += f"\nMBTI x Big 5 correlations over {len(common)} entities\n"
        text += correlation_frame(matrix).to_string(index=False, float_format="%.3f") + "\n"
    else:
        logger.info("no Big 5 scores at %s; cross-correlation skipped", big5_path)
    return text


def run_iaa(config: RunConfig, args) -> str:
    """Agreement coefficients of the crowd votes"""
    # pylint: disable=unused-argument
    report = agreement_report(tables_from_votes(read_votes(_require(config.path("votes")))))
    frame = report.to_frame()
    text = frame.to_string(index=False, float_format="%.5f") + "\n"
    degenerate = [scale.label for scale, row in report.rows if row.alpha_degenerate]
    if degenerate:
        text += f"alpha undefined (no expected disagreement) on: {', '.join(degenerate)}\n"
    write_text_report(config, "agreement.txt", text)
    write_csv_report(config, "agreement.csv", frame)
    return text


def _instances(config: RunConfig) -> List[Instance]:
    docs = read_documents(config.path("documents"))
    labels = read_labels(_require(config.path("labels"), "labels"))
    instances = instances_from(docs, labels)
    if not instances:
        raise ValidationError("no CEO document has labels")
    return instances


def _key(instance: Instance) -> Tuple[str, str]:
    return instance.call_id, normalize_name(instance.ceo).casefold()


def run_split(config: RunConfig, args) -> str:
    """Group split of the labelled documents by CEO"""
    # pylint: disable=unused-argument
    instances = _instances(config)
    groups = [normalize_name(i.ceo).casefold() for i in instances]
    split = group_shuffle_split(groups, config.split.fractions, config.seed)
    frame = pd.DataFrame(
        [(i.call_id, i.ceo, split.part_of(k)) for k, i in enumerate(instances)],
        columns=SPLIT_COLUMNS,
    )
    write_data_csv(config.path("split"), frame)
    lines = []
    for name, part in zip(PART_NAMES, split.parts):
        ceos = len({groups[k] for k in part})
        lines.append(f"{name:<11}{len(part):>7} documents {ceos:>5} CEOs")
    text = "\n".join(lines) + "\n"
    write_text_report(config, "split.txt", text)
    return text


def _parts(config: RunConfig, instances: Sequence[Instance]) -> Dict[str, List[Instance]]:
    path = _require(config.path("split"), "split")
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as error:
        raise InputError(f"cannot read {path}: {error}") from error
    if list(frame.columns) != list(SPLIT_COLUMNS):
        raise ValidationError(f"{path}: expected columns {','.join(SPLIT_COLUMNS)}")
    assignment = {
        (row.call_id, normalize_name(row.ceo).casefold()): row.part
        for row in frame.itertuples(index=False)
    }
    parts: Dict[str, List[Instance]] = {name: [] for name in PART_NAMES}
    for instance in instances:
        part = assignment.get(_key(instance))
        if part is None:
            raise ValidationError(
                f"document {instance.call_id}/{instance.ceo} is not in the split; run 'split' again"
            )
        if part not in parts:
            raise ValidationError(f"{path}: unknown part {part!r}")
        parts[part].append(instance)
    return parts


def candidates(config: RunConfig) -> List[Candidate]:
    """Every configured algorithm and feature kind combination"""
    return [
        Candidate(
            features=replace(config.features, kind=kind),
            algorithm=algorithm,
            svr=config.svr,
            mlp=config.mlp,
        )
        for algorithm in config.evaluation.algorithms
        for kind in config.evaluation.feature_kinds
    ]


def run_train(config: RunConfig, args) -> str:
    """Select a candidate on the validation part and train it"""
    # pylint: disable=unused-argument
    parts = _parts(config, _instances(config))
    train = parts["train"]
    if not train:
        raise ValidationError("the training part is empty")
    dictionary = _dictionary(config)
    pool = candidates(config)
    lines = []
    best = pool[0]
    if len(pool) > 1:
        if not parts["validation"]:
            raise ValidationError("model selection needs a non-empty validation part")
        selection = select_model(
            pool,
            train,
            parts["validation"],
            dictionary=dictionary,
            space=config.evaluation.space,
            n_jobs=config.evaluation.n_jobs,
        )
        best = selection.best
        frame = selection_frame(selection)
        write_csv_report(config, "selection.csv", frame)
        lines.append(frame.to_string(index=False, float_format="%.6f"))
    model = fit_model(best, train, dictionary)
    save_model(model, config.path("model"))
    lines.append(f"trained {best.name} on {len(train)} documents")
    lines.append(f"fingerprint {model.fingerprint}")
    text = "\n".join(lines) + "\n"
    write_text_report(config, "train.txt", text)
    return text


def run_eval(config: RunConfig, args) -> str:
    """Test-part metrics of the trained model and the training-mean baseline"""
    # pylint: disable=unused-argument
    model = load_model(_require(config.path("model"), "train"))
    parts = _parts(config, _instances(config))
    test = parts["test"]
    if len(test) < 3:
        raise ValidationError(f"the test part holds {len(test)} documents, need at least 3")
    space = config.evaluation.space
    reports = [
        (model.candidate.name, evaluate_model(model, test, space)),
        ("train mean", baseline_reports(model, parts["train"], test, space)),
    ]
    text = render_eval(reports, space)
    write_text_report(config, "eval.txt", text)
    write_csv_report(config, "eval.csv", eval_frame(reports))
    return text


def run_predict(config: RunConfig, args) -> str:
    """Scores in [0, 1] for every ingested document"""
    # pylint: disable=unused-argument
    model = load_model(_require(config.path("model"), "train"))
    docs = read_documents(config.path("documents"))
    if not docs:
        raise ValidationError("no documents to score")
    scores = model.predict([instance_from_document(doc) for doc in docs], "original")
    frame = pd.DataFrame(scores, columns=[scale.value for scale in SCALES])
    frame.insert(0, "ceo", [doc.ceo_name for doc in docs])
    frame.insert(0, "call_id", [doc.call_id for doc in docs])
    write_data_csv(config.path("predictions"), frame)
    return f"scored {len(docs)} documents\n"


def _mbti_from_predictions(path: str) -> Dict[str, MbtiVector]:
    try:
        frame = pd.read_csv(_require(path, "predict"), dtype={"call_id": str, "ceo": str})
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as error:
        raise InputError(f"cannot read {path}: {error}") from error
    if list(frame.columns) != list(PREDICTION_COLUMNS):
        raise ValidationError(f"{path}: expected columns {','.join(PREDICTION_COLUMNS)}")
    # calls with several CEOs get the mean of their scores
    means = frame.groupby("call_id", sort=True)[[s.value for s in SCALES]].mean()
    return {
        call_id: MbtiVector.from_array(np.clip(row.to_numpy(), 0.0, 1.0))
        for call_id, row in means.iterrows()
    }


def _mbti_from_labels(config: RunConfig) -> Dict[str, MbtiVector]:
    labels = {
        normalize_name(name).casefold(): vector
        for name, vector in read_labels(_require(config.path("labels"), "labels")).items()
    }
    mbti = {}
    for doc in read_documents(config.path("documents")):
        vector = labels.get(normalize_name(doc.ceo_name).casefold())
        if vector is not None:
            mbti.setdefault(doc.call_id, vector)
    return mbti


def run_risk(config: RunConfig, args) -> str:
    """FIN and FIN + MBTI volatility regressions with the VIF table"""
    # pylint: disable=unused-argument
    settings = config.risk
    if settings.mbti_source == "predictions":
        mbti = _mbti_from_predictions(config.path("predictions"))
    else:
        mbti = _mbti_from_labels(config)
    rows = load_panel(
        _require(config.path("panel")), mbti, skip_incomplete=settings.skip_incomplete
    )
    result = risk_regression(
        rows,
        True,
        industry_effects=settings.industry_effects,
        period_effects=settings.period_effects,
        standardize_dummies=settings.standardize_dummies,
    )
    vif_frame = result.vif.to_frame()
    text = render_risk_table(result)
    text += "\nVIF (FIN+MBTI design)\n"
    text += vif_frame.to_string(index=False, float_format="%.3f") + "\n"
    write_text_report(config, "risk.txt", text)
    write_csv_report(config, "risk.csv", risk_frame(result))
    write_csv_report(config, "vif.csv", vif_frame)
    return text


def run_explain(config: RunConfig, args) -> str:
    """N-gram contributions to one document's score on one scale"""
    model = load_model(_require(config.path("model"), "train"))
    scale = Scale(args.scale)
    docs = [
        doc
        for doc in read_documents(config.path("documents"))
        if doc.call_id == args.call_id
        and (args.ceo is None or normalize_name(doc.ceo_name).casefold() == normalize_name(args.ceo).casefold())
    ]
    if not docs:
        raise NotFoundError(f"no document for call {args.call_id}")
    if len(docs) > 1:
        raise ValidationError(f"call {args.call_id} has several CEOs; pass --ceo")
    doc = docs[0]
    explanation = model.explain(instance_from_document(doc), scale)
    top = explanation.top(args.top or config.evaluation.top_k, model.features.names)
    text = render_explanation(
        doc.call_id, doc.ceo_name, scale, explanation.baseline, explanation.prediction, top
    )
    write_text_report(config, f"explain_{doc.call_id}_{scale.value}.txt", text)
    return text


COMMANDS = {
    "synth": run_synth,
    "ingest": run_ingest,
    "labels": run_labels,
    "iaa": run_iaa,
    "split": run_split,
    "train": run_train,
    "eval": run_eval,
    "predict": run_predict,
    "risk": run_risk,
    "explain": run_explain,
}
