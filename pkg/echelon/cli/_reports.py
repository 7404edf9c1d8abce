# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.cli._reports`
================================================================================

Report rendering. Every report starts with ``# config_hash:`` and ``# seed:``
lines; data files (labels, splits, predictions) carry no such lines so the
other subcommands can read them back.

"""

from __future__ import annotations

import io
import logging
import math
import os
from typing import Sequence

import pandas as pd

from .._constants import BIG5_TRAITS, SCALES, Scale
from .._errors import InputError
from ..corpus._structs import CorpusStats
from ..labels._structs import LabelSummary, VoteStats
from ..model._evaluate import EvalReport
from ..model._select import Selection
from ._config import RunConfig

__version__ = "0.0.0+auto.0"

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.6f"


def provenance(config: RunConfig) -> str:
    """Header lines naming the config hash and seed"""
    return f"# config_hash: {config.config_hash}\n# seed: {config.seed}\n"


def _write(path: str, content: str):
    try:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as file:
            file.write(content)
    except OSError as error:
        raise InputError(f"cannot write {path}: {error}") from error
    logger.info("wrote %s", path)


def write_text_report(config: RunConfig, filename: str, body: str) -> str:
    """Write a text report below the reports directory; returns its path"""
    path = config.report_path(filename)
    _write(path, provenance(config) + body)
    return path


def write_csv_report(config: RunConfig, filename: str, frame: pd.DataFrame) -> str:
    """Write a CSV report below the reports directory; returns its path"""
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    path = config.report_path(filename)
    _write(path, provenance(config) + buffer.getvalue())
    return path


def write_data_csv(path: str, frame: pd.DataFrame):
    """Write a data CSV without provenance lines"""
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, float_format="%.17g", lineterminator="\n")
    _write(path, buffer.getvalue())


def _number(value: float, digits: int = 4) -> str:
    return "n/a" if math.isnan(value) else f"{value:.{digits}f}"


def corpus_frame(stats: CorpusStats) -> pd.DataFrame:
    """Sum, mean, minimum and maximum per unit"""
    return pd.DataFrame(
        [
            {"unit": unit, "sum": row.total, "mean": row.mean, "min": row.minimum, "max": row.maximum}
            for unit, row in stats.rows()
        ]
    )


def render_corpus(stats: CorpusStats) -> str:
    """Text form of `corpus_frame`"""
    frame = corpus_frame(stats).set_index("unit")
    frame["mean"] = frame["mean"].map(lambda v: f"{v:.1f}")
    return f"CEO documents: {stats.n_documents}\n{frame.to_string()}\n"


def summary_frame(summary: LabelSummary) -> pd.DataFrame:
    """Mean, standard deviation, skewness and histogram counts per scale"""
    rows = []
    for scale, row in summary.scales:
        record = {"scale": scale.label, "mean": row.mean, "std": row.std, "skewness": row.skewness}
        for k, count in enumerate(row.histogram):
            record[f"bin{k}"] = count
        rows.append(record)
    return pd.DataFrame(rows)


def render_labels(summary: LabelSummary, stats: VoteStats) -> str:
    """Label distribution and vote counts as text"""
    lines = [
        f"labelled entities: {summary.n}",
        f"votes per entity: min {stats.minimum}, max {stats.maximum}, mean {stats.mean:.1f}",
        "",
    ]
    for scale, row in summary.scales:
        bars = " ".join(f"{count:d}" for count in row.histogram)
        lines.append(
            f"{scale.label}  mean {row.mean:.4f}  std {row.std:.4f}  "
            f"skew {row.skewness:+.4f}  histogram [{bars}]"
        )
    return "\n".join(lines) + "\n"


def correlation_frame(matrix) -> pd.DataFrame:
    """MBTI by Big 5 correlation matrix with labelled rows"""
    frame = pd.DataFrame(matrix, columns=list(BIG5_TRAITS))
    frame.insert(0, "scale", [scale.label for scale in SCALES])
    return frame


def eval_frame(reports: Sequence[tuple]) -> pd.DataFrame:
    """Rows of ``(model, {scale: EvalReport})`` flattened to one row per model and scale"""
    rows = []
    for name, by_scale in reports:
        for scale in SCALES:
            report: EvalReport = by_scale[scale]
            rows.append(
                {
                    "model": name,
                    "scale": scale.label,
                    "r": report.r,
                    "rho": report.rho,
                    "tau": report.tau,
                    "mae": report.mae,
                    "n": report.n,
                }
            )
    return pd.DataFrame(rows)


def render_eval(reports: Sequence[tuple], space: str) -> str:
    """Table-style text with one block per model"""
    lines = [f"evaluation space: {space}", ""]
    header = f"{'scale':<6}{'r':>9}{'rho':>9}{'tau':>9}{'mae':>10}{'n':>6}"
    for name, by_scale in reports:
        lines.append(name)
        lines.append(header)
        for scale in SCALES:
            report = by_scale[scale]
            lines.append(
                f"{scale.label:<6}{_number(report.r):>9}{_number(report.rho):>9}"
                f"{_number(report.tau):>9}{_number(report.mae):>10}{report.n:>6}"
            )
        lines.append("")
    return "\n".join(lines)


def selection_frame(selection: Selection) -> pd.DataFrame:
    """Validation results of every candidate"""
    return pd.DataFrame(
        [
            {
                "candidate": score.candidate.name,
                "selected": score.index == selection.best_index,
                "mean_mae": math.nan if score.failed else score.mean_mae,
                "mean_tau": math.nan if score.failed else score.mean_tau,
                "error": score.error or "",
            }
            for score in selection.scores
        ]
    )


def render_explanation(
    call_id: str, ceo: str, scale: Scale, baseline: float, prediction: float,
    top: Sequence[tuple],
) -> str:
    """Contribution listing of one prediction"""
    lines = [
        f"call {call_id}, CEO {ceo}, scale {scale.label}",
        f"baseline {baseline:.6f}  prediction {prediction:.6f}",
        "",
    ]
    width = max((len(name) for name, _ in top), default=8)
    for name, value in top:
        lines.append(f"{name:<{width}}  {value:+.6f}")
    return "\n".join(lines) + "\n"
