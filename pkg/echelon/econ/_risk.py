# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.econ._risk`
================================================================================

The volatility regression: a financial-controls model (FIN) and, on the same
calls, a joint model that adds CEO personality, age and gender
(FIN + MBTI). Both include industry and period fixed effects.

"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

import pandas as pd

from .._errors import ValidationError
from ._design import DesignSpec, RiskRow, build_design_matrix, INTERCEPT
from ._ols import OlsReport, VifReport, ols_fit, vif

__version__ = "0.0.0+auto.0"

logger = logging.getLogger(__name__)

MODEL_NAMES = ("FIN", "FIN+MBTI")


@dataclass(frozen=True)
class RiskResult:
    """Baseline and (optionally) joint regression plus the VIF table of the
    larger design"""

    baseline: OlsReport
    joint: Optional[OlsReport]
    vif: VifReport

    @property
    def reports(self):
        """``(name, report)`` pairs of the fitted models"""
        pairs = [(MODEL_NAMES[0], self.baseline)]
        if self.joint is not None:
            pairs.append((MODEL_NAMES[1], self.joint))
        return pairs


def _fit(rows: Sequence[RiskRow], spec: DesignSpec) -> tuple:
    design = build_design_matrix(rows, spec)
    report = ols_fit(
        design.X,
        design.y,
        design.columns,
        reference_levels=design.reference_levels,
        dropped_columns=design.dropped_columns,
        n_filtered=design.n_filtered,
    )
    return design, report


def risk_regression(
    rows: Sequence[RiskRow],
    include_mbti: bool = True,
    *,
    industry_effects: bool = True,
    period_effects: bool = True,
    standardize_dummies: bool = True,
) -> RiskResult:
    """Fit FIN and, if ``include_mbti``, FIN + MBTI on the calls with MBTI scores"""
    if include_mbti:
        usable = [row for row in rows if row.mbti is not None]
        if len(usable) < len(rows):
            logger.info("%d call(s) without MBTI scores left out", len(rows) - len(usable))
        if not usable:
            raise ValidationError("no call has MBTI scores")
        rows = usable
    spec = DesignSpec(
        industry_effects=industry_effects,
        period_effects=period_effects,
        standardize_dummies=standardize_dummies,
    )
    design, baseline = _fit(rows, spec)
    joint = None
    if include_mbti:
        spec = DesignSpec(
            mbti=True,
            demographics=True,
            industry_effects=industry_effects,
            period_effects=period_effects,
            standardize_dummies=standardize_dummies,
        )
        design, joint = _fit(rows, spec)
    return RiskResult(baseline, joint, vif(design.X, design.columns))


def _cell(report: OlsReport, name: str) -> str:
    if name not in report:
        return ""
    row = report[name]
    return f"{row.beta:.3f}{row.stars} ({row.t:.2f})"


def risk_frame(result: RiskResult) -> pd.DataFrame:
    """Machine-readable table: one row per model and regressor"""
    frames = []
    for name, report in result.reports:
        frame = report.to_frame()
        frame.insert(0, "model", name)
        frames.append(frame)
    return pd.concat(frames, ignore_index=True)


def render_risk_table(result: RiskResult) -> str:
    """Side-by-side text table: standardized betas with stars and t-statistics
    in parentheses; fixed-effect dummies are summarized"""
    reports = result.reports
    names: List[str] = []
    for _, report in reports:
        for column in report.columns:
            if column == INTERCEPT or column.startswith(("industry_", "period_")):
                continue
            if column not in names:
                names.append(column)
    table = pd.DataFrame(
        {model: [_cell(report, name) for name in names] for model, report in reports},
        index=names,
    )

    def has(report: OlsReport, prefix: str) -> str:
        return "yes" if any(c.startswith(prefix) for c in report.columns) else "no"

    footer = pd.DataFrame(
        {
            model: [
                has(report, "industry_"),
                has(report, "period_"),
                str(report.n),
                f"{report.adj_r2:.4f}" if not math.isnan(report.adj_r2) else "n/a",
            ]
            for model, report in reports
        },
        index=["Industry FE", "Period FE", "N", "Adj. R2"],
    )
    body = pd.concat([table, footer])
    note = "* p <= 0.05, ** p <= 0.01, *** p <= 0.001; t-statistics in parentheses"
    return body.to_string() + "\n" + note + "\n"
