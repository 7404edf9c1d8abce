# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.agreement._coefficients`
================================================================================

Agreement coefficients for two categories with a variable number of raters
per subject. Subjects with fewer than two raters take no part.

For a subject with ``a`` left and ``b`` right ratings, ``n = a + b``:

* percentage agreement: mean of ``(a(a-1) + b(b-1)) / (n(n-1))``
* Brennan–Prediger: ``2 p_a - 1``
* Gwet's AC1: ``(p_a - p_e) / (1 - p_e)`` with ``p_e = 2 pi (1 - pi)``,
  ``pi`` the mean of ``b / n``
* Krippendorff's alpha (nominal, coincidence form):
  ``1 - (N - 1) o_01 / (n_0 n_1)``

"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Mapping, Tuple

import numpy as np
import pandas as pd

from .._constants import SCALES, Scale
from .._errors import ValidationError
from ._table import RatingTable

__version__ = "0.0.0+auto.0"

logger = logging.getLogger(__name__)


def _pair_agreement(counts: np.ndarray) -> np.ndarray:
    a = counts[:, 0].astype(np.float64)
    b = counts[:, 1].astype(np.float64)
    n = a + b
    return (a * (a - 1.0) + b * (b - 1.0)) / (n * (n - 1.0))


def percent_agreement(table: RatingTable) -> float:
    """Mean share of agreeing rater pairs per subject"""
    return float(np.mean(_pair_agreement(table.usable())))


def brennan_prediger(table: RatingTable) -> float:
    """Brennan–Prediger kappa for two categories"""
    return 2.0 * percent_agreement(table) - 1.0


def gwet_gamma(table: RatingTable) -> float:
    """Gwet's AC1 for two categories"""
    counts = table.usable()
    p_a = float(np.mean(_pair_agreement(counts)))
    share = float(np.mean(counts[:, 1] / counts.sum(axis=1)))
    p_e = 2.0 * share * (1.0 - share)
    if p_e >= 1.0:
        raise ValidationError("chance agreement of 1 leaves AC1 undefined")
    return (p_a - p_e) / (1.0 - p_e)


def _alpha(counts: np.ndarray) -> Tuple[float, bool]:
    a = counts[:, 0].astype(np.float64)
    b = counts[:, 1].astype(np.float64)
    m = a + b
    o_01 = float(np.sum(a * b / (m - 1.0)))
    n_0 = float(np.sum(a * (a - 1.0) / (m - 1.0))) + o_01
    n_1 = float(np.sum(b * (b - 1.0) / (m - 1.0))) + o_01
    if n_0 == 0.0 or n_1 == 0.0:
        return 1.0, True
    return 1.0 - (n_0 + n_1 - 1.0) * o_01 / (n_0 * n_1), False


def krippendorff_alpha(table: RatingTable) -> float:
    """Krippendorff's alpha for nominal data.

    A table whose ratings all fall into one category has no expected
    disagreement; alpha is then 1.0 (see `krippendorff_alpha_flagged`).
    """
    return krippendorff_alpha_flagged(table)[0]


def krippendorff_alpha_flagged(table: RatingTable) -> Tuple[float, bool]:
    """Alpha plus a flag that is set when expected disagreement is zero"""
    alpha, degenerate = _alpha(table.usable())
    if degenerate:
        logger.warning("all ratings fall into one category; alpha set to 1.0")
    return alpha, degenerate


@dataclass(frozen=True)
class ScaleAgreement:
    """The four coefficients of one scale"""

    p_a: float
    alpha: float
    kappa_bp: float
    gamma: float
    n_subjects: int = 0
    n_excluded: int = 0
    alpha_degenerate: bool = False


@dataclass(frozen=True)
class AgreementReport:
    """Agreement coefficients per MBTI scale"""

    rows: Tuple[Tuple[Scale, ScaleAgreement], ...] = field(default_factory=tuple)

    def __getitem__(self, scale) -> ScaleAgreement:
        scale = Scale(scale)
        for key, row in self.rows:
            if key is scale:
                return row
        raise KeyError(scale)

    def to_frame(self) -> pd.DataFrame:
        """One row per scale; ``p_a`` in percent as in the usual report layout"""
        return pd.DataFrame(
            [
                {
                    "scale": scale.label,
                    "p_a": 100.0 * row.p_a,
                    "alpha": row.alpha,
                    "kappa_bp": row.kappa_bp,
                    "gamma": row.gamma,
                    "subjects": row.n_subjects,
                    "excluded": row.n_excluded,
                }
                for scale, row in self.rows
            ]
        )


def scale_agreement(table: RatingTable) -> ScaleAgreement:
    """All four coefficients of one table"""
    counts = table.usable()
    p_a = float(np.mean(_pair_agreement(counts)))
    alpha, degenerate = krippendorff_alpha_flagged(table)
    return ScaleAgreement(
        p_a=p_a,
        alpha=alpha,
        kappa_bp=2.0 * p_a - 1.0,
        gamma=gwet_gamma(table),
        n_subjects=int(counts.shape[0]),
        n_excluded=len(table) - int(counts.shape[0]),
        alpha_degenerate=degenerate,
    )


def agreement_report(tables: Mapping[Scale, RatingTable]) -> AgreementReport:
    """Coefficients for the four scales; errors name the failing scale"""
    rows = []
    for scale in SCALES:
        if scale not in tables:
            raise ValidationError(f"scale {scale.value}: no rating table")
        try:
            rows.append((scale, scale_agreement(tables[scale])))
        except ValidationError as error:
            raise ValidationError(f"scale {scale.value}: {error}") from error
    return AgreementReport(tuple(rows))
