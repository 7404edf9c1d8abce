# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.labels._summary`
================================================================================

Label distributions and the MBTI × Big 5 correlation matrix

"""

from __future__ import annotations

from typing import Sequence

import numpy as np
from scipy import stats

from .._constants import BIG5_TRAITS, SCALES
from .._errors import ValidationError
from ..model._evaluate import pearson_r
from ._structs import Big5Vector, LabelSummary, MbtiVector, ScaleSummary

__version__ = "0.0.0+auto.0"

HISTOGRAM_BINS = 10


def _summarize(values: np.ndarray) -> ScaleSummary:
    std = float(np.std(values, ddof=1))
    if std == 0.0:
        skewness = 0.0
    else:
        skewness = float(stats.skew(values, bias=False))
        if not np.isfinite(skewness):
            skewness = 0.0
    counts, _ = np.histogram(values, bins=HISTOGRAM_BINS, range=(0.0, 1.0))
    return ScaleSummary(float(np.mean(values)), std, skewness, tuple(int(c) for c in counts))


def label_summary(labels: Sequence[MbtiVector]) -> LabelSummary:
    """Mean, sample standard deviation, adjusted skewness and a 10-bin
    histogram over [0, 1] for each scale.

    A constant scale has skewness 0.

    :raises ValidationError: for fewer than two vectors
    """
    if len(labels) < 2:
        raise ValidationError(f"need at least 2 label vectors, got {len(labels)}")
    matrix = np.vstack([v.as_array() for v in labels])
    return LabelSummary(
        n=len(labels),
        scales=tuple((scale, _summarize(matrix[:, i])) for i, scale in enumerate(SCALES)),
    )


def cross_correlation(mbti: Sequence[MbtiVector], big5: Sequence[Big5Vector]) -> np.ndarray:
    """4 × 5 matrix of Pearson correlations between MBTI scales (rows) and
    Big 5 traits (columns), paired by position.

    Undefined entries (a constant column) are NaN.
    """
    if len(mbti) != len(big5):
        raise ValidationError(f"length mismatch: {len(mbti)} MBTI vs {len(big5)} Big 5")
    if len(mbti) < 3:
        raise ValidationError(f"need at least 3 pairs, got {len(mbti)}")
    left = np.vstack([v.as_array() for v in mbti])
    right = np.vstack([v.as_array() for v in big5])
    result = np.empty((len(SCALES), len(BIG5_TRAITS)))
    for i in range(len(SCALES)):
        for j in range(len(BIG5_TRAITS)):
            result[i, j] = pearson_r(left[:, i], right[:, j])
    return result
