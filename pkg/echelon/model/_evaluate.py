# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.model._evaluate`
================================================================================

Correlation and error metrics. Correlations of a zero-variance vector are
undefined and reported as NaN.

**Software and Dependencies:**

* numpy
* scipy.stats (average ranks, Kendall tau-b)

"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats

from .._errors import ValidationError

__version__ = "0.0.0+auto.0"


@dataclass(frozen=True)
class EvalReport:
    """Pearson r, Spearman rho, Kendall tau-b and mean absolute error"""

    r: float
    rho: float
    tau: float
    mae: float
    n: int = 0

    @property
    def defined(self) -> bool:
        """False when the correlations are undefined (constant input)"""
        return not math.isnan(self.r)


def _pair(x, y, minimum: int = 2):
    x = np.asarray(x, dtype=np.float64).ravel()
    y = np.asarray(y, dtype=np.float64).ravel()
    if x.shape != y.shape:
        raise ValidationError(f"length mismatch: {x.size} != {y.size}")
    if x.size < minimum:
        raise ValidationError(f"need at least {minimum} values, got {x.size}")
    return x, y


def _constant(values: np.ndarray) -> bool:
    return bool(np.all(values == values[0]))


def pearson_r(x, y) -> float:
    """Pearson product-moment correlation, NaN if either input is constant"""
    x, y = _pair(x, y)
    if _constant(x) or _constant(y):
        return math.nan
    dx = x - x.mean()
    dy = y - y.mean()
    r = float(np.dot(dx, dy) / math.sqrt(np.dot(dx, dx) * np.dot(dy, dy)))
    return min(1.0, max(-1.0, r))


def spearman_rho(x, y) -> float:
    """Spearman correlation: Pearson r of average ranks"""
    x, y = _pair(x, y)
    return pearson_r(stats.rankdata(x), stats.rankdata(y))


def kendall_tau(x, y) -> float:
    """Kendall tau-b (tie corrected)"""
    x, y = _pair(x, y)
    if _constant(x) or _constant(y):
        return math.nan
    tau, _ = stats.kendalltau(x, y, variant="b")
    return float(tau)


def mean_absolute_error(y_true, y_pred) -> float:
    """Mean of ``|y_true - y_pred|``"""
    y_true, y_pred = _pair(y_true, y_pred, minimum=1)
    return float(np.mean(np.abs(y_true - y_pred)))


def evaluate(y_true, y_pred) -> EvalReport:
    """All four metrics for one prediction vector.

    :raises ValidationError: on unequal lengths or fewer than 3 values
    """
    y_true, y_pred = _pair(y_true, y_pred, minimum=3)
    return EvalReport(
        r=pearson_r(y_true, y_pred),
        rho=spearman_rho(y_true, y_pred),
        tau=kendall_tau(y_true, y_pred),
        mae=mean_absolute_error(y_true, y_pred),
        n=int(y_true.size),
    )
