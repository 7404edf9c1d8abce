# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.econ._ols`
================================================================================

Ordinary least squares by column-pivoted QR decomposition, with classical
standard errors, Student-t p-values and variance inflation factors.

Two-sided p-values use the regularized incomplete beta function:

.. code-block:: text

    p = I_{df / (df + t^2)}(df / 2, 1 / 2)

**Software and Dependencies:**

* scipy.linalg, scipy.special

"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from scipy import linalg, special

from .._constants import STAR_THRESHOLDS
from .._errors import RankDeficiencyError, ValidationError

__version__ = "0.0.0+auto.0"

logger = logging.getLogger(__name__)


def stars(p_value: float) -> str:
    """``***``, ``**``, ``*`` at p <= .001, .01, .05; empty otherwise"""
    for threshold, mark in STAR_THRESHOLDS:
        if p_value <= threshold:
            return mark
    return ""


def t_pvalue(t: np.ndarray, df: int) -> np.ndarray:
    """Two-sided p-values of t statistics with ``df`` degrees of freedom"""
    t = np.asarray(t, dtype=np.float64)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        x = df / (df + t * t)
    return special.betainc(0.5 * df, 0.5, np.where(np.isinf(t), 0.0, x))


@dataclass(frozen=True)
class Coefficient:
    """One row of a regression table"""

    name: str
    beta: float
    se: float
    t: float
    p: float

    @property
    def stars(self) -> str:
        """Significance marks of ``p``"""
        return stars(self.p)


@dataclass(frozen=True, eq=False)
class OlsReport:
    """Fitted least-squares regression"""

    columns: Tuple[str, ...]
    beta: np.ndarray
    se: np.ndarray
    t: np.ndarray
    p: np.ndarray
    n: int
    k: int
    r2: float
    adj_r2: float
    sigma2: float
    condition_number: float
    has_intercept: bool = True
    reference_levels: Dict[str, str] = field(default_factory=dict)
    dropped_columns: Tuple[str, ...] = ()
    n_filtered: int = 0

    @property
    def df_resid(self) -> int:
        """Residual degrees of freedom"""
        return self.n - len(self.columns)

    @property
    def stars(self) -> Tuple[str, ...]:
        """Significance marks per column"""
        return tuple(stars(p) for p in self.p)

    def __getitem__(self, name: str) -> Coefficient:
        j = self.columns.index(name)
        return Coefficient(name, float(self.beta[j]), float(self.se[j]), float(self.t[j]), float(self.p[j]))

    def __contains__(self, name: str) -> bool:
        return name in self.columns

    def coefficients(self):
        """All rows in column order"""
        return [self[name] for name in self.columns]

    def to_frame(self) -> pd.DataFrame:
        """``regressor, beta, se, t, p, stars``"""
        return pd.DataFrame(
            {
                "regressor": self.columns,
                "beta": self.beta,
                "se": self.se,
                "t": self.t,
                "p": self.p,
                "stars": self.stars,
            }
        )


def _intercept_column(X: np.ndarray) -> Optional[int]:
    for j in range(X.shape[1]):
        column = X[:, j]
        if column[0] != 0.0 and np.all(column == column[0]):
            return j
    return None


def ols_fit(X, y, columns: Optional[Sequence[str]] = None, **metadata) -> OlsReport:
    """Least-squares fit of ``y`` on the columns of ``X``.

    ``k`` counts the regressors other than a constant column, and the
    adjusted R² is ``1 - (1 - R²)(n - 1) / (n - k - 1)``.

    :raises ValidationError: if there are not more rows than columns
    :raises RankDeficiencyError: if ``X`` lacks full column rank
    """
    # pylint: disable=invalid-name,too-many-locals
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64).ravel()
    n, n_cols = X.shape
    columns = tuple(columns) if columns is not None else tuple(f"x{j}" for j in range(n_cols))
    if len(columns) != n_cols or y.size != n:
        raise ValidationError("X, y and column names do not line up")
    if n <= n_cols:
        raise ValidationError(f"{n} rows for {n_cols} columns; need more rows than columns")

    q, r, pivot = linalg.qr(X, mode="economic", pivoting=True)
    diagonal = np.abs(np.diag(r))
    tolerance = diagonal[0] * max(n, n_cols) * np.finfo(np.float64).eps
    rank = int(np.count_nonzero(diagonal > tolerance))
    if rank < n_cols:
        raise RankDeficiencyError([columns[j] for j in sorted(pivot[rank:])])

    beta = np.empty(n_cols)
    beta[pivot] = linalg.solve_triangular(r, q.T @ y)
    residuals = y - X @ beta
    sse = float(residuals @ residuals)
    df = n - n_cols
    sigma2 = sse / df
    r_inv = linalg.solve_triangular(r, np.eye(n_cols))
    variances = np.empty(n_cols)
    variances[pivot] = np.sum(r_inv * r_inv, axis=1) * sigma2
    se = np.sqrt(variances)
    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.where(se > 0.0, beta / se, np.sign(beta) * np.inf)
    t = np.nan_to_num(t, nan=0.0, posinf=np.inf, neginf=-np.inf)
    p = t_pvalue(t, df)

    intercept = _intercept_column(X)
    if intercept is not None:
        centered = y - y.mean()
        sst = float(centered @ centered)
        k = n_cols - 1
    else:
        sst = float(y @ y)
        k = n_cols
    r2 = 1.0 - sse / sst if sst > 0.0 else 1.0
    adj_r2 = 1.0 - (1.0 - r2) * (n - 1) / (n - k - 1) if n - k - 1 > 0 else math.nan
    return OlsReport(
        columns=columns,
        beta=beta,
        se=se,
        t=t,
        p=p,
        n=n,
        k=k,
        r2=r2,
        adj_r2=adj_r2,
        sigma2=sigma2,
        condition_number=float(np.linalg.cond(X)),
        has_intercept=intercept is not None,
        **metadata,
    )


@dataclass(frozen=True, eq=False)
class VifReport:
    """Variance inflation factor per column; perfectly collinear columns are
    infinite and flagged"""

    columns: Tuple[str, ...]
    values: np.ndarray
    flagged: Tuple[str, ...] = ()

    def __getitem__(self, name: str) -> float:
        return float(self.values[self.columns.index(name)])

    def to_frame(self) -> pd.DataFrame:
        """``regressor, vif, collinear``"""
        return pd.DataFrame(
            {
                "regressor": self.columns,
                "vif": self.values,
                "collinear": [name in self.flagged for name in self.columns],
            }
        )


def vif(X, columns: Optional[Sequence[str]] = None) -> VifReport:
    """``1 / (1 - R²_j)`` from regressing each non-constant column on all
    other columns plus an intercept"""
    # pylint: disable=invalid-name
    X = np.asarray(X, dtype=np.float64)
    n, n_cols = X.shape
    columns = tuple(columns) if columns is not None else tuple(f"x{j}" for j in range(n_cols))
    intercept = _intercept_column(X)
    targets = [j for j in range(n_cols) if j != intercept]
    names = []
    values = []
    flagged = []
    for j in targets:
        others = [c for c in targets if c != j]
        design = np.hstack([np.ones((n, 1)), X[:, others]])
        coef, *_ = np.linalg.lstsq(design, X[:, j], rcond=None)
        residual = X[:, j] - design @ coef
        centered = X[:, j] - X[:, j].mean()
        sst = float(centered @ centered)
        unexplained = float(residual @ residual) / sst if sst > 0.0 else 0.0
        names.append(columns[j])
        if unexplained <= 1e-10:
            values.append(math.inf)
            flagged.append(columns[j])
        else:
            values.append(1.0 / unexplained)
    if flagged:
        logger.warning("perfectly collinear column(s): %s", ", ".join(flagged))
    return VifReport(tuple(names), np.array(values), tuple(flagged))
