# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.model._svr`
================================================================================

Linear epsilon-insensitive support vector regression, trained by coordinate
descent on the dual problem

.. code-block:: text

    min_beta  1/2 ||sum_i beta_i x_i||^2 - y.beta + epsilon ||beta||_1
    s.t.      -C_i <= beta_i <= C_i

with ``w = sum_i beta_i x_i``. The bias is learned as the weight of an extra
constant feature of value ``bias_scale`` (so it is regularized like the other
weights). Each pass visits all coordinates in a seeded random order and
solves every one-dimensional subproblem exactly, so the dual objective never
increases from one pass to the next.

"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Optional, Tuple

import numpy as np

from .._errors import ValidationError
from ._matrix import as_csr, check_xy

__version__ = "0.0.0+auto.0"

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SvrParams:
    """Hyperparameters of `train_svr`"""

    # pylint: disable=invalid-name
    C: float = 1.0
    epsilon: float = 0.1
    tol: float = 1e-4
    max_passes: int = 1000
    bias_scale: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if not self.C > 0:
            raise ValidationError("C must be > 0")
        if self.epsilon < 0:
            raise ValidationError("epsilon must be >= 0")
        if not self.tol > 0:
            raise ValidationError("tol must be > 0")
        if self.max_passes < 1:
            raise ValidationError("max_passes must be >= 1")
        if self.bias_scale < 0:
            raise ValidationError("bias_scale must be >= 0")

    def with_changes(self, **changes) -> SvrParams:
        """Copy with some fields replaced"""
        return replace(self, **changes)


@dataclass(frozen=True, eq=False)
class SvrModel:
    """A trained linear SVR"""

    weights: np.ndarray
    bias: float
    params: SvrParams
    objective: Tuple[float, ...] = ()
    passes: int = 0
    converged: bool = True

    @property
    def dim(self) -> int:
        """Feature dimension"""
        return int(self.weights.shape[0])

    @property
    def final_objective(self) -> float:
        """Dual objective after the last pass"""
        return self.objective[-1] if self.objective else 0.0

    def predict(self, X) -> np.ndarray:
        """``X w + bias`` for every row"""
        matrix = as_csr(X)
        if matrix.shape[1] != self.dim:
            raise ValidationError(f"expected {self.dim} features, got {matrix.shape[1]}")
        return matrix @ self.weights + self.bias


def _violation(beta: float, upper: float, g_plus: float, g_minus: float) -> float:
    # projected gradient of the dual at one coordinate
    if beta == 0.0:
        if g_plus < 0.0:
            return -g_plus
        if g_minus > 0.0:
            return g_minus
        return 0.0
    if beta >= upper:
        return max(g_plus, 0.0)
    if beta <= -upper:
        return max(-g_minus, 0.0)
    return abs(g_plus) if beta > 0.0 else abs(g_minus)


def train_svr(
    X,
    y,
    params: Optional[SvrParams] = None,
    sample_weight=None,
) -> SvrModel:
    """Fit a linear epsilon-SVR.

    :param X: Sparse matrix, dense array or list of `SparseVector` rows
    :param y: Targets
    :param SvrParams params: Hyperparameters (defaults: C 1, epsilon 0.1,
        tol 1e-4, 1000 passes)
    :param sample_weight: Optional positive per-row multipliers of C
    """
    params = params or SvrParams()
    matrix, y = check_xy(X, y)
    n_rows = y.size
    upper = np.full(n_rows, params.C)
    if sample_weight is not None:
        sample_weight = np.asarray(sample_weight, dtype=np.float64).ravel()
        if sample_weight.shape != (n_rows,) or np.any(sample_weight <= 0):
            raise ValidationError("sample weights must be positive, one per row")
        upper = upper * sample_weight

    indptr, indices, data = matrix.indptr, matrix.indices, matrix.data
    bias_scale = params.bias_scale
    diag = np.asarray(matrix.multiply(matrix).sum(axis=1)).ravel() + bias_scale**2
    weights = np.zeros(matrix.shape[1])
    w_bias = 0.0
    beta = np.zeros(n_rows)
    rng = np.random.default_rng(params.seed)
    epsilon = params.epsilon

    objective = []
    converged = False
    passes = 0
    for passes in range(1, params.max_passes + 1):
        worst = 0.0
        for i in rng.permutation(n_rows):
            h = diag[i]
            if h <= 0.0:
                continue
            start, stop = indptr[i], indptr[i + 1]
            cols = indices[start:stop]
            vals = data[start:stop]
            gradient = float(weights[cols] @ vals) + w_bias * bias_scale - y[i]
            g_plus = gradient + epsilon
            g_minus = gradient - epsilon
            old = beta[i]
            worst = max(worst, _violation(old, upper[i], g_plus, g_minus))
            if g_plus < h * old:
                step = -g_plus / h
            elif g_minus > h * old:
                step = -g_minus / h
            else:
                step = -old
            new = min(max(old + step, -upper[i]), upper[i])
            delta = new - old
            if delta != 0.0:
                beta[i] = new
                weights[cols] += delta * vals
                w_bias += delta * bias_scale
        objective.append(
            0.5 * (float(weights @ weights) + w_bias * w_bias)
            - float(y @ beta)
            + epsilon * float(np.abs(beta).sum())
        )
        if worst < params.tol:
            converged = True
            break

    if converged:
        logger.debug("svr converged after %d passes", passes)
    else:
        logger.warning("svr stopped at the pass cap (%d) before reaching tol", passes)
    return SvrModel(
        weights=weights,
        bias=w_bias * bias_scale,
        params=params,
        objective=tuple(objective),
        passes=passes,
        converged=converged,
    )
