# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.model._explain`
================================================================================

Exact Shapley attributions of a linear model with mean imputation. For
``f(x) = w.x + b`` the Shapley value of feature ``j`` is
``w_j (x_j - mean_j)``; the values add up to ``f(x) - f(mean)``.

"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .._errors import ValidationError
from ..features import SparseVector

__version__ = "0.0.0+auto.0"


@dataclass(frozen=True, eq=False)
class Explanation:
    """Per-feature contributions to one prediction"""

    contributions: np.ndarray
    baseline: float
    prediction: float

    @property
    def total(self) -> float:
        """Sum of the contributions"""
        return float(np.sum(self.contributions))

    def top(self, k: int, names: Optional[Sequence[str]] = None) -> List[Tuple[str, float]]:
        """The ``k`` largest contributions by magnitude.

        Ties are broken by feature position. Zero contributions are left out.
        """
        nonzero = np.flatnonzero(self.contributions)
        order = sorted(nonzero.tolist(), key=lambda j: (-abs(self.contributions[j]), j))
        return [
            (names[j] if names is not None else str(j), float(self.contributions[j]))
            for j in order[:k]
        ]


def explain_linear(model, x, background_mean) -> Explanation:
    """Shapley contributions of a linear model.

    :param model: Anything with ``weights`` and ``bias`` (e.g. `SvrModel`)
    :param x: The explained row, dense or `SparseVector`
    :param background_mean: Mean feature vector of a reference set
    """
    weights = np.asarray(model.weights, dtype=np.float64)
    x = x.to_dense() if isinstance(x, SparseVector) else np.asarray(x, dtype=np.float64).ravel()
    background_mean = np.asarray(background_mean, dtype=np.float64).ravel()
    if not weights.shape == x.shape == background_mean.shape:
        raise ValidationError(
            f"dimension mismatch: weights {weights.size}, x {x.size}, "
            f"background {background_mean.size}"
        )
    contributions = weights * (x - background_mean)
    return Explanation(
        contributions=contributions,
        baseline=float(weights @ background_mean + model.bias),
        prediction=float(weights @ x + model.bias),
    )
