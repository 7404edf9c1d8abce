# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.model._boxcox`
================================================================================

Box-Cox power transform with a maximum-likelihood lambda.

``lambda`` maximizes the profile log-likelihood

.. code-block:: text

    llf(lambda) = -(n / 2) ln var(z(lambda)) + (lambda - 1) sum(ln y)

over ``[-5, 5]``: a grid search at step 0.1, refined by bounded Brent
minimization around the best grid point.

**Software and Dependencies:**

* scipy.special (``boxcox``, ``inv_boxcox``)
* scipy.optimize

"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy import optimize, special

from .._constants import LABEL_CEIL, LABEL_FLOOR
from .._errors import ValidationError
from .._helpers import clamp

__version__ = "0.0.0+auto.0"

logger = logging.getLogger(__name__)

LAMBDA_BOUNDS = (-5.0, 5.0)
GRID_STEP = 0.1


@dataclass(frozen=True)
class BoxCoxTransform:
    """A fitted transform: ``z = ((y + shift)**lmbda - 1) / lmbda``, or
    ``ln(y + shift)`` at ``lmbda = 0``"""

    lmbda: float
    shift: float = 0.0
    fitted: bool = True

    def to_dict(self) -> dict:
        """Serializable form"""
        return {"lambda": self.lmbda, "shift": self.shift}

    @classmethod
    def from_dict(cls, data: dict) -> BoxCoxTransform:
        """Inverse of `to_dict`"""
        return cls(float(data["lambda"]), float(data.get("shift", 0.0)))


def clamp_labels(y) -> np.ndarray:
    """Clamp labels in [0, 1] to ``[LABEL_FLOOR, LABEL_CEIL]`` so they are positive"""
    return clamp(np.asarray(y, dtype=np.float64), LABEL_FLOOR, LABEL_CEIL)


def log_likelihood(y: np.ndarray, lmbda: float) -> float:
    """Profile log-likelihood of ``lmbda`` for positive ``y``"""
    z = special.boxcox(y, lmbda)
    variance = float(np.var(z))
    if not math.isfinite(variance) or variance <= 0.0:
        return -math.inf
    return -0.5 * y.size * math.log(variance) + (lmbda - 1.0) * float(np.sum(np.log(y)))


def boxcox_fit(
    y, shift: float = 0.0, bounds: Tuple[float, float] = LAMBDA_BOUNDS
) -> BoxCoxTransform:
    """Maximum-likelihood Box-Cox transform for ``y + shift``.

    :raises ValidationError: for fewer than 3 values, constant values, or
        values that are not positive after the shift
    """
    y = np.asarray(y, dtype=np.float64).ravel() + shift
    if y.size < 3:
        raise ValidationError(f"need at least 3 values, got {y.size}")
    if np.any(~np.isfinite(y)) or np.any(y <= 0.0):
        raise ValidationError("values must be positive after the shift")
    if np.all(y == y[0]):
        raise ValidationError("cannot fit a Box-Cox transform to constant values")

    low, high = bounds
    grid = np.linspace(low, high, int(round((high - low) / GRID_STEP)) + 1)
    scores = np.array([log_likelihood(y, lmbda) for lmbda in grid])
    best = int(np.argmax(scores))
    bracket = (grid[max(best - 1, 0)], grid[min(best + 1, grid.size - 1)])
    result = optimize.minimize_scalar(
        lambda lmbda: -log_likelihood(y, lmbda),
        bounds=bracket,
        method="bounded",
        options={"xatol": 1e-8},
    )
    lmbda = float(grid[best])
    if result.success and -result.fun >= scores[best]:
        lmbda = float(result.x)
    logger.debug("box-cox lambda %.6f", lmbda)
    return BoxCoxTransform(lmbda, float(shift))


def boxcox_apply(transform: BoxCoxTransform, y) -> np.ndarray:
    """Transform ``y``; strictly increasing for every lambda"""
    y = np.asarray(y, dtype=np.float64) + transform.shift
    if np.any(y <= 0.0):
        raise ValidationError("values must be positive after the shift")
    return special.boxcox(y, transform.lmbda)


def boxcox_invert(transform: BoxCoxTransform, z) -> np.ndarray:
    """Inverse of `boxcox_apply`.

    :raises ValidationError: if ``lmbda * z + 1 <= 0`` for a nonzero lambda
    """
    z = np.asarray(z, dtype=np.float64)
    if transform.lmbda != 0.0 and np.any(transform.lmbda * z + 1.0 <= 0.0):
        raise ValidationError("value outside the range of the transform")
    return special.inv_boxcox(z, transform.lmbda) - transform.shift
