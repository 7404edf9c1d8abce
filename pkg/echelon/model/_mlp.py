# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.model._mlp`
================================================================================

Feed-forward regressor with two rectified hidden layers and a linear output,
trained on mean absolute error by seeded minibatch stochastic gradient
descent. First-layer updates touch only the input rows active in a batch, so
sparse tf-idf input stays cheap.

"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace
from typing import Dict, Tuple

import numpy as np
from scipy import sparse

from .._errors import DivergenceError, ValidationError
from ._matrix import as_csr, check_xy

__version__ = "0.0.0+auto.0"

logger = logging.getLogger(__name__)

PARAMETER_NAMES = ("w1", "b1", "w2", "b2", "w3", "b3")


@dataclass(frozen=True)
class MlpConfig:
    """Architecture and training settings of `train_mlp`"""

    hidden: Tuple[int, int] = (64, 64)
    epochs: int = 20
    step_size: float = 0.01
    batch_size: int = 16
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "hidden", tuple(int(h) for h in self.hidden))
        if len(self.hidden) != 2 or min(self.hidden) < 1:
            raise ValidationError("two hidden layers of size >= 1 are required")
        if self.epochs < 0:
            raise ValidationError("epochs must be >= 0")
        if not self.step_size > 0:
            raise ValidationError("step_size must be > 0")
        if self.batch_size < 1:
            raise ValidationError("batch_size must be >= 1")

    def with_changes(self, **changes) -> MlpConfig:
        """Copy with some fields replaced"""
        return replace(self, **changes)


@dataclass(frozen=True, eq=False)
class MlpModel:
    """A trained feed-forward regressor"""

    parameters: Dict[str, np.ndarray]
    config: MlpConfig
    loss_curve: Tuple[float, ...] = ()

    def __post_init__(self):
        shapes = [self.parameters[name].shape for name in PARAMETER_NAMES]
        first, second = shapes[0][1], shapes[2][1]
        expected = [
            (shapes[0][0], first),
            (first,),
            (first, second),
            (second,),
            (second,),
            (),
        ]
        if shapes != expected:
            raise ValidationError(f"layer shapes do not chain: {shapes}")
        if not all(np.all(np.isfinite(p)) for p in self.parameters.values()):
            raise ValidationError("parameters must be finite")

    @property
    def dim(self) -> int:
        """Input dimension"""
        return int(self.parameters["w1"].shape[0])

    def predict(self, X) -> np.ndarray:
        """Network output for every row"""
        matrix = as_csr(X)
        if matrix.shape[1] != self.dim:
            raise ValidationError(f"expected {self.dim} features, got {matrix.shape[1]}")
        return _forward(self.parameters, matrix)[-1]


def _relu(values: np.ndarray) -> np.ndarray:
    return np.maximum(values, 0.0)


def _forward(params: Dict[str, np.ndarray], matrix: sparse.csr_matrix):
    hidden1 = _relu(np.asarray(matrix @ params["w1"]) + params["b1"])
    hidden2 = _relu(hidden1 @ params["w2"] + params["b2"])
    output = hidden2 @ params["w3"] + params["b3"]
    return hidden1, hidden2, output


def _init(rng: np.random.Generator, n_inputs: int, config: MlpConfig, y: np.ndarray):
    # He-uniform weights, zero hidden biases, output bias at the target median
    def he_uniform(fan_in, shape):
        limit = math.sqrt(6.0 / max(fan_in, 1))
        return rng.uniform(-limit, limit, size=shape)

    first, second = config.hidden
    return {
        "w1": he_uniform(n_inputs, (n_inputs, first)),
        "b1": np.zeros(first),
        "w2": he_uniform(first, (first, second)),
        "b2": np.zeros(second),
        "w3": he_uniform(second, (second,)),
        "b3": np.array(float(np.median(y))),
    }


def _mae(params, matrix, y) -> float:
    return float(np.mean(np.abs(_forward(params, matrix)[-1] - y)))


def _step(params, batch: sparse.csr_matrix, y: np.ndarray, step_size: float):
    hidden1, hidden2, output = _forward(params, batch)
    d_out = np.sign(output - y) / y.size
    d_hidden2 = np.outer(d_out, params["w3"]) * (hidden2 > 0.0)
    d_hidden1 = (d_hidden2 @ params["w2"].T) * (hidden1 > 0.0)

    params["w3"] -= step_size * (hidden2.T @ d_out)
    params["b3"] -= step_size * d_out.sum()
    params["w2"] -= step_size * (hidden1.T @ d_hidden2)
    params["b2"] -= step_size * d_hidden2.sum(axis=0)
    active = np.unique(batch.indices)
    if active.size:
        grad = np.asarray(batch[:, active].T @ d_hidden1)
        params["w1"][active] -= step_size * grad
    params["b1"] -= step_size * d_hidden1.sum(axis=0)


def train_mlp(X, y, config: MlpConfig = None) -> MlpModel:
    """Train the regressor.

    ``loss_curve[0]`` is the training MAE of the initialized network and
    ``loss_curve[k]`` the MAE after epoch ``k``. The same seed yields
    bit-identical parameters.

    :raises DivergenceError: if the loss becomes non-finite
    """
    config = config or MlpConfig()
    matrix, y = check_xy(X, y)
    rng = np.random.default_rng(config.seed)
    params = _init(rng, matrix.shape[1], config, y)
    loss_curve = [_mae(params, matrix, y)]
    for epoch in range(1, config.epochs + 1):
        order = rng.permutation(y.size)
        for start in range(0, y.size, config.batch_size):
            rows = order[start : start + config.batch_size]
            _step(params, matrix[rows], y[rows], config.step_size)
        loss = _mae(params, matrix, y)
        if not math.isfinite(loss):
            raise DivergenceError(epoch, loss)
        loss_curve.append(loss)
        logger.debug("mlp epoch %d: mae %.6f", epoch, loss)
    return MlpModel(params, config, tuple(loss_curve))
