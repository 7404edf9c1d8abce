# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.model._matrix`
================================================================================

Input coercion shared by the regressors

"""

from __future__ import annotations

from typing import Tuple

import numpy as np
from scipy import sparse

from .._errors import ValidationError
from ..features import SparseVector, stack

__version__ = "0.0.0+auto.0"


def as_csr(X) -> sparse.csr_matrix:
    """CSR float64 matrix from a sparse matrix, a dense 2-D array or a list of
    `SparseVector` rows"""
    if isinstance(X, (list, tuple)) and X and isinstance(X[0], SparseVector):
        matrix = stack(X)
    elif sparse.issparse(X):
        matrix = sparse.csr_matrix(X, dtype=np.float64)
    else:
        dense = np.asarray(X, dtype=np.float64)
        if dense.ndim != 2:
            raise ValidationError("feature matrix must be 2-D")
        matrix = sparse.csr_matrix(dense)
    matrix.sort_indices()
    return matrix


def check_xy(X, y, minimum: int = 2) -> Tuple[sparse.csr_matrix, np.ndarray]:
    """Coerce a training pair and check that rows and targets line up"""
    matrix = as_csr(X)
    y = np.asarray(y, dtype=np.float64).ravel()
    if matrix.shape[0] != y.size:
        raise ValidationError(f"{matrix.shape[0]} feature rows but {y.size} targets")
    if y.size < minimum:
        raise ValidationError(f"need at least {minimum} training rows, got {y.size}")
    if not np.all(np.isfinite(y)):
        raise ValidationError("targets must be finite")
    return matrix, y
