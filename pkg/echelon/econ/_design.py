# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.econ._design`
================================================================================

Per-call risk rows and the standardized fixed-effects design matrix built
from them

"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .._constants import SCALES
from .._errors import ValidationError
from ..labels._structs import MbtiVector
from ._industry import Industry

__version__ = "0.0.0+auto.0"

logger = logging.getLogger(__name__)

FIN_CONTROLS = ("past_vola", "size", "volume", "leverage", "spread", "btm", "sue", "roa")
DEMOGRAPHICS = ("age", "gender")
LOG1P_COLUMNS = ("size", "btm", "volume")
INTERCEPT = "const"


@dataclass(frozen=True)
class RiskRow:
    """One earnings call: post-call volatility, controls, CEO personality and
    fixed-effect levels"""

    call_id: str
    vola_post: float
    age: float
    gender: int
    past_vola: float
    size: float
    volume: float
    leverage: float
    spread: float
    btm: float
    sue: float
    roa: float
    industry: int
    period: str
    mbti: Optional[MbtiVector] = None

    def __post_init__(self):
        if not self.vola_post >= 0.0:
            raise ValidationError(f"call {self.call_id}: vola_post must be >= 0")
        if self.size < 0.0 or self.volume < 0.0:
            raise ValidationError(f"call {self.call_id}: size and volume must be >= 0")
        if self.gender not in (0, 1):
            raise ValidationError(f"call {self.call_id}: gender must be 0 or 1")
        object.__setattr__(self, "industry", Industry(int(self.industry)))

    def value(self, name: str) -> float:
        """Raw value of a control or MBTI scale"""
        if name in ("ei", "sn", "tf", "jp"):
            if self.mbti is None:
                raise ValidationError(f"call {self.call_id}: no MBTI scores")
            return self.mbti[name]
        return float(getattr(self, name))


@dataclass(frozen=True)
class DesignSpec:
    """Which regressors enter the design"""

    controls: Tuple[str, ...] = FIN_CONTROLS
    mbti: bool = False
    demographics: bool = False
    industry_effects: bool = True
    period_effects: bool = True
    standardize_dummies: bool = True


@dataclass(frozen=True, eq=False)
class DesignMatrix:
    """Standardized regressors with an intercept in column 0, and the
    standardized label"""

    X: np.ndarray  # pylint: disable=invalid-name
    y: np.ndarray
    columns: Tuple[str, ...]
    call_ids: Tuple[str, ...]
    reference_levels: Dict[str, str] = field(default_factory=dict)
    dropped_columns: Tuple[str, ...] = ()
    n_filtered: int = 0

    @property
    def n(self) -> int:
        """Rows used"""
        return int(self.X.shape[0])


def _dummies(levels: Sequence[str], prefix: str) -> Tuple[List[str], np.ndarray, Optional[str]]:
    unique = sorted(set(levels))
    if len(unique) < 2:
        return [], np.zeros((len(levels), 0)), unique[0] if unique else None
    kept = unique[1:]
    matrix = np.array([[1.0 if level == k else 0.0 for k in kept] for level in levels])
    return [f"{prefix}_{k}" for k in kept], matrix, unique[0]


def _standardize(values: np.ndarray) -> np.ndarray:
    return (values - values.mean(axis=0)) / values.std(axis=0, ddof=1)


def build_design_matrix(rows: Sequence[RiskRow], spec: DesignSpec = DesignSpec()) -> DesignMatrix:
    """Design matrix for the volatility regression.

    Rows with ``btm <= 0`` are removed; size, BTM and volume enter as
    ``log1p``; industry and period become dummies with the first sorted
    level as reference; every non-intercept column and the label are
    z-standardized. Zero-variance columns are dropped with a warning.
    """
    kept = [row for row in rows if row.btm > 0.0]
    n_filtered = len(rows) - len(kept)
    if n_filtered:
        logger.info("removed %d row(s) with btm <= 0", n_filtered)
    if not kept:
        raise ValidationError("no rows left after removing btm <= 0")
    if len(kept) < 2:
        raise ValidationError("need at least 2 rows")
    if spec.period_effects and len({row.period for row in kept}) < 2:
        raise ValidationError("period effects need at least 2 distinct periods")

    names = list(spec.controls)
    if spec.demographics:
        names += list(DEMOGRAPHICS)
    if spec.mbti:
        names += [scale.value for scale in SCALES]
    continuous = np.array([[row.value(name) for name in names] for row in kept], dtype=np.float64)
    for j, name in enumerate(names):
        if name in LOG1P_COLUMNS:
            continuous[:, j] = np.log1p(continuous[:, j])

    blocks = [continuous]
    dummy_names: List[str] = []
    references = {}
    if spec.industry_effects:
        columns, matrix, reference = _dummies([row.industry.name for row in kept], "industry")
        dummy_names += columns
        blocks.append(matrix)
        references["industry"] = reference
    if spec.period_effects:
        columns, matrix, reference = _dummies([row.period for row in kept], "period")
        dummy_names += columns
        blocks.append(matrix)
        references["period"] = reference
    regressors = np.hstack(blocks)
    all_names = names + dummy_names

    spread = regressors.std(axis=0, ddof=1)
    constant = spread == 0.0
    dropped = tuple(name for name, flag in zip(all_names, constant) if flag)
    if dropped:
        logger.warning("dropping zero-variance column(s): %s", ", ".join(dropped))
    regressors = regressors[:, ~constant]
    all_names = [name for name, flag in zip(all_names, constant) if not flag]
    n_continuous = sum(1 for name in all_names if name not in dummy_names)

    if spec.standardize_dummies:
        regressors = _standardize(regressors)
    else:
        regressors[:, :n_continuous] = _standardize(regressors[:, :n_continuous])

    y = np.array([row.vola_post for row in kept])
    if np.std(y) == 0.0:
        raise ValidationError("the volatility label has zero variance")
    return DesignMatrix(
        X=np.hstack([np.ones((len(kept), 1)), regressors]),
        y=_standardize(y),
        columns=(INTERCEPT, *all_names),
        call_ids=tuple(row.call_id for row in kept),
        reference_levels=references,
        dropped_columns=dropped,
        n_filtered=n_filtered,
    )
