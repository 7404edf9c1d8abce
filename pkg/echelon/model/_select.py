# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.model._select`
================================================================================

Model selection over feature/algorithm candidates. Candidates are ranked by
mean validation MAE across the four scales, lowest first; equal MAE goes to
the higher mean Kendall tau, then to the earlier candidate.

**Software and Dependencies:**

* joblib for running candidates in parallel; results are reduced in
  candidate order

"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
from joblib import Parallel, delayed

from .._constants import Scale
from .._errors import EchelonError, ModelSelectionError
from ..features import CategoryDictionary
from ._evaluate import EvalReport
from ._pipeline import Candidate, Instance, evaluate_model, fit_model

__version__ = "0.0.0+auto.0"

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CandidateScore:
    """Validation result of one candidate; ``error`` is set if it failed"""

    index: int
    candidate: Candidate
    reports: Optional[Dict[Scale, EvalReport]] = None
    error: Optional[str] = None

    @property
    def failed(self) -> bool:
        """True if training or evaluation raised"""
        return self.reports is None

    @property
    def mean_mae(self) -> float:
        """Mean MAE across scales"""
        return float(np.mean([r.mae for r in self.reports.values()]))

    @property
    def mean_tau(self) -> float:
        """Mean Kendall tau across the scales where it is defined"""
        taus = [r.tau for r in self.reports.values() if not math.isnan(r.tau)]
        return float(np.mean(taus)) if taus else math.nan

    def rank_key(self) -> tuple:
        """Sort key: MAE ascending, tau descending, candidate order"""
        tau = self.mean_tau
        return (self.mean_mae, -tau if not math.isnan(tau) else math.inf, self.index)


@dataclass(frozen=True)
class Selection:
    """Outcome of `select_model`"""

    best_index: int
    scores: Tuple[CandidateScore, ...]

    @property
    def best(self) -> Candidate:
        """The winning candidate"""
        return self.scores[self.best_index].candidate


def _score(index, candidate, train, validation, dictionary, space) -> CandidateScore:
    try:
        model = fit_model(candidate, train, dictionary)
        reports = evaluate_model(model, validation, space)
    except (EchelonError, ArithmeticError, ValueError) as error:
        return CandidateScore(index, candidate, error=f"{candidate.name}: {error}")
    return CandidateScore(index, candidate, reports)


def best_score(scores: Sequence[CandidateScore]) -> CandidateScore:
    """The best non-failed score.

    :raises ModelSelectionError: if every score failed
    """
    usable = [score for score in scores if not score.failed]
    if not usable:
        raise ModelSelectionError([score.error for score in scores])
    return min(usable, key=CandidateScore.rank_key)


def select_model(
    candidates: Sequence[Candidate],
    train: Sequence[Instance],
    validation: Sequence[Instance],
    *,
    dictionary: Optional[CategoryDictionary] = None,
    space: str = "transformed",
    n_jobs: int = 1,
) -> Selection:
    """Train every candidate on ``train`` and pick the best on ``validation``.

    :raises ModelSelectionError: if every candidate fails
    """
    if not candidates:
        raise ModelSelectionError(["no candidates given"])
    with Parallel(n_jobs=n_jobs) as parallel:
        scores = parallel(
            delayed(_score)(index, candidate, train, validation, dictionary, space)
            for index, candidate in enumerate(candidates)
        )
    scores = tuple(scores)
    for score in scores:
        if score.failed:
            logger.warning("candidate failed: %s", score.error)
        else:
            logger.info(
                "%s: mean mae %.6f, mean tau %.4f",
                score.candidate.name,
                score.mean_mae,
                score.mean_tau,
            )
    return Selection(best_score(scores).index, scores)
