# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.agreement._table`
================================================================================

Subjects × categories count table for binary ratings by anonymous raters

"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Mapping, Sequence

import numpy as np

from .._constants import SCALES, Scale
from .._errors import ValidationError
from ..labels._structs import VoteRecord

__version__ = "0.0.0+auto.0"

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class RatingTable:
    """Rater counts per subject for the two categories (left pole, right pole).

    :param subjects: Subject identifiers
    :param counts: Integer array of shape ``(len(subjects), 2)``
    """

    subjects: tuple
    counts: np.ndarray

    def __post_init__(self):
        counts = np.asarray(self.counts, dtype=np.int64).reshape(-1, 2)
        if counts.shape[0] != len(self.subjects):
            raise ValidationError("one count pair per subject is required")
        if np.any(counts < 0):
            raise ValidationError("rater counts must be >= 0")
        object.__setattr__(self, "subjects", tuple(self.subjects))
        object.__setattr__(self, "counts", counts)

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[int]], subjects=None) -> RatingTable:
        """Build from ``(n_left, n_right)`` pairs; subjects default to their positions"""
        if subjects is None:
            subjects = range(len(pairs))
        return cls(tuple(subjects), np.asarray(pairs, dtype=np.int64).reshape(-1, 2))

    @classmethod
    def from_votes(cls, votes: Mapping[str, Sequence[VoteRecord]], scale) -> RatingTable:
        """Table of one scale from a vote table (entity → vote records)"""
        scale = Scale(scale)
        subjects = []
        pairs = []
        for entity, records in votes.items():
            for record in records:
                if record.scale is scale:
                    subjects.append(entity)
                    pairs.append((record.votes_left, record.votes_right))
        return cls(tuple(subjects), np.asarray(pairs, dtype=np.int64).reshape(-1, 2))

    def __len__(self) -> int:
        return len(self.subjects)

    @property
    def raters(self) -> np.ndarray:
        """Raters per subject"""
        return self.counts.sum(axis=1)

    def swapped(self) -> RatingTable:
        """The same table with the two categories exchanged"""
        return RatingTable(self.subjects, self.counts[:, ::-1])

    def usable(self) -> np.ndarray:
        """Counts of the subjects with at least two raters.

        :raises ValidationError: if no subject qualifies
        """
        mask = self.raters >= 2
        excluded = int(np.count_nonzero(~mask))
        if excluded:
            logger.info("excluding %d subject(s) with fewer than 2 raters", excluded)
        if not mask.any():
            raise ValidationError("no subject with at least 2 raters")
        return self.counts[mask]


def tables_from_votes(votes: Mapping[str, Sequence[VoteRecord]]) -> Dict[Scale, RatingTable]:
    """One `RatingTable` per scale"""
    return {scale: RatingTable.from_votes(votes, scale) for scale in SCALES}
