# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.labels._structs`
================================================================================

Vote and personality data classes. Pole orientation: the score of a scale is
the share of votes for its right-hand pole, i.e. I, N, F and P.

"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from .._constants import BIG5_TRAITS, SCALES, Scale
from .._errors import ValidationError

__version__ = "0.0.0+auto.0"


def _check_unit(name: str, value: float):
    if not 0.0 <= value <= 1.0:
        raise ValidationError(f"{name} must lie in [0, 1], got {value!r}")


@dataclass(frozen=True)
class VoteRecord:
    """Crowd votes on one scale: left pole (E, S, T, J) versus right pole (I, N, F, P)"""

    scale: Scale
    votes_left: int
    votes_right: int

    def __post_init__(self):
        object.__setattr__(self, "scale", Scale(self.scale))
        if self.votes_left < 0 or self.votes_right < 0:
            raise ValidationError("vote counts must be >= 0")

    @property
    def total(self) -> int:
        """Number of votes on this scale"""
        return self.votes_left + self.votes_right

    def swapped(self) -> VoteRecord:
        """The same votes with the poles exchanged"""
        return VoteRecord(self.scale, self.votes_right, self.votes_left)


@dataclass(frozen=True)
class MbtiVector:
    """Continuous MBTI personality, one score in [0, 1] per scale"""

    # pylint: disable=invalid-name
    ei: float
    sn: float
    tf: float
    jp: float
    total_votes: int = 0

    def __post_init__(self):
        for scale in SCALES:
            _check_unit(scale.value, getattr(self, scale.value))

    def __getitem__(self, scale) -> float:
        return getattr(self, Scale(scale).value)

    def as_array(self) -> np.ndarray:
        """Scores in scale order E–I, S–N, T–F, J–P"""
        return np.array([self.ei, self.sn, self.tf, self.jp])

    @classmethod
    def from_array(cls, values: Sequence[float], total_votes: int = 0) -> MbtiVector:
        """Build from four scores in scale order"""
        ei, sn, tf, jp = (float(v) for v in values)
        return cls(ei, sn, tf, jp, total_votes)


@dataclass(frozen=True)
class Big5Vector:
    """Big 5 personality, one score in [0, 1] per trait"""

    openness: float
    conscientiousness: float
    extraversion: float
    agreeableness: float
    neuroticism: float

    def __post_init__(self):
        for trait in BIG5_TRAITS:
            _check_unit(trait, getattr(self, trait))

    def as_array(self) -> np.ndarray:
        """Scores in O, C, E, A, N order"""
        return np.array([getattr(self, trait) for trait in BIG5_TRAITS])


@dataclass(frozen=True)
class ScaleSummary:
    """Distribution summary of one scale"""

    mean: float
    std: float
    skewness: float
    histogram: Tuple[int, ...]


@dataclass(frozen=True)
class LabelSummary:
    """Distribution summaries of all four scales"""

    n: int
    scales: Tuple[Tuple[Scale, ScaleSummary], ...]

    def __getitem__(self, scale) -> ScaleSummary:
        scale = Scale(scale)
        for key, summary in self.scales:
            if key is scale:
                return summary
        raise KeyError(scale)


@dataclass(frozen=True)
class VoteStats:
    """Votes per entity: minimum, maximum and mean"""

    n_entities: int
    minimum: int
    maximum: int
    mean: float
