# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT


"""Constants"""

from enum import Enum

__version__ = "0.0.0+auto.0"


class Scale(str, Enum):
    """MBTI scale. Scores are the share of votes for the right-hand pole."""

    EI = "ei"
    SN = "sn"
    TF = "tf"
    JP = "jp"

    @property
    def poles(self) -> tuple:
        """(left, right) pole letters, e.g. ``("E", "I")``"""
        return POLES[self]

    @property
    def label(self) -> str:
        """Display name such as ``E–I``"""
        left, right = POLES[self]
        return f"{left}–{right}"


SCALES = (Scale.EI, Scale.SN, Scale.TF, Scale.JP)

# right pole = I, N, F, P
POLES = {
    Scale.EI: ("E", "I"),
    Scale.SN: ("S", "N"),
    Scale.TF: ("T", "F"),
    Scale.JP: ("J", "P"),
}

BIG5_TRAITS = (
    "openness",
    "conscientiousness",
    "extraversion",
    "agreeableness",
    "neuroticism",
)

MIN_VOTES = 3

# Labels are clamped into this range before the Box-Cox transform
LABEL_FLOOR = 1e-3
LABEL_CEIL = 1.0

POST_CALL_DAYS = 5
PRE_CALL_DAYS = 63

STAR_THRESHOLDS = ((0.001, "***"), (0.01, "**"), (0.05, "*"))

MODEL_FORMAT = "echelon-model"
MODEL_FORMAT_VERSION = 1
