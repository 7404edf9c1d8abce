# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.labels`
================================================================================

Crowd votes to continuous MBTI scores, label distributions and the external
validation against Big 5 scores.

"""

from ._structs import (
    Big5Vector,
    LabelSummary,
    MbtiVector,
    ScaleSummary,
    VoteRecord,
    VoteStats,
)
from ._summary import cross_correlation, label_summary
from ._votes import (
    build_label_table,
    build_mbti_vector,
    normalize_votes,
    read_big5,
    read_labels,
    read_votes,
    vote_stats,
    write_big5,
    write_labels,
    write_votes,
)

__version__ = "0.0.0+auto.0"
