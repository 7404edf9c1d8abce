# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.corpus`
================================================================================

Earnings-call transcripts: parsing, speaker attribution, CEO name
normalization and corpus statistics

"""

from ._structs import (
    Role,
    Section,
    FormatConfig,
    Utterance,
    Transcript,
    DocumentCounts,
    CeoDocument,
    UnitStats,
    CorpusStats,
)
from ._names import normalize_name, same_person
from ._transcript import (
    parse_transcript,
    serialize_transcript,
    read_transcript,
    read_manifest,
)
from ._documents import (
    split_sentences,
    ceo_speakers,
    document_counts,
    extract_ceo_document,
    corpus_stats,
)

__version__ = "0.0.0+auto.0"
