# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.corpus._documents`
================================================================================

CEO documents and corpus statistics

"""

from __future__ import annotations

import re
from typing import Iterable, List, Optional, Sequence

import numpy as np

from .._errors import NotFoundError, ValidationError
from ..features import tokenize
from ._names import normalize_name
from ._structs import (
    CeoDocument,
    CorpusStats,
    DocumentCounts,
    Role,
    Section,
    Transcript,
    UnitStats,
)

__version__ = "0.0.0+auto.0"

# Approximate: a terminator followed by whitespace and an uppercase letter or digit
_SENTENCE_BREAK = re.compile(r"(?<=[.!?])\s+(?=[A-Z0-9])")


def split_sentences(text: str) -> List[str]:
    """Split text into sentences on ``.``, ``!`` or ``?`` followed by whitespace and
    an uppercase letter or digit. Empty pieces are dropped."""
    return [piece.strip() for piece in _SENTENCE_BREAK.split(text) if piece.strip()]


def ceo_speakers(transcript: Transcript) -> List[str]:
    """Distinct normalized names of the CEO speakers of a call, in order of appearance"""
    names = []
    seen = set()
    for utterance in transcript.utterances:
        if utterance.speaker_role is not Role.CEO:
            continue
        name = normalize_name(utterance.speaker_name)
        if name.casefold() not in seen:
            seen.add(name.casefold())
            names.append(name)
    return names


def document_counts(utterances: Sequence[str]) -> DocumentCounts:
    """Counts of a document given its utterance texts"""
    return DocumentCounts(
        n_utterances=len(utterances),
        n_sentences=sum(len(split_sentences(u)) for u in utterances),
        n_tokens=len(tokenize("\n".join(utterances))),
    )


def extract_ceo_document(
    transcript: Transcript,
    ceo: str,
    *,
    sections: Optional[Iterable[Section]] = None,
) -> CeoDocument:
    """Collect all utterances of one CEO in a call.

    :param Transcript transcript: Parsed call
    :param str ceo: CEO name; compared after `normalize_name` on both sides
    :param sections: Restrict to these sections (default: presentation and Q&A)
    :raises NotFoundError: if the CEO has no utterance in the requested sections
    """
    target = normalize_name(ceo)
    wanted = set(sections) if sections is not None else set(Section)
    texts = [
        utterance.text
        for utterance in sorted(transcript.utterances, key=lambda u: u.order_index)
        if utterance.speaker_role is Role.CEO
        and utterance.section in wanted
        and normalize_name(utterance.speaker_name).casefold() == target.casefold()
    ]
    if not texts:
        raise NotFoundError(f"no CEO utterance of {target!r} in call {transcript.call_id}")
    return CeoDocument(
        ceo_name=target,
        call_id=transcript.call_id,
        text="\n".join(texts),
        counts=document_counts(texts),
    )


def _unit(values: np.ndarray) -> UnitStats:
    return UnitStats(
        total=int(values.sum()),
        mean=float(values.mean()),
        minimum=int(values.min()),
        maximum=int(values.max()),
    )


def corpus_stats(docs: Sequence[CeoDocument]) -> CorpusStats:
    """Sums, means, minima and maxima of utterances, sentences and tokens.

    :raises ValidationError: for an empty document list
    """
    if not docs:
        raise ValidationError("corpus statistics need at least one document")
    counts = np.array(
        [[d.counts.n_utterances, d.counts.n_sentences, d.counts.n_tokens] for d in docs],
        dtype=np.int64,
    )
    return CorpusStats(
        n_documents=len(docs),
        utterances=_unit(counts[:, 0]),
        sentences=_unit(counts[:, 1]),
        tokens=_unit(counts[:, 2]),
    )
