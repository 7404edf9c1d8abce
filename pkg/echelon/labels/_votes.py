# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.labels._votes`
================================================================================

From crowd votes to continuous personality scores. A scale's score is the
share of votes for its right-hand pole:

.. code-block:: text

    score = votes_right / (votes_left + votes_right)

"""

from __future__ import annotations

import logging
import os
from typing import Dict, List, Mapping, Sequence, Union

import pandas as pd

from .._constants import MIN_VOTES, SCALES, Scale
from .._errors import InputError, InsufficientVotesError, ValidationError
from ._structs import Big5Vector, MbtiVector, VoteRecord, VoteStats

__version__ = "0.0.0+auto.0"

logger = logging.getLogger(__name__)

PathLike = Union[str, os.PathLike]

VOTE_COLUMNS = ("entity_id", "scale", "votes_left", "votes_right")
LABEL_COLUMNS = ("entity_id", "ei", "sn", "tf", "jp", "total_votes")
BIG5_COLUMNS = ("entity_id", "o", "c", "e", "a", "n")


def normalize_votes(record: VoteRecord) -> float:
    """Share of votes for the right-hand pole.

    :raises InsufficientVotesError: if the record holds no votes
    """
    if record.total < 1:
        raise InsufficientVotesError(record.scale, record.total, 1)
    return record.votes_right / record.total


def build_mbti_vector(records: Sequence[VoteRecord], min_votes: int = MIN_VOTES) -> MbtiVector:
    """Turn one vote record per scale into an `MbtiVector`.

    ``total_votes`` is the smallest vote total across the four scales.

    :raises ValidationError: if a scale is missing or repeated
    :raises InsufficientVotesError: if a scale has fewer than ``min_votes`` votes
    """
    by_scale: Dict[Scale, VoteRecord] = {}
    for record in records:
        if record.scale in by_scale:
            raise ValidationError(f"scale {record.scale.value}: more than one vote record")
        by_scale[record.scale] = record
    scores = []
    for scale in SCALES:
        if scale not in by_scale:
            raise ValidationError(f"scale {scale.value}: no vote record")
        record = by_scale[scale]
        if record.total < max(min_votes, 1):
            raise InsufficientVotesError(scale, record.total, max(min_votes, 1))
        scores.append(normalize_votes(record))
    return MbtiVector.from_array(scores, min(r.total for r in by_scale.values()))


def build_label_table(
    votes: Mapping[str, Sequence[VoteRecord]], min_votes: int = MIN_VOTES
) -> Dict[str, MbtiVector]:
    """`build_mbti_vector` for every entity; entities failing the vote rule are skipped"""
    labels = {}
    for entity, records in votes.items():
        try:
            labels[entity] = build_mbti_vector(records, min_votes)
        except ValidationError as error:
            logger.info("skipping %s: %s", entity, error)
    return labels


def vote_stats(votes: Mapping[str, Sequence[VoteRecord]]) -> VoteStats:
    """Minimum, maximum and mean number of votes per entity.

    An entity's vote count is its smallest total across scales.
    """
    totals = [min(r.total for r in records) for records in votes.values() if records]
    if not totals:
        raise ValidationError("no votes")
    return VoteStats(len(totals), min(totals), max(totals), sum(totals) / len(totals))


def _read_csv(path: PathLike, columns: Sequence[str]) -> pd.DataFrame:
    try:
        frame = pd.read_csv(path, dtype={"entity_id": str})
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as error:
        raise InputError(f"cannot read {path}: {error}") from error
    missing = [c for c in columns if c not in frame.columns]
    if missing:
        raise ValidationError(f"{path}: missing columns {', '.join(missing)}")
    return frame


def read_votes(path: PathLike) -> Dict[str, List[VoteRecord]]:
    """Read a votes CSV (``entity_id,scale,votes_left,votes_right``)"""
    frame = _read_csv(path, VOTE_COLUMNS)
    votes: Dict[str, List[VoteRecord]] = {}
    for row in frame.itertuples(index=False):
        try:
            scale = Scale(str(row.scale).strip().lower().replace("-", "").replace("–", ""))
        except ValueError as error:
            raise ValidationError(f"{path}: unknown scale {row.scale!r}") from error
        votes.setdefault(str(row.entity_id), []).append(
            VoteRecord(scale, int(row.votes_left), int(row.votes_right))
        )
    return votes


def write_votes(path: PathLike, votes: Mapping[str, Sequence[VoteRecord]]):
    """Write a votes CSV"""
    rows = [
        (entity, r.scale.value, r.votes_left, r.votes_right)
        for entity, records in votes.items()
        for r in records
    ]
    pd.DataFrame(rows, columns=VOTE_COLUMNS).to_csv(path, index=False)


def read_labels(path: PathLike) -> Dict[str, MbtiVector]:
    """Read a labels CSV (``entity_id,ei,sn,tf,jp,total_votes``)"""
    frame = _read_csv(path, LABEL_COLUMNS)
    return {
        str(row.entity_id): MbtiVector(
            float(row.ei), float(row.sn), float(row.tf), float(row.jp), int(row.total_votes)
        )
        for row in frame.itertuples(index=False)
    }


def write_labels(path: PathLike, labels: Mapping[str, MbtiVector]):
    """Write a labels CSV; floats keep full precision"""
    rows = [
        (entity, v.ei, v.sn, v.tf, v.jp, v.total_votes) for entity, v in labels.items()
    ]
    pd.DataFrame(rows, columns=LABEL_COLUMNS).to_csv(path, index=False, float_format="%.17g")


def read_big5(path: PathLike) -> Dict[str, Big5Vector]:
    """Read a Big 5 CSV (``entity_id,o,c,e,a,n``)"""
    frame = _read_csv(path, BIG5_COLUMNS)
    return {
        str(row.entity_id): Big5Vector(
            float(row.o), float(row.c), float(row.e), float(row.a), float(row.n)
        )
        for row in frame.itertuples(index=False)
    }


def write_big5(path: PathLike, big5: Mapping[str, Big5Vector]):
    """Write a Big 5 CSV"""
    rows = [(entity, *v.as_array().tolist()) for entity, v in big5.items()]
    pd.DataFrame(rows, columns=BIG5_COLUMNS).to_csv(path, index=False, float_format="%.17g")


