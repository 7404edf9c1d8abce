# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.corpus._transcript`
================================================================================

Line-oriented transcript format.

.. code-block:: text

    #call_id: ACME-2019Q3
    #company: ACME
    #date: 2019-10-24
    #quarter: 2019Q3
    Operator (Operator): Good day and welcome.
    Jane Q. Doe (CEO): Thank you. We had a strong quarter
      with record revenue.
    == QA ==
    John Roe (Analyst): Can you talk about margins?

Header lines come first. Turn lines are ``Name (Role): text``; indented lines
continue the previous turn. The marker line switches to the Q&A section; without
it every turn belongs to the presentation.

"""

from __future__ import annotations

import datetime
import json
import logging
import os
import re
from typing import Iterator, List, Optional, Union

from .._errors import EmptyTranscriptError, InputError, ParseError, ValidationError
from ._structs import FormatConfig, Role, Section, Transcript, Utterance

__version__ = "0.0.0+auto.0"

logger = logging.getLogger(__name__)

REQUIRED_HEADERS = ("call_id", "company", "date", "quarter")

_HEADER = re.compile(r"^#\s*(?P<key>[A-Za-z_]+)\s*:\s*(?P<value>.*?)\s*$")
_TURN = re.compile(
    r"^(?P<name>[^\s(:][^(:]*?)\s*(?:\((?P<role>[^()]*)\))?\s*:(?P<text>.*)$"
)
_QUARTER = re.compile(r"^(?P<year>\d{4})\s*Q(?P<quarter>[1-4])$", re.IGNORECASE)


def _parse_header(key: str, value: str, line: int):
    if key == "date":
        try:
            return datetime.date.fromisoformat(value)
        except ValueError as error:
            raise ParseError(f"bad date {value!r}, expected YYYY-MM-DD", line) from error
    if key == "quarter":
        match = _QUARTER.match(value)
        if match is None:
            raise ParseError(f"bad quarter {value!r}, expected YYYYQn", line)
        return int(match["year"]), int(match["quarter"])
    if not value:
        raise ParseError(f"empty value for header {key!r}", line)
    return value


def parse_transcript(raw: str, format_config: Optional[FormatConfig] = None) -> Transcript:
    """Parse transcript text into a `Transcript`.

    :param str raw: Transcript text in the line format described above
    :param FormatConfig format_config: Marker line and role aliases
    :raises ParseError: on a malformed or missing header, or an unparseable line
    :raises EmptyTranscriptError: if no speaker turn is present
    """
    # pylint: disable=too-many-branches
    config = format_config or FormatConfig()
    headers = {}
    turns: List[list] = []
    section = Section.PRESENTATION
    in_body = False

    for number, line in enumerate(raw.splitlines(), start=1):
        if not line.strip():
            continue
        if line.startswith("#"):
            if in_body:
                raise ParseError("header line after the first turn", number)
            match = _HEADER.match(line)
            if match is None:
                raise ParseError(f"malformed header {line!r}", number)
            key = match["key"].lower()
            if key not in REQUIRED_HEADERS:
                logger.warning("line %d: ignoring unknown header %r", number, key)
                continue
            headers[key] = _parse_header(key, match["value"], number)
            continue
        if line.strip() == config.qa_marker:
            in_body = True
            section = Section.QA
            continue
        if line[0].isspace():
            if not turns:
                raise ParseError("continuation line before the first turn", number)
            turns[-1][3].append(line.strip())
            continue
        match = _TURN.match(line)
        if match is None:
            raise ParseError(f"expected 'Name (Role): text', got {line!r}", number)
        in_body = True
        turns.append(
            [match["name"].strip(), config.role(match["role"]), section, [match["text"].strip()], number]
        )

    for key in REQUIRED_HEADERS:
        if key not in headers:
            raise ParseError(f"missing header #{key}", 1)
    if not turns:
        raise EmptyTranscriptError(f"transcript {headers['call_id']} has no utterances")

    utterances = []
    for order, (name, role, part, pieces, number) in enumerate(turns):
        text = " ".join(piece for piece in pieces if piece)
        if not text:
            raise ParseError(f"turn of {name!r} has no text", number)
        utterances.append(Utterance(name, role, part, " ".join(text.split()), order))
    return Transcript(
        call_id=headers["call_id"],
        company_id=headers["company"],
        fiscal_quarter=headers["quarter"],
        call_date=headers["date"],
        utterances=tuple(utterances),
    )


def serialize_transcript(transcript: Transcript, format_config: Optional[FormatConfig] = None) -> str:
    """Write a `Transcript` in the line format; `parse_transcript` reads it back unchanged"""
    config = format_config or FormatConfig()
    lines = [
        f"#call_id: {transcript.call_id}",
        f"#company: {transcript.company_id}",
        f"#date: {transcript.call_date.isoformat()}",
        f"#quarter: {transcript.quarter_label}",
    ]
    marker_written = False
    for utterance in sorted(transcript.utterances, key=lambda u: u.order_index):
        if utterance.section is Section.QA and not marker_written:
            lines.append(config.qa_marker)
            marker_written = True
        elif utterance.section is Section.PRESENTATION and marker_written:
            raise ValidationError(
                f"transcript {transcript.call_id}: presentation turn after the Q&A section"
            )
        lines.append(f"{utterance.speaker_name} ({Role(utterance.speaker_role).value}): {utterance.text}")
    return "\n".join(lines) + "\n"


def read_transcript(path: Union[str, os.PathLike], format_config: Optional[FormatConfig] = None) -> Transcript:
    """Read and parse a transcript file"""
    try:
        with open(path, encoding="utf-8") as file:
            raw = file.read()
    except OSError as error:
        raise InputError(f"cannot read transcript {path}: {error}") from error
    try:
        return parse_transcript(raw, format_config)
    except ParseError as error:
        wrapped = ParseError(f"{path}: {error}")
        wrapped.line = error.line
        raise wrapped from error


def read_manifest(path: Union[str, os.PathLike]) -> Iterator[dict]:
    """Iterate corpus manifest entries.

    The manifest is JSONL with one object per transcript: ``path`` (relative to
    the manifest's directory unless absolute) plus free metadata such as
    ``call_id``, ``company_id`` and ``ceo``.
    """
    base = os.path.dirname(os.path.abspath(path))
    try:
        with open(path, encoding="utf-8") as file:
            lines = file.readlines()
    except OSError as error:
        raise InputError(f"cannot read manifest {path}: {error}") from error
    for number, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            entry = json.loads(line)
        except json.JSONDecodeError as error:
            raise ParseError(f"{path}: invalid JSON ({error.msg})", number) from error
        if "path" not in entry:
            raise ParseError(f"{path}: entry without 'path'", number)
        entry = dict(entry)
        if not os.path.isabs(entry["path"]):
            entry["path"] = os.path.join(base, entry["path"])
        yield entry
