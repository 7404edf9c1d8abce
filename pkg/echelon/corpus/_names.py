# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.corpus._names`
================================================================================

Speaker name normalization used to map utterances to individual CEOs

"""

import re

from .._errors import ValidationError

__version__ = "0.0.0+auto.0"

TITLES = frozenset({"dr", "mr", "mrs", "ms", "sir", "prof"})
_INITIAL = re.compile(r"^[^\W\d_]\.?$")


def normalize_name(raw: str) -> str:
    """Strip titles and single-letter initials, collapse whitespace.

    ``"Elon R. Musk"`` becomes ``"Elon Musk"`` and ``"Dr. Lisa Su"`` becomes
    ``"Lisa Su"``. Case is preserved.

    :param str raw: Name as written in the transcript
    :raises ValidationError: if nothing is left after stripping
    """
    kept = []
    for token in raw.split():
        if token.rstrip(".").lower() in TITLES:
            continue
        if _INITIAL.match(token):
            continue
        kept.append(token)
    if not kept:
        raise ValidationError(f"name {raw!r} is empty after normalization")
    return " ".join(kept)


def same_person(name_a: str, name_b: str) -> bool:
    """True when two raw names normalize to the same person (case-insensitive)"""
    return normalize_name(name_a).casefold() == normalize_name(name_b).casefold()
