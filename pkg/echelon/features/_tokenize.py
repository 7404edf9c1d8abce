# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.features._tokenize`
================================================================================

Word tokenizer and n-gram extraction. The tokenizer is shared with the corpus
statistics so token counts and model features always agree.

"""

import re
import unicodedata
from typing import Iterator, List, Sequence, Union

__version__ = "0.0.0+auto.0"

_TOKEN = re.compile(r"[^\W_]+(?:'[^\W_]+)*")
_APOSTROPHES = str.maketrans({"’": "'", "‘": "'", "`": "'"})

Tokens = Sequence[str]
Document = Union[Tokens, Sequence[Tokens]]


def tokenize(text: str) -> List[str]:
    """Lowercase word tokens split on non-alphanumeric boundaries.

    Apostrophes are kept when they sit between two word characters, so
    ``"We've"`` stays one token while quotes around a word are dropped.
    Letters outside ASCII count as word characters; text is NFC-normalized
    first so a decomposed accent does not split a word.

    :param str text: Any string
    :return: Tokens in order of appearance; empty for empty input
    """
    text = unicodedata.normalize("NFC", text)
    return _TOKEN.findall(text.lower().translate(_APOSTROPHES))


def segments(doc: Document) -> List[Tokens]:
    """Return a document as a list of token segments.

    A document is either a flat token list or a list of segments (one per
    utterance). N-grams never cross segment boundaries.
    """
    if not doc:
        return []
    if all(isinstance(item, str) for item in doc):
        return [doc]
    return [segment for segment in doc if segment]


def ngrams(tokens: Tokens, n_max: int) -> Iterator[str]:
    """Yield every n-gram with ``1 <= n <= n_max``, tokens joined by a space"""
    length = len(tokens)
    for n in range(1, n_max + 1):
        for start in range(length - n + 1):
            yield " ".join(tokens[start : start + n])


def doc_ngrams(doc: Document, n_max: int) -> Iterator[str]:
    """N-grams of all segments of a document"""
    for segment in segments(doc):
        yield from ngrams(segment, n_max)


def doc_tokens(doc: Document) -> List[str]:
    """All tokens of a document, segments concatenated"""
    return [token for segment in segments(doc) for token in segment]
