# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.corpus._structs`
================================================================================

Transcript data classes

"""

from __future__ import annotations

import datetime
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Optional, Tuple

from .._errors import ValidationError

__version__ = "0.0.0+auto.0"


class Role(str, Enum):
    """Speaker role"""

    CEO = "CEO"
    ANALYST = "Analyst"
    OPERATOR = "Operator"
    OTHER = "Other"


class Section(str, Enum):
    """Part of an earnings call"""

    PRESENTATION = "Presentation"
    QA = "QA"


DEFAULT_ROLE_ALIASES = {
    "ceo": Role.CEO,
    "chief executive officer": Role.CEO,
    "chief executive": Role.CEO,
    "president and ceo": Role.CEO,
    "analyst": Role.ANALYST,
    "operator": Role.OPERATOR,
    "other": Role.OTHER,
}


@dataclass(frozen=True)
class FormatConfig:
    """Knobs of the transcript line format"""

    qa_marker: str = "== QA =="
    role_aliases: Mapping[str, Role] = field(
        default_factory=lambda: dict(DEFAULT_ROLE_ALIASES)
    )

    def role(self, tag: Optional[str]) -> Role:
        """Map a parenthetical role tag to a `Role`. Absent or unknown tags are Other."""
        if tag is None:
            return Role.OTHER
        key = " ".join(tag.lower().split())
        if key in self.role_aliases:
            return Role(self.role_aliases[key])
        if "ceo" in key.replace(",", " ").split() or "chief executive" in key:
            return Role.CEO
        if "analyst" in key:
            return Role.ANALYST
        return Role.OTHER


@dataclass(frozen=True)
class Utterance:
    """One speaker turn"""

    speaker_name: str
    speaker_role: Role
    section: Section
    text: str
    order_index: int

    def __post_init__(self):
        if not self.text.strip():
            raise ValidationError(f"utterance {self.order_index} has no text")
        if self.order_index < 0:
            raise ValidationError("order_index must be >= 0")


@dataclass(frozen=True)
class Transcript:
    """A parsed earnings call"""

    call_id: str
    company_id: str
    fiscal_quarter: Tuple[int, int]
    call_date: datetime.date
    utterances: Tuple[Utterance, ...]

    def __post_init__(self):
        object.__setattr__(self, "utterances", tuple(self.utterances))
        if not self.utterances:
            raise ValidationError(f"transcript {self.call_id} has no utterances")
        indices = [u.order_index for u in self.utterances]
        if len(set(indices)) != len(indices):
            raise ValidationError(f"transcript {self.call_id} repeats an order_index")
        year, quarter = self.fiscal_quarter
        if not 1 <= quarter <= 4:
            raise ValidationError(f"quarter must be 1-4, got {quarter}")

    @property
    def quarter_label(self) -> str:
        """Fiscal quarter as ``YYYYQn``"""
        return f"{self.fiscal_quarter[0]}Q{self.fiscal_quarter[1]}"


@dataclass(frozen=True)
class DocumentCounts:
    """Size of a CEO document"""

    n_utterances: int
    n_sentences: int
    n_tokens: int


@dataclass(frozen=True)
class CeoDocument:
    """All utterances of one CEO in one call, one utterance per line"""

    ceo_name: str
    call_id: str
    text: str
    counts: DocumentCounts

    def __post_init__(self):
        if self.counts.n_utterances < 1:
            raise ValidationError("a CEO document needs at least one utterance")

    @property
    def utterances(self) -> Tuple[str, ...]:
        """The utterance texts"""
        return tuple(self.text.split("\n"))

    def to_dict(self) -> dict:
        """JSON-ready form"""
        return {
            "ceo_name": self.ceo_name,
            "call_id": self.call_id,
            "text": self.text,
            "n_utterances": self.counts.n_utterances,
            "n_sentences": self.counts.n_sentences,
            "n_tokens": self.counts.n_tokens,
        }

    @classmethod
    def from_dict(cls, data: dict) -> CeoDocument:
        """Inverse of `to_dict`"""
        return cls(
            ceo_name=data["ceo_name"],
            call_id=data["call_id"],
            text=data["text"],
            counts=DocumentCounts(
                int(data["n_utterances"]), int(data["n_sentences"]), int(data["n_tokens"])
            ),
        )


@dataclass(frozen=True)
class UnitStats:
    """Sum, mean, minimum and maximum of one unit across documents"""

    total: int
    mean: float
    minimum: int
    maximum: int


@dataclass(frozen=True)
class CorpusStats:
    """Table-2-style statistics of a CEO document collection"""

    n_documents: int
    utterances: UnitStats
    sentences: UnitStats
    tokens: UnitStats

    def rows(self):
        """``(unit, UnitStats)`` pairs in display order"""
        return (
            ("utterances", self.utterances),
            ("sentences", self.sentences),
            ("tokens", self.tokens),
        )
