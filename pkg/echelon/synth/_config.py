# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.synth._config`
================================================================================

Settings of the synthetic world

"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Tuple

from .._constants import POST_CALL_DAYS, PRE_CALL_DAYS, SCALES, Scale
from .._errors import ValidationError
from ..econ._design import FIN_CONTROLS

__version__ = "0.0.0+auto.0"

# (left pole words, right pole words) per scale
DEFAULT_LEXICONS = {
    Scale.EI: (
        (
            "together", "excited", "team", "everyone", "partners", "celebrate",
            "energy", "meet", "share", "people", "community", "social",
        ),
        (
            "reflect", "consider", "quietly", "carefully", "focus", "internally",
            "deliberate", "ponder", "individually", "privately", "calm", "thoughtful",
        ),
    ),
    Scale.SN: (
        (
            "facts", "concrete", "practical", "specific", "numbers", "current",
            "details", "measured", "realistic", "tangible", "proven", "exact",
        ),
        (
            "vision", "future", "imagine", "innovation", "possibilities", "transform",
            "ideas", "potential", "creative", "pattern", "strategy", "inspire",
        ),
    ),
    Scale.TF: (
        (
            "logic", "efficiency", "objective", "analyze", "rational", "metrics",
            "cost", "optimize", "principle", "criteria", "systematic", "decisive",
        ),
        (
            "values", "care", "feel", "empathy", "harmony", "trust",
            "support", "grateful", "compassion", "culture", "heart", "appreciate",
        ),
    ),
    Scale.JP: (
        (
            "plan", "schedule", "discipline", "deadline", "structure", "organized",
            "committed", "control", "timeline", "execute", "target", "firm",
        ),
        (
            "flexible", "adapt", "explore", "spontaneous", "open", "options",
            "evolve", "experiment", "improvise", "curious", "shift", "maybe",
        ),
    ),
}

DEFAULT_FILLER = (
    "the", "and", "of", "to", "in", "our", "a", "is", "that", "for", "with", "as",
    "on", "this", "we", "are", "it", "was", "have", "from", "by", "be", "at",
    "quarter", "revenue", "growth", "market", "customers", "product", "margin",
    "business", "year", "results", "demand", "sales", "operating", "segment",
    "guidance", "billion", "million", "percent", "cash", "flow", "capital",
    "expenses", "pricing", "volume", "inventory", "supply", "chain", "earnings",
    "fiscal", "dividend", "balance", "sheet", "debt", "investment", "region",
    "services", "orders", "backlog", "digital", "platform", "contract", "outlook",
)

DEFAULT_TRAIT_PRIORS = {
    Scale.EI: (2.0, 5.0),
    Scale.SN: (5.0, 2.0),
    Scale.TF: (2.0, 5.0),
    Scale.JP: (2.0, 5.0),
}

DEFAULT_MBTI_BETAS = {Scale.EI: 0.03, Scale.SN: -0.017, Scale.TF: 0.10, Scale.JP: 0.0}

# a call's pre-call window must not reach back into the previous call's
# post-call window
MIN_CALL_SPACING = PRE_CALL_DAYS + POST_CALL_DAYS + 1

DEFAULT_FIN_BETAS = {
    "past_vola": 0.80,
    "size": -0.40,
    "volume": 0.10,
    "leverage": -0.08,
    "spread": 0.06,
    "btm": -0.05,
    "sue": 0.0,
    "roa": 0.0,
}


def _scale_keys(mapping: Mapping) -> Dict[Scale, object]:
    return {Scale(key): value for key, value in mapping.items()}


@dataclass(frozen=True)
class SynthConfig:
    """Everything the generator draws from.

    :param int n_calls: Total calls; when set, overrides ``calls_per_ceo`` and
        is spread as evenly as possible over the CEOs
    :param float lexicon_share: Expected share of pole-lexicon tokens in a
        CEO document
    :param float vote_noise: Standard deviation of a per-CEO perturbation of
        the vote probability
    :param float vol_scale: Volatility is ``vol_base * exp(vol_scale * u)``
        with a standardized linear index ``u``
    """

    # pylint: disable=too-many-instance-attributes
    seed: int = 0
    n_ceos: int = 32
    calls_per_ceo: int = 22
    n_calls: Optional[int] = None
    votes_per_ceo: int = 40
    vote_noise: float = 0.0
    doc_length: int = 800
    lexicon_share: float = 0.55
    lexicons: Mapping = field(default_factory=lambda: dict(DEFAULT_LEXICONS))
    filler: Tuple[str, ...] = DEFAULT_FILLER
    trait_priors: Mapping = field(default_factory=lambda: dict(DEFAULT_TRAIT_PRIORS))
    mbti_betas: Mapping = field(default_factory=lambda: dict(DEFAULT_MBTI_BETAS))
    fin_betas: Mapping = field(default_factory=lambda: dict(DEFAULT_FIN_BETAS))
    vol_base: float = 0.02
    vol_scale: float = 0.1
    big5_noise: float = 0.1
    title_rate: float = 0.2
    start_date: str = "2015-01-05"
    call_spacing: int = 70
    n_periods: int = 8

    def __post_init__(self):
        for name in ("n_ceos", "calls_per_ceo", "votes_per_ceo", "doc_length", "n_periods"):
            if getattr(self, name) < 1:
                raise ValidationError(f"{name} must be >= 1")
        if self.n_calls is not None and self.n_calls < self.n_ceos:
            raise ValidationError("n_calls must be >= n_ceos")
        if self.call_spacing < MIN_CALL_SPACING:
            raise ValidationError(f"call_spacing must be >= {MIN_CALL_SPACING} trading days")
        if not 0.0 <= self.lexicon_share <= 1.0:
            raise ValidationError("lexicon_share must lie in [0, 1]")
        lexicons = _scale_keys(self.lexicons)
        for scale in SCALES:
            poles = lexicons.get(scale)
            if poles is None or len(poles) != 2 or not all(poles):
                raise ValidationError(f"scale {scale.value}: empty lexicon")
        if not self.filler:
            raise ValidationError("empty filler lexicon")
        object.__setattr__(
            self, "lexicons", {s: (tuple(left), tuple(right)) for s, (left, right) in lexicons.items()}
        )
        object.__setattr__(self, "filler", tuple(self.filler))
        object.__setattr__(
            self,
            "trait_priors",
            {s: (float(a), float(b)) for s, (a, b) in _scale_keys(self.trait_priors).items()},
        )
        betas = {s: float(b) for s, b in _scale_keys(self.mbti_betas).items()}
        object.__setattr__(self, "mbti_betas", {s: betas.get(s, 0.0) for s in SCALES})
        unknown = set(self.fin_betas) - set(FIN_CONTROLS)
        if unknown:
            raise ValidationError(f"unknown controls: {', '.join(sorted(unknown))}")
        object.__setattr__(
            self, "fin_betas", {c: float(self.fin_betas.get(c, 0.0)) for c in FIN_CONTROLS}
        )
        explained = sum(b * b for b in self.mbti_betas.values()) + sum(
            b * b for b in self.fin_betas.values()
        )
        if explained >= 1.0:
            raise ValidationError("planted betas explain all of the variance")

    @property
    def noise_sd(self) -> float:
        """Standard deviation of the unexplained part of the volatility index"""
        explained = sum(b * b for b in self.mbti_betas.values()) + sum(
            b * b for b in self.fin_betas.values()
        )
        return math.sqrt(1.0 - explained)

    def calls_per(self) -> Tuple[int, ...]:
        """Number of calls of every CEO"""
        if self.n_calls is None:
            return (self.calls_per_ceo,) * self.n_ceos
        base, extra = divmod(self.n_calls, self.n_ceos)
        return tuple(base + (1 if i < extra else 0) for i in range(self.n_ceos))
