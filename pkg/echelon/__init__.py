# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon`
================================================================================

CEO personality from earnings calls, and its link to stock volatility.

* `echelon.corpus`: transcripts and CEO documents
* `echelon.labels`: crowd votes to MBTI labels
* `echelon.agreement`: inter-annotator agreement
* `echelon.features`: n-gram tf-idf and dictionary features
* `echelon.model`: Box-Cox targets, regressors, selection and evaluation
* `echelon.econ`: volatility, controls and the risk regression
* `echelon.synth`: seeded synthetic worlds
* `echelon.cli`: the ``echelon`` command

**Software and Dependencies:**

* numpy, scipy, pandas, joblib, PyYAML

"""

from ._constants import BIG5_TRAITS, POLES, SCALES, Scale
from ._errors import (
    ConfigError,
    DivergenceError,
    EchelonError,
    EmptyTranscriptError,
    InputError,
    InsufficientDataError,
    InsufficientVotesError,
    ModelSelectionError,
    NotFoundError,
    NumericalError,
    ParseError,
    RankDeficiencyError,
    ValidationError,
)

__version__ = "0.0.0+auto.0"
