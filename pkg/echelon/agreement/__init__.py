# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.agreement`
================================================================================

Inter-annotator agreement of the crowd votes: percentage agreement,
Krippendorff's alpha, Brennan–Prediger kappa and Gwet's AC1.

"""

from ._coefficients import (
    AgreementReport,
    ScaleAgreement,
    agreement_report,
    brennan_prediger,
    gwet_gamma,
    krippendorff_alpha,
    krippendorff_alpha_flagged,
    percent_agreement,
    scale_agreement,
)
from ._table import RatingTable, tables_from_votes

__version__ = "0.0.0+auto.0"
