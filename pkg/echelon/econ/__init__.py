# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.econ`
================================================================================

Financial risk regression: realized volatility around earnings calls,
Fama–French 12 industries, standardized fixed-effects OLS and VIF
diagnostics.

**Software and Dependencies:**

* numpy, scipy, pandas

"""

from ._design import (
    DEMOGRAPHICS,
    FIN_CONTROLS,
    INTERCEPT,
    DesignMatrix,
    DesignSpec,
    RiskRow,
    build_design_matrix,
)
from ._industry import Industry, ff12_industry
from ._ols import Coefficient, OlsReport, VifReport, ols_fit, stars, t_pvalue, vif
from ._panel import PANEL_COLUMNS, load_panel, period_label, read_panel
from ._prices import PriceSeries, log_returns, past_vol, realized_vol, window_prices
from ._risk import RiskResult, render_risk_table, risk_frame, risk_regression

__version__ = "0.0.0+auto.0"
