# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.econ._panel`
================================================================================

Reading the call panel. Each panel row names a per-firm price file; the
volatility label, past volatility and firm size come from those prices.

Panel CSV columns:
``call_id,date,sic,age,gender,price_file,leverage,spread,btm,sue,roa,shares_out,volume``

"""

from __future__ import annotations

import logging
import os
from typing import Dict, List, Mapping, Optional, Union

import pandas as pd

from .._errors import InputError, InsufficientDataError, ValidationError
from ..labels._structs import MbtiVector
from ._design import RiskRow
from ._industry import ff12_industry
from ._prices import PriceSeries, past_vol, realized_vol

__version__ = "0.0.0+auto.0"

logger = logging.getLogger(__name__)

PANEL_COLUMNS = (
    "call_id",
    "date",
    "sic",
    "age",
    "gender",
    "price_file",
    "leverage",
    "spread",
    "btm",
    "sue",
    "roa",
    "shares_out",
    "volume",
)

PathLike = Union[str, os.PathLike]


def period_label(date) -> str:
    """Year-quarter of a date, e.g. ``2019Q3``"""
    stamp = pd.Timestamp(date)
    return f"{stamp.year}Q{stamp.quarter}"


def read_panel(path: PathLike) -> pd.DataFrame:
    """Read the panel CSV with ``call_id``, ``sic`` and ``price_file`` as text"""
    try:
        frame = pd.read_csv(
            path, dtype={"call_id": str, "sic": str, "price_file": str}, keep_default_na=False
        )
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as error:
        raise InputError(f"cannot read panel {path}: {error}") from error
    missing = [c for c in PANEL_COLUMNS if c not in frame.columns]
    if missing:
        raise ValidationError(f"{path}: missing columns {', '.join(missing)}")
    return frame


def _field(record, name: str, line: int, kind=float):
    value = getattr(record, name)
    try:
        return kind(value)
    except (TypeError, ValueError):
        raise ValidationError(
            f"panel line {line} (call {record.call_id}): {name} is not a number: {value!r}"
        ) from None


def load_panel(
    path: PathLike,
    mbti: Optional[Mapping[str, MbtiVector]] = None,
    *,
    skip_incomplete: bool = False,
) -> List[RiskRow]:
    """Build `RiskRow` objects from a panel CSV and its price files.

    Price files are resolved against the panel's directory. Size is shares
    outstanding times the last close before the call.

    :param mbti: Personality per call id; calls without one get ``mbti=None``
    :param bool skip_incomplete: Skip (and log) calls whose price windows are
        too short instead of raising
    """
    frame = read_panel(path)
    base = os.path.dirname(os.path.abspath(path))
    cache: Dict[str, PriceSeries] = {}
    mbti = mbti or {}
    rows = []
    # line 1 is the header
    for line, record in enumerate(frame.itertuples(index=False), start=2):
        call_id = str(record.call_id)
        price_path = os.path.join(base, record.price_file)
        if price_path not in cache:
            cache[price_path] = PriceSeries.from_csv(price_path)
        prices = cache[price_path]
        try:
            close = prices.last_before(record.date)
            if close is None:
                raise InsufficientDataError("no price before the call", call_id)
            rows.append(
                RiskRow(
                    call_id=call_id,
                    vola_post=realized_vol(prices, record.date, call_id=call_id),
                    age=_field(record, "age", line),
                    gender=_field(record, "gender", line, int),
                    past_vola=past_vol(prices, record.date, call_id=call_id),
                    size=_field(record, "shares_out", line) * close,
                    volume=_field(record, "volume", line),
                    leverage=_field(record, "leverage", line),
                    spread=_field(record, "spread", line),
                    btm=_field(record, "btm", line),
                    sue=_field(record, "sue", line),
                    roa=_field(record, "roa", line),
                    industry=ff12_industry(record.sic),
                    period=period_label(record.date),
                    mbti=mbti.get(call_id),
                )
            )
        except InsufficientDataError as error:
            if not skip_incomplete:
                raise
            logger.warning("skipping: %s", error)
    return rows
