# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.econ._prices`
================================================================================

Daily closing prices, log returns and realized volatility over trading-day
windows around a call.

"""

from __future__ import annotations

import datetime
import os
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
import pandas as pd

from .._constants import POST_CALL_DAYS, PRE_CALL_DAYS
from .._errors import InputError, InsufficientDataError, ValidationError

__version__ = "0.0.0+auto.0"

DateLike = Union[str, datetime.date, np.datetime64, pd.Timestamp]


def _day(value: DateLike) -> np.datetime64:
    return np.datetime64(pd.Timestamp(value).date(), "D")


@dataclass(frozen=True, eq=False)
class PriceSeries:
    """Closing prices on strictly increasing trading dates"""

    dates: np.ndarray
    prices: np.ndarray

    def __post_init__(self):
        dates = np.asarray(self.dates, dtype="datetime64[D]")
        prices = np.asarray(self.prices, dtype=np.float64)
        if dates.shape != prices.shape or dates.ndim != 1:
            raise ValidationError("one price per date is required")
        if dates.size > 1 and np.any(np.diff(dates) <= np.timedelta64(0, "D")):
            raise ValidationError("dates must be strictly increasing")
        if np.any(~np.isfinite(prices)) or np.any(prices <= 0.0):
            raise ValidationError("prices must be positive")
        object.__setattr__(self, "dates", dates)
        object.__setattr__(self, "prices", prices)

    def __len__(self) -> int:
        return int(self.prices.size)

    @classmethod
    def from_csv(cls, path: Union[str, os.PathLike]) -> PriceSeries:
        """Read a ``date,close`` CSV; rows are sorted by date"""
        try:
            frame = pd.read_csv(path)
        except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as error:
            raise InputError(f"cannot read prices {path}: {error}") from error
        if not {"date", "close"} <= set(frame.columns):
            raise ValidationError(f"{path}: expected columns date,close")
        frame = frame.assign(date=pd.to_datetime(frame["date"])).sort_values("date")
        return cls(frame["date"].to_numpy(dtype="datetime64[D]"), frame["close"].to_numpy())

    def to_csv(self, path: Union[str, os.PathLike]):
        """Write a ``date,close`` CSV"""
        pd.DataFrame(
            {"date": pd.to_datetime(self.dates).strftime("%Y-%m-%d"), "close": self.prices}
        ).to_csv(path, index=False, float_format="%.17g")

    def scaled(self, factor: float) -> PriceSeries:
        """All prices multiplied by ``factor``"""
        return PriceSeries(self.dates, self.prices * factor)

    def last_before(self, date: DateLike) -> Optional[float]:
        """Close of the last trading day strictly before ``date``"""
        position = int(np.searchsorted(self.dates, _day(date), side="left"))
        return float(self.prices[position - 1]) if position > 0 else None


def log_returns(series: PriceSeries) -> np.ndarray:
    """``ln(p_t / p_{t-1})`` for consecutive prices"""
    if len(series) < 2:
        raise InsufficientDataError(f"need at least 2 prices, got {len(series)}")
    return np.diff(np.log(series.prices))


def window_prices(
    series: PriceSeries, date: DateLike, n_days: int, *, before: bool = False
) -> PriceSeries:
    """The ``n_days`` trading days strictly after ``date`` (or strictly before
    it with ``before=True``)"""
    if n_days < 1:
        raise ValidationError("n_days must be >= 1")
    day = _day(date)
    if before:
        stop = int(np.searchsorted(series.dates, day, side="left"))
        start = max(stop - n_days, 0)
    else:
        start = int(np.searchsorted(series.dates, day, side="right"))
        stop = start + n_days
    return PriceSeries(series.dates[start:stop], series.prices[start:stop])


def realized_vol(
    series: PriceSeries,
    date: DateLike,
    n_days: int = POST_CALL_DAYS,
    *,
    before: bool = False,
    call_id: Optional[str] = None,
) -> float:
    """Sample standard deviation of the log returns inside a trading-day window.

    The default window is the business week after ``date``; use
    ``n_days=PRE_CALL_DAYS, before=True`` for the quarter before it.

    :raises InsufficientDataError: if the window holds fewer than 3 prices
    """
    window = window_prices(series, date, n_days, before=before)
    if len(window) < 3:
        raise InsufficientDataError(
            f"{len(window)} prices in the {n_days}-day window "
            f"{'before' if before else 'after'} {_day(date)}, need at least 3",
            call_id,
        )
    return float(np.std(log_returns(window), ddof=1))


def past_vol(series: PriceSeries, date: DateLike, call_id: Optional[str] = None) -> float:
    """Realized volatility over the business quarter before ``date``"""
    return realized_vol(series, date, PRE_CALL_DAYS, before=True, call_id=call_id)
