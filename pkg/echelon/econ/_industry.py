# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.econ._industry`
================================================================================

Fama–French 12-industry classification of 4-digit SIC codes

"""

from __future__ import annotations

from enum import IntEnum
from typing import Union

import numpy as np

from .._errors import ValidationError

__version__ = "0.0.0+auto.0"


class Industry(IntEnum):
    """The twelve portfolios, numbered as published"""

    NODUR = 1
    DURBL = 2
    MANUF = 3
    ENRGY = 4
    CHEMS = 5
    BUSEQ = 6
    TELCM = 7
    UTILS = 8
    SHOPS = 9
    HLTH = 10
    MONEY = 11
    OTHER = 12

    @property
    def label(self) -> str:
        """Long portfolio name"""
        return _LABELS[self]


_LABELS = {
    Industry.NODUR: "Consumer Nondurables",
    Industry.DURBL: "Consumer Durables",
    Industry.MANUF: "Manufacturing",
    Industry.ENRGY: "Energy",
    Industry.CHEMS: "Chemicals",
    Industry.BUSEQ: "Business Equipment",
    Industry.TELCM: "Telecommunications",
    Industry.UTILS: "Utilities",
    Industry.SHOPS: "Shops",
    Industry.HLTH: "Healthcare",
    Industry.MONEY: "Money/Finance",
    Industry.OTHER: "Other",
}

# inclusive SIC ranges; unmatched codes belong to OTHER
_RANGES = {
    Industry.NODUR: (
        (100, 999), (2000, 2399), (2700, 2749), (2770, 2799), (3100, 3199), (3940, 3989),
    ),
    Industry.DURBL: (
        (2500, 2519), (2590, 2599), (3630, 3659), (3710, 3711), (3714, 3714),
        (3716, 3716), (3750, 3751), (3792, 3792), (3900, 3939), (3990, 3999),
    ),
    Industry.MANUF: (
        (2520, 2589), (2600, 2699), (2750, 2769), (3000, 3099), (3200, 3569),
        (3580, 3629), (3700, 3709), (3712, 3713), (3715, 3715), (3717, 3749),
        (3752, 3791), (3793, 3799), (3830, 3839), (3860, 3899),
    ),
    Industry.ENRGY: ((1200, 1399), (2900, 2999)),
    Industry.CHEMS: ((2800, 2829), (2840, 2899)),
    Industry.BUSEQ: ((3570, 3579), (3660, 3692), (3694, 3699), (3810, 3829), (7370, 7379)),
    Industry.TELCM: ((4800, 4899),),
    Industry.UTILS: ((4900, 4949),),
    Industry.SHOPS: ((5000, 5999), (7200, 7299), (7600, 7699)),
    Industry.HLTH: ((2830, 2839), (3693, 3693), (3840, 3859), (8000, 8099)),
    Industry.MONEY: ((6000, 6999),),
}


def _sic_code(sic: Union[int, str]) -> int:
    if isinstance(sic, (bool, np.bool_)):
        raise ValidationError(f"not a SIC code: {sic!r}")
    if isinstance(sic, (int, np.integer)):
        code = int(sic)
    elif isinstance(sic, str) and len(sic.strip()) == 4 and sic.strip().isdigit():
        code = int(sic.strip())
    else:
        raise ValidationError(f"not a 4-digit SIC code: {sic!r}")
    if not 0 <= code <= 9999:
        raise ValidationError(f"not a 4-digit SIC code: {sic!r}")
    return code


def ff12_industry(sic: Union[int, str]) -> Industry:
    """Industry of a SIC code given as an integer 0–9999 or a 4-digit string"""
    code = _sic_code(sic)
    for industry, ranges in _RANGES.items():
        for low, high in ranges:
            if low <= code <= high:
                return industry
    return Industry.OTHER
