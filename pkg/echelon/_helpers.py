# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon._helpers`
================================================================================

Small shared helpers

"""

import base64
import hashlib
import json
from typing import Any, Dict

import numpy as np

__version__ = "0.0.0+auto.0"


def clamp(value, min_value, max_value):
    """Clamp a value (or array) between a minimum and maximum value"""
    if isinstance(value, np.ndarray):
        return np.clip(value, min_value, max_value)
    return max(min(max_value, value), min_value)


def canonical_json(obj: Any) -> str:
    """JSON with sorted keys and no insignificant whitespace"""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), default=str)


def sha256_hex(obj: Any) -> str:
    """SHA-256 of the canonical JSON of ``obj``"""
    return hashlib.sha256(canonical_json(obj).encode("utf-8")).hexdigest()


def encode_array(array: np.ndarray) -> Dict[str, Any]:
    """Encode a float array as base64 little-endian float64 plus its shape"""
    data = np.ascontiguousarray(array, dtype="<f8")
    return {
        "dtype": "<f8",
        "shape": list(data.shape),
        "data": base64.b64encode(data.tobytes()).decode("ascii"),
    }


def decode_array(blob: Dict[str, Any]) -> np.ndarray:
    """Inverse of `encode_array`"""
    raw = base64.b64decode(blob["data"].encode("ascii"))
    return np.frombuffer(raw, dtype=blob.get("dtype", "<f8")).reshape(blob["shape"]).copy()
