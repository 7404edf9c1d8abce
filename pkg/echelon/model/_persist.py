# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.model._persist`
================================================================================

Versioned model file. The file is JSON; float arrays are stored as base64
little-endian float64 so a saved model predicts bit-identically after
loading.

"""

from __future__ import annotations

import json
import os
from dataclasses import asdict
from typing import Union

from .._constants import MODEL_FORMAT, MODEL_FORMAT_VERSION, SCALES
from .._errors import InputError, NotFoundError, ValidationError
from .._helpers import decode_array, encode_array
from ..features import CategoryDictionary, Vocabulary
from ._boxcox import BoxCoxTransform
from ._mlp import PARAMETER_NAMES, MlpConfig, MlpModel
from ._pipeline import Candidate, DictScaler, FeatureConfig, FeatureSpace, PersonalityModel
from ._svr import SvrModel, SvrParams

__version__ = "0.0.0+auto.0"

PathLike = Union[str, os.PathLike]


def _regressor_to_dict(regressor) -> dict:
    if isinstance(regressor, SvrModel):
        return {
            "algorithm": "svr",
            "params": asdict(regressor.params),
            "weights": encode_array(regressor.weights),
            "bias": regressor.bias,
            "passes": regressor.passes,
            "converged": regressor.converged,
            "final_objective": regressor.final_objective,
        }
    return {
        "algorithm": "mlp",
        "config": asdict(regressor.config),
        "parameters": {name: encode_array(regressor.parameters[name]) for name in PARAMETER_NAMES},
        "loss_curve": list(regressor.loss_curve),
    }


def _regressor_from_dict(data: dict):
    if data["algorithm"] == "svr":
        return SvrModel(
            weights=decode_array(data["weights"]),
            bias=float(data["bias"]),
            params=SvrParams(**data["params"]),
            objective=(float(data["final_objective"]),),
            passes=int(data["passes"]),
            converged=bool(data["converged"]),
        )
    return MlpModel(
        parameters={name: decode_array(data["parameters"][name]) for name in PARAMETER_NAMES},
        config=MlpConfig(**data["config"]),
        loss_curve=tuple(data.get("loss_curve", ())),
    )


def model_to_dict(model: PersonalityModel) -> dict:
    """The JSON document of a model"""
    space = model.features
    return {
        "format": MODEL_FORMAT,
        "version": MODEL_FORMAT_VERSION,
        "fingerprint": model.fingerprint,
        "candidate": model.candidate.to_dict(),
        "features": {
            "config": asdict(space.config),
            "vocabulary": space.vocabulary.to_dict() if space.vocabulary is not None else None,
            "dictionary": space.dictionary.to_dict() if space.dictionary is not None else None,
            "scaler": (
                {"mean": encode_array(space.scaler.mean), "scale": encode_array(space.scaler.scale)}
                if space.scaler is not None
                else None
            ),
        },
        "scales": {
            scale.value: {
                "boxcox": model.transforms[scale].to_dict(),
                "regressor": _regressor_to_dict(model.regressors[scale]),
            }
            for scale in SCALES
        },
        "background_mean": encode_array(model.background_mean),
    }


def model_from_dict(data: dict) -> PersonalityModel:
    """Inverse of `model_to_dict`.

    :raises ValidationError: for another format or an unsupported version
    """
    if data.get("format") != MODEL_FORMAT:
        raise ValidationError(f"not an {MODEL_FORMAT} file")
    if data.get("version") != MODEL_FORMAT_VERSION:
        raise ValidationError(f"unsupported model file version {data.get('version')!r}")
    try:
        features = data["features"]
        scaler = features["scaler"]
        space = FeatureSpace(
            config=FeatureConfig(**features["config"]),
            vocabulary=(
                Vocabulary.from_dict(features["vocabulary"]) if features["vocabulary"] else None
            ),
            dictionary=(
                CategoryDictionary.from_dict(features["dictionary"])
                if features["dictionary"]
                else None
            ),
            scaler=(
                DictScaler(decode_array(scaler["mean"]), decode_array(scaler["scale"]))
                if scaler
                else None
            ),
        )
        scales = data["scales"]
        return PersonalityModel(
            candidate=Candidate.from_dict(data["candidate"]),
            features=space,
            transforms={
                scale: BoxCoxTransform.from_dict(scales[scale.value]["boxcox"]) for scale in SCALES
            },
            regressors={
                scale: _regressor_from_dict(scales[scale.value]["regressor"]) for scale in SCALES
            },
            background_mean=decode_array(data["background_mean"]),
            fingerprint=data.get("fingerprint", ""),
        )
    except (KeyError, TypeError) as error:
        raise ValidationError(f"incomplete model file: {error}") from error


def save_model(model: PersonalityModel, path: PathLike):
    """Write a model file"""
    try:
        with open(path, "w", encoding="utf-8") as file:
            json.dump(model_to_dict(model), file, sort_keys=True, indent=1)
            file.write("\n")
    except OSError as error:
        raise InputError(f"cannot write model {path}: {error}") from error


def load_model(path: PathLike) -> PersonalityModel:
    """Read a model file.

    :raises NotFoundError: if there is no model at ``path``
    """
    if not os.path.exists(path):
        raise NotFoundError(f"no model at {path}; run 'train' first")
    try:
        with open(path, encoding="utf-8") as file:
            data = json.load(file)
    except OSError as error:
        raise InputError(f"cannot read model {path}: {error}") from error
    except json.JSONDecodeError as error:
        raise ValidationError(f"{path} is not a model file: {error}") from error
    return model_from_dict(data)
