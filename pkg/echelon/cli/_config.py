# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.cli._config`
================================================================================

The run configuration: a YAML file of nested sections, overridden by
``--set section.key=value`` flags and the dedicated ``--seed`` and
``--run-dir`` flags.

Relative paths resolve against the run directory. The config hash covers
everything except the run directory, so one config gives the same hash (and
the same artifacts) wherever it runs.

**Software and Dependencies:**

* PyYAML

"""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass, field
from typing import Any, Dict, Mapping, Optional, Sequence, Tuple

import yaml

from .._errors import ConfigError, EchelonError
from .._helpers import sha256_hex
from ..corpus._structs import Section
from ..model._pipeline import ALGORITHMS, FEATURE_KINDS, SPACES, FeatureConfig
from ..model._mlp import MlpConfig
from ..model._svr import SvrParams
from ..synth._config import SynthConfig

__version__ = "0.0.0+auto.0"

MBTI_SOURCES = ("predictions", "labels")


@dataclass(frozen=True)
class PathsConfig:
    """Input and output locations, relative to the run directory unless absolute"""

    # pylint: disable=too-many-instance-attributes
    data: str = "data"
    manifest: str = "data/manifest.jsonl"
    votes: str = "data/votes.csv"
    big5: str = "data/big5.csv"
    panel: str = "data/panel.csv"
    dictionary: Optional[str] = None
    documents: str = "documents.jsonl"
    labels: str = "labels.csv"
    split: str = "split.csv"
    model: str = "model.json"
    predictions: str = "predictions.csv"
    reports: str = "reports"


@dataclass(frozen=True)
class IngestConfig:
    """Which parts of a call make up a CEO document"""

    sections: Tuple[str, ...] = ("Presentation", "QA")
    qa_marker: str = "== QA =="

    def __post_init__(self):
        object.__setattr__(self, "sections", tuple(self.sections))
        known = {section.value for section in Section}
        unknown = [s for s in self.sections if s not in known]
        if unknown or not self.sections:
            raise ConfigError(f"sections must be a non-empty subset of {sorted(known)}")

    @property
    def section_set(self) -> Tuple[Section, ...]:
        """The sections as `Section` members"""
        return tuple(Section(s) for s in self.sections)


@dataclass(frozen=True)
class LabelsConfig:
    """Crowd vote aggregation"""

    min_votes: int = 3

    def __post_init__(self):
        if self.min_votes < 1:
            raise ConfigError("labels.min_votes must be >= 1")


@dataclass(frozen=True)
class SplitConfig:
    """Train, validation and test shares"""

    fractions: Tuple[float, ...] = (0.8, 0.1, 0.1)

    def __post_init__(self):
        fractions = tuple(float(f) for f in self.fractions)
        object.__setattr__(self, "fractions", fractions)
        if len(fractions) != 3 or min(fractions) < 0 or abs(sum(fractions) - 1.0) > 1e-9:
            raise ConfigError("split.fractions must be three shares summing to 1")


@dataclass(frozen=True)
class EvalConfig:
    """Model selection and evaluation"""

    space: str = "transformed"
    algorithms: Tuple[str, ...] = ("svr",)
    feature_kinds: Tuple[str, ...] = ("tfidf",)
    n_jobs: int = 1
    top_k: int = 20

    def __post_init__(self):
        object.__setattr__(self, "algorithms", tuple(self.algorithms))
        object.__setattr__(self, "feature_kinds", tuple(self.feature_kinds))
        if self.space not in SPACES:
            raise ConfigError(f"eval.space must be one of {', '.join(SPACES)}")
        if not self.algorithms or set(self.algorithms) - set(ALGORITHMS):
            raise ConfigError(f"eval.algorithms must be taken from {', '.join(ALGORITHMS)}")
        if not self.feature_kinds or set(self.feature_kinds) - set(FEATURE_KINDS):
            raise ConfigError(f"eval.feature_kinds must be taken from {', '.join(FEATURE_KINDS)}")
        if self.top_k < 1:
            raise ConfigError("eval.top_k must be >= 1")


@dataclass(frozen=True)
class RiskConfig:
    """Volatility regression settings"""

    mbti_source: str = "predictions"
    skip_incomplete: bool = False
    industry_effects: bool = True
    period_effects: bool = True
    standardize_dummies: bool = True

    def __post_init__(self):
        if self.mbti_source not in MBTI_SOURCES:
            raise ConfigError(f"risk.mbti_source must be one of {', '.join(MBTI_SOURCES)}")


# YAML section name -> (attribute, class); seeds are set once at the top level
SECTIONS = {
    "paths": ("paths", PathsConfig),
    "ingest": ("ingest", IngestConfig),
    "labels": ("labels", LabelsConfig),
    "split": ("split", SplitConfig),
    "features": ("features", FeatureConfig),
    "svr": ("svr", SvrParams),
    "mlp": ("mlp", MlpConfig),
    "eval": ("evaluation", EvalConfig),
    "risk": ("risk", RiskConfig),
    "synth": ("synth", SynthConfig),
}
SEEDED = ("svr", "mlp", "synth")


@dataclass(frozen=True)
class RunConfig:
    """The resolved configuration of a run"""

    # pylint: disable=too-many-instance-attributes
    seed: int = 0
    paths: PathsConfig = field(default_factory=PathsConfig)
    ingest: IngestConfig = field(default_factory=IngestConfig)
    labels: LabelsConfig = field(default_factory=LabelsConfig)
    split: SplitConfig = field(default_factory=SplitConfig)
    features: FeatureConfig = field(default_factory=FeatureConfig)
    svr: SvrParams = field(default_factory=SvrParams)
    mlp: MlpConfig = field(default_factory=MlpConfig)
    evaluation: EvalConfig = field(default_factory=EvalConfig)
    risk: RiskConfig = field(default_factory=RiskConfig)
    synth: SynthConfig = field(default_factory=SynthConfig)
    run_dir: str = "."

    def path(self, name: str) -> str:
        """A path of the ``paths`` section resolved against the run directory"""
        value = getattr(self.paths, name)
        if value is None:
            return None
        return value if os.path.isabs(value) else os.path.join(self.run_dir, value)

    def report_path(self, filename: str) -> str:
        """Location of a report file"""
        return os.path.join(self.path("reports"), filename)

    def to_dict(self) -> dict:
        """Plain form of every setting except the run directory"""
        data = dataclasses.asdict(self)
        data.pop("run_dir")
        return data

    @property
    def config_hash(self) -> str:
        """SHA-256 of the canonical JSON of `to_dict`"""
        return sha256_hex(self.to_dict())


def _seedless_fields(cls) -> Dict[str, dataclasses.Field]:
    return {f.name: f for f in dataclasses.fields(cls) if f.init and f.name != "seed"}


def _default(spec: dataclasses.Field) -> Any:
    if spec.default is not dataclasses.MISSING:
        return spec.default
    if spec.default_factory is not dataclasses.MISSING:
        return spec.default_factory()
    return None


def _check_type(where: str, spec: dataclasses.Field, value: Any) -> Any:
    default = _default(spec)
    if value is None:
        if default is None or "Optional" in str(spec.type):
            return None
        raise ConfigError(f"{where} may not be null")
    if default is None:
        return value
    if isinstance(default, bool):
        ok = isinstance(value, bool)
    elif isinstance(default, int):
        ok = isinstance(value, int) and not isinstance(value, bool)
    elif isinstance(default, float):
        ok = isinstance(value, (int, float)) and not isinstance(value, bool)
        value = float(value) if ok else value
    elif isinstance(default, str):
        ok = isinstance(value, str)
    elif isinstance(default, tuple):
        ok = isinstance(value, (list, tuple))
        value = tuple(value) if ok else value
    elif isinstance(default, Mapping):
        ok = isinstance(value, Mapping)
    else:
        ok = True
    if not ok:
        raise ConfigError(f"{where}: expected {type(default).__name__}, got {value!r}")
    return value


def _build_section(name: str, values: Any, seed: int):
    attribute, cls = SECTIONS[name]
    if values is None:
        values = {}
    if not isinstance(values, Mapping):
        raise ConfigError(f"section {name!r} must be a mapping")
    specs = _seedless_fields(cls)
    unknown = sorted(set(values) - set(specs))
    if unknown:
        raise ConfigError(f"unknown key(s) in section {name!r}: {', '.join(map(str, unknown))}")
    kwargs = {key: _check_type(f"{name}.{key}", specs[key], value) for key, value in values.items()}
    if name in SEEDED:
        kwargs["seed"] = seed
    try:
        return attribute, cls(**kwargs)
    except ConfigError:
        raise
    except (EchelonError, ValueError, TypeError) as error:
        raise ConfigError(f"section {name!r}: {error}") from error


def build_config(raw: Optional[Mapping] = None, run_dir: str = ".") -> RunConfig:
    """Build a `RunConfig` from a nested mapping as read from YAML.

    :raises ConfigError: for unknown sections or keys and for invalid values
    """
    raw = dict(raw or {})
    unknown = sorted(set(raw) - set(SECTIONS) - {"seed"})
    if unknown:
        raise ConfigError(f"unknown section(s): {', '.join(map(str, unknown))}")
    seed = raw.pop("seed", 0)
    if not isinstance(seed, int) or isinstance(seed, bool) or seed < 0:
        raise ConfigError(f"seed must be a non-negative integer, got {seed!r}")
    sections = dict(_build_section(name, raw.get(name), seed) for name in SECTIONS)
    return RunConfig(seed=seed, run_dir=run_dir, **sections)


def parse_override(item: str) -> Tuple[Tuple[str, ...], Any]:
    """Split ``section.key=value`` into a key path and a YAML-parsed value"""
    key, sep, text = item.partition("=")
    if not sep or not key.strip():
        raise ConfigError(f"override {item!r} is not of the form section.key=value")
    try:
        value = yaml.safe_load(text) if text.strip() else None
    except yaml.YAMLError as error:
        raise ConfigError(f"override {item!r}: {error}") from error
    return tuple(part.strip() for part in key.split(".")), value


def apply_overrides(raw: Mapping, overrides: Sequence[str]) -> dict:
    """A copy of ``raw`` with ``--set`` overrides applied in order"""
    merged = {k: dict(v) if isinstance(v, Mapping) else v for k, v in dict(raw).items()}
    for item in overrides:
        path, value = parse_override(item)
        if len(path) == 1:
            merged[path[0]] = value
        elif len(path) == 2:
            section = merged.setdefault(path[0], {})
            if not isinstance(section, dict):
                raise ConfigError(f"override {item!r}: {path[0]!r} is not a section")
            section[path[1]] = value
        else:
            raise ConfigError(f"override {item!r}: expected section.key")
    return merged


def read_config_file(path: Optional[str]) -> dict:
    """The YAML mapping stored at ``path`` (empty without a path)"""
    if path is None:
        return {}
    try:
        with open(path, encoding="utf-8") as file:
            data = yaml.safe_load(file)
    except OSError as error:
        raise ConfigError(f"cannot read config {path}: {error}") from error
    except yaml.YAMLError as error:
        raise ConfigError(f"invalid YAML in {path}: {error}") from error
    if data is None:
        return {}
    if not isinstance(data, Mapping):
        raise ConfigError(f"{path}: top level must be a mapping")
    return dict(data)


def load_config(
    path: Optional[str] = None,
    overrides: Sequence[str] = (),
    *,
    seed: Optional[int] = None,
    run_dir: Optional[str] = None,
) -> RunConfig:
    """Defaults, then the config file, then ``--set`` overrides, then the
    dedicated flags"""
    raw = apply_overrides(read_config_file(path), overrides)
    if seed is not None:
        raw["seed"] = seed
    return build_config(raw, run_dir if run_dir is not None else ".")
