# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.model._pipeline`
================================================================================

Personality regression end to end: document features, a Box-Cox transform
and one regressor per MBTI scale.

Feature kinds:

* ``tfidf``: n-gram tf-idf vectors
* ``dict``: category-dictionary fractions and the token count, z-scored on
  the training documents
* ``tfidf+dict``: both, side by side

"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
from scipy import sparse

from .._constants import LABEL_CEIL, LABEL_FLOOR, SCALES, Scale
from .._errors import ValidationError
from .._helpers import sha256_hex
from ..corpus._names import normalize_name
from ..corpus._structs import CeoDocument
from ..features import (
    DEMO_DICTIONARY,
    CategoryDictionary,
    Vocabulary,
    dict_features,
    fit_tfidf,
    load_dictionary,
    row_vector,
    tokenize,
    transform_many,
)
from ..labels._structs import MbtiVector
from ._boxcox import (
    BoxCoxTransform,
    boxcox_apply,
    boxcox_fit,
    boxcox_invert,
    clamp_labels,
)
from ._evaluate import EvalReport, evaluate
from ._explain import Explanation, explain_linear
from ._mlp import MlpConfig, MlpModel, train_mlp
from ._svr import SvrModel, SvrParams, train_svr

__version__ = "0.0.0+auto.0"

logger = logging.getLogger(__name__)

FEATURE_KINDS = ("tfidf", "dict", "tfidf+dict")
ALGORITHMS = ("svr", "mlp")
SPACES = ("transformed", "original")

Regressor = Union[SvrModel, MlpModel]


@dataclass(frozen=True)
class FeatureConfig:
    """How documents become feature vectors"""

    kind: str = "tfidf"
    n_max: int = 3
    min_df: int = 1
    max_features: Optional[int] = 20000

    def __post_init__(self):
        if self.kind not in FEATURE_KINDS:
            raise ValidationError(f"unknown feature kind {self.kind!r}")
        if not 1 <= self.n_max <= 3:
            raise ValidationError("n_max must be 1, 2 or 3")
        if self.max_features is not None and self.max_features < 1:
            raise ValidationError("max_features must be >= 1")

    @property
    def uses_tfidf(self) -> bool:
        """True for ``tfidf`` and ``tfidf+dict``"""
        return "tfidf" in self.kind

    @property
    def uses_dictionary(self) -> bool:
        """True for ``dict`` and ``tfidf+dict``"""
        return "dict" in self.kind


@dataclass(frozen=True)
class Candidate:
    """One feature/algorithm combination"""

    features: FeatureConfig = field(default_factory=FeatureConfig)
    algorithm: str = "svr"
    svr: SvrParams = field(default_factory=SvrParams)
    mlp: MlpConfig = field(default_factory=MlpConfig)

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValidationError(f"unknown algorithm {self.algorithm!r}")

    @property
    def name(self) -> str:
        """Short label such as ``svr/tfidf/n3``"""
        return f"{self.algorithm}/{self.features.kind}/n{self.features.n_max}"

    def to_dict(self) -> dict:
        """Serializable form"""
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Mapping) -> Candidate:
        """Inverse of `to_dict`"""
        return cls(
            features=FeatureConfig(**data.get("features", {})),
            algorithm=data.get("algorithm", "svr"),
            svr=SvrParams(**data.get("svr", {})),
            mlp=MlpConfig(**data.get("mlp", {})),
        )


@dataclass(frozen=True)
class Instance:
    """One CEO–call document with its token segments and, if known, its labels"""

    call_id: str
    ceo: str
    segments: Tuple[Tuple[str, ...], ...]
    labels: Optional[MbtiVector] = None


def instance_from_document(doc: CeoDocument, labels: Optional[MbtiVector] = None) -> Instance:
    """Tokenize a CEO document, one segment per utterance"""
    return Instance(
        call_id=doc.call_id,
        ceo=doc.ceo_name,
        segments=tuple(tuple(tokenize(u)) for u in doc.utterances),
        labels=labels,
    )


def _name_key(name: str) -> str:
    return normalize_name(name).casefold()


def instances_from(
    docs: Sequence[CeoDocument], labels: Mapping[str, MbtiVector]
) -> list:
    """Join CEO documents with their CEO's labels; unlabelled documents are skipped"""
    by_name = {_name_key(name): vector for name, vector in labels.items()}
    instances = []
    skipped = 0
    for doc in docs:
        vector = by_name.get(_name_key(doc.ceo_name))
        if vector is None:
            skipped += 1
            continue
        instances.append(instance_from_document(doc, vector))
    if skipped:
        logger.info("%d document(s) without labels skipped", skipped)
    return instances


def label_matrix(instances: Sequence[Instance]) -> np.ndarray:
    """Labels as an ``n × 4`` array in scale order"""
    missing = [i.call_id for i in instances if i.labels is None]
    if missing:
        raise ValidationError(f"unlabelled instances: {', '.join(missing[:5])}")
    return np.vstack([i.labels.as_array() for i in instances])


@dataclass(frozen=True, eq=False)
class DictScaler:
    """Column-wise z-scoring fitted on training rows; constant columns are
    only centred"""

    mean: np.ndarray
    scale: np.ndarray

    @classmethod
    def fit(cls, matrix: np.ndarray) -> DictScaler:
        """Fit to a dense training matrix"""
        mean = matrix.mean(axis=0)
        scale = matrix.std(axis=0, ddof=1) if matrix.shape[0] > 1 else np.zeros(matrix.shape[1])
        scale = np.where(scale > 0.0, scale, 1.0)
        return cls(mean, scale)

    def transform(self, matrix: np.ndarray) -> np.ndarray:
        """Apply the fitted standardization"""
        return (matrix - self.mean) / self.scale


@dataclass(frozen=True, eq=False)
class FeatureSpace:
    """Fitted feature extraction"""

    config: FeatureConfig
    vocabulary: Optional[Vocabulary] = None
    dictionary: Optional[CategoryDictionary] = None
    scaler: Optional[DictScaler] = None

    @property
    def dim(self) -> int:
        """Number of features"""
        size = len(self.vocabulary) if self.vocabulary is not None else 0
        if self.dictionary is not None:
            size += len(self.dictionary.names) + 1
        return size

    @property
    def names(self) -> Tuple[str, ...]:
        """Feature names: n-grams, then ``dict:<category>`` and ``dict:tokens``"""
        names = tuple(self.vocabulary.terms) if self.vocabulary is not None else ()
        if self.dictionary is not None:
            names += tuple(f"dict:{name}" for name in self.dictionary.names) + ("dict:tokens",)
        return names

    def _dict_block(self, documents) -> np.ndarray:
        return np.vstack([dict_features(self.dictionary, doc) for doc in documents])

    def transform(self, documents: Sequence) -> sparse.csr_matrix:
        """Feature matrix, one row per document (token segments)"""
        blocks = []
        if self.vocabulary is not None:
            blocks.append(transform_many(self.vocabulary, documents))
        if self.dictionary is not None:
            blocks.append(sparse.csr_matrix(self.scaler.transform(self._dict_block(documents))))
        return sparse.hstack(blocks, format="csr")


def fit_features(
    config: FeatureConfig,
    documents: Sequence,
    dictionary: Optional[CategoryDictionary] = None,
) -> FeatureSpace:
    """Fit the feature extraction on training documents only"""
    vocabulary = None
    if config.uses_tfidf:
        vocabulary = fit_tfidf(
            documents, config.n_max, config.min_df, max_features=config.max_features
        )
    if not config.uses_dictionary:
        return FeatureSpace(config, vocabulary)
    if dictionary is None:
        dictionary = load_dictionary(DEMO_DICTIONARY)
    space = FeatureSpace(config, vocabulary, dictionary)
    scaler = DictScaler.fit(space._dict_block(documents))  # pylint: disable=protected-access
    return FeatureSpace(config, vocabulary, dictionary, scaler)


def _documents(items: Sequence) -> list:
    return [item.segments if isinstance(item, Instance) else item for item in items]


@dataclass(frozen=True, eq=False)
class PersonalityModel:
    """Features, per-scale Box-Cox transforms and per-scale regressors"""

    candidate: Candidate
    features: FeatureSpace
    transforms: Dict[Scale, BoxCoxTransform]
    regressors: Dict[Scale, Regressor]
    background_mean: np.ndarray
    fingerprint: str = ""

    def predict(self, items: Sequence, space: str = "transformed") -> np.ndarray:
        """Predicted scores, ``n × 4`` in scale order.

        :param items: `Instance` objects or token-segment documents
        :param str space: ``transformed`` (the training target) or
            ``original`` (inverted to [0, 1])
        """
        if space not in SPACES:
            raise ValidationError(f"unknown evaluation space {space!r}")
        matrix = self.features.transform(_documents(items))
        columns = []
        for scale in SCALES:
            z = self.regressors[scale].predict(matrix)
            if space == "original":
                z = self.to_original(scale, z)
            columns.append(z)
        return np.column_stack(columns)

    def to_original(self, scale: Scale, z) -> np.ndarray:
        """Invert the transform of ``scale``; values beyond the label range are clipped"""
        transform = self.transforms[scale]
        low, high = boxcox_apply(transform, np.array([LABEL_FLOOR, LABEL_CEIL]))
        return boxcox_invert(transform, np.clip(z, low, high))

    def targets(self, instances: Sequence[Instance], space: str = "transformed") -> np.ndarray:
        """Labels of ``instances`` in the given space"""
        labels = label_matrix(instances)
        if space == "original":
            return labels
        return np.column_stack(
            [
                boxcox_apply(self.transforms[scale], clamp_labels(labels[:, k]))
                for k, scale in enumerate(SCALES)
            ]
        )

    def explain(self, item, scale) -> Explanation:
        """Shapley contributions of every feature for one document and scale.

        :raises ValidationError: for a non-linear regressor
        """
        scale = Scale(scale)
        regressor = self.regressors[scale]
        if not isinstance(regressor, SvrModel):
            raise ValidationError("explanations need a linear (svr) model")
        matrix = self.features.transform(_documents([item]))
        return explain_linear(regressor, row_vector(matrix, 0), self.background_mean)


def training_fingerprint(candidate: Candidate, instances: Sequence[Instance]) -> str:
    """SHA-256 over the candidate and the training instances"""
    return sha256_hex(
        {
            "candidate": candidate.to_dict(),
            "instances": [
                [i.call_id, i.ceo, i.labels.as_array().tolist() if i.labels else None]
                for i in instances
            ],
        }
    )


def fit_model(
    candidate: Candidate,
    train: Sequence[Instance],
    dictionary: Optional[CategoryDictionary] = None,
) -> PersonalityModel:
    """Train a `PersonalityModel` on labelled instances"""
    labels = label_matrix(train)
    features = fit_features(candidate.features, _documents(train), dictionary)
    matrix = features.transform(_documents(train))
    transforms = {}
    regressors = {}
    for k, scale in enumerate(SCALES):
        y = clamp_labels(labels[:, k])
        transforms[scale] = boxcox_fit(y)
        z = boxcox_apply(transforms[scale], y)
        if candidate.algorithm == "svr":
            regressors[scale] = train_svr(matrix, z, candidate.svr)
        else:
            regressors[scale] = train_mlp(matrix, z, candidate.mlp)
        logger.debug("%s: trained %s", scale.label, candidate.name)
    return PersonalityModel(
        candidate=candidate,
        features=features,
        transforms=transforms,
        regressors=regressors,
        background_mean=np.asarray(matrix.mean(axis=0)).ravel(),
        fingerprint=training_fingerprint(candidate, train),
    )


def evaluate_model(
    model: PersonalityModel, instances: Sequence[Instance], space: str = "transformed"
) -> Dict[Scale, EvalReport]:
    """Per-scale metrics on labelled instances"""
    predicted = model.predict(instances, space)
    actual = model.targets(instances, space)
    return {scale: evaluate(actual[:, k], predicted[:, k]) for k, scale in enumerate(SCALES)}


def baseline_reports(
    model: PersonalityModel,
    train: Sequence[Instance],
    instances: Sequence[Instance],
    space: str = "transformed",
) -> Dict[Scale, EvalReport]:
    """Metrics of predicting the training mean for every instance"""
    means = model.targets(train, space).mean(axis=0)
    actual = model.targets(instances, space)
    return {
        scale: evaluate(actual[:, k], np.full(actual.shape[0], means[k]))
        for k, scale in enumerate(SCALES)
    }
