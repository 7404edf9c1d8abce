# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.features._tfidf`
================================================================================

Sparse tf-idf vectorization over word n-grams.

The weighting is fixed so that models serialize portably:

* ``idf(t) = ln((1 + N) / (1 + df(t))) + 1``
* ``weight(t) = count(t) * idf(t)``, then L2 normalization of the document vector

Vocabulary indices follow lexicographic term order.

**Software and Dependencies:**

* numpy, scipy.sparse

"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence

import numpy as np
from scipy import sparse

from .._errors import ValidationError
from ._tokenize import Document, doc_ngrams, segments

__version__ = "0.0.0+auto.0"

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SparseVector:
    """Sorted ``(index, weight)`` pairs of a vector of dimension ``dim``"""

    indices: np.ndarray
    weights: np.ndarray
    dim: int

    def __post_init__(self):
        indices = np.asarray(self.indices, dtype=np.int64)
        weights = np.asarray(self.weights, dtype=np.float64)
        if indices.shape != weights.shape or indices.ndim != 1:
            raise ValidationError("indices and weights must be 1-D and equally long")
        if indices.size:
            if np.any(np.diff(indices) <= 0):
                raise ValidationError("indices must be strictly increasing")
            if indices[0] < 0 or indices[-1] >= self.dim:
                raise ValidationError(f"index out of range for dimension {self.dim}")
            if np.any(weights == 0.0):
                raise ValidationError("explicit zeros are not allowed")
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def from_dense(cls, dense: np.ndarray) -> SparseVector:
        """Build from a dense 1-D array, dropping zeros"""
        dense = np.asarray(dense, dtype=np.float64)
        nonzero = np.flatnonzero(dense)
        return cls(nonzero, dense[nonzero], dense.shape[0])

    @property
    def is_zero(self) -> bool:
        """True for the all-zero vector (e.g. an all out-of-vocabulary document)"""
        return self.indices.size == 0

    def norm(self) -> float:
        """Euclidean norm"""
        return float(np.sqrt(np.dot(self.weights, self.weights)))

    def to_dense(self) -> np.ndarray:
        """Dense copy"""
        dense = np.zeros(self.dim)
        dense[self.indices] = self.weights
        return dense

    def items(self):
        """Iterate ``(index, weight)`` pairs"""
        return zip(self.indices.tolist(), self.weights.tolist())


def stack(vectors: Sequence[SparseVector]) -> sparse.csr_matrix:
    """Stack sparse vectors of equal dimension into a CSR matrix"""
    if not vectors:
        raise ValidationError("nothing to stack")
    dim = vectors[0].dim
    if any(v.dim != dim for v in vectors):
        raise ValidationError("vectors differ in dimension")
    indptr = np.zeros(len(vectors) + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([v.indices.size for v in vectors])
    indices = np.concatenate([v.indices for v in vectors]) if indptr[-1] else np.zeros(0, np.int64)
    data = np.concatenate([v.weights for v in vectors]) if indptr[-1] else np.zeros(0)
    return sparse.csr_matrix((data, indices, indptr), shape=(len(vectors), dim))


def row_vector(matrix: sparse.csr_matrix, row: int) -> SparseVector:
    """Row ``row`` of a CSR matrix as a `SparseVector`"""
    start, stop = matrix.indptr[row], matrix.indptr[row + 1]
    indices = matrix.indices[start:stop]
    weights = matrix.data[start:stop]
    order = np.argsort(indices, kind="stable")
    keep = weights[order] != 0.0
    return SparseVector(indices[order][keep], weights[order][keep], matrix.shape[1])


@dataclass(frozen=True, eq=False)
class Vocabulary:
    """A fitted n-gram vocabulary with document frequencies and idf weights"""

    terms: tuple
    df: np.ndarray
    n_docs: int
    n_max: int
    min_df: int = 1
    index: Dict[str, int] = field(init=False, repr=False, compare=False)
    idf: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        df = np.asarray(self.df, dtype=np.int64)
        if df.shape != (len(self.terms),):
            raise ValidationError("one document frequency per term is required")
        if df.size and df.min() < 1:
            raise ValidationError("document frequencies must be >= 1")
        object.__setattr__(self, "df", df)
        object.__setattr__(self, "index", {t: i for i, t in enumerate(self.terms)})
        object.__setattr__(
            self, "idf", np.log((1.0 + self.n_docs) / (1.0 + df)) + 1.0
        )

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, term: str) -> bool:
        return term in self.index

    def to_dict(self) -> dict:
        """Serializable form (the idf table is included for readers of the file)"""
        return {
            "terms": list(self.terms),
            "df": self.df.tolist(),
            "idf": self.idf.tolist(),
            "n_docs": self.n_docs,
            "n_max": self.n_max,
            "min_df": self.min_df,
        }

    @classmethod
    def from_dict(cls, data: dict) -> Vocabulary:
        """Inverse of `to_dict`"""
        return cls(
            terms=tuple(data["terms"]),
            df=np.asarray(data["df"], dtype=np.int64),
            n_docs=int(data["n_docs"]),
            n_max=int(data["n_max"]),
            min_df=int(data.get("min_df", 1)),
        )


def fit_tfidf(
    docs: Sequence[Document],
    n_max: int = 3,
    min_df: int = 1,
    *,
    max_features: Optional[int] = None,
) -> Vocabulary:
    """Fit an n-gram vocabulary with smoothed idf weights.

    :param docs: Token lists (or lists of token segments), one per document
    :param int n_max: Longest n-gram, 1 to 3
    :param int min_df: Minimum number of documents a term must occur in
    :param int max_features: Keep only the most frequent terms (by document
        frequency, ties broken lexicographically)
    """
    if not 1 <= n_max <= 3:
        raise ValidationError("n_max must be 1, 2 or 3")
    if min_df < 1:
        raise ValidationError("min_df must be >= 1")
    if not any(_has_tokens(doc) for doc in docs):
        raise ValidationError("cannot fit a vocabulary on an empty corpus")

    counts = Counter()
    for doc in docs:
        counts.update(set(doc_ngrams(doc, n_max)))

    kept = [(term, df) for term, df in counts.items() if df >= min_df]
    if max_features is not None and len(kept) > max_features:
        kept.sort(key=lambda item: (-item[1], item[0]))
        kept = kept[:max_features]
    if not kept:
        raise ValidationError(f"no term occurs in at least {min_df} documents")
    kept.sort()
    logger.debug("vocabulary of %d terms from %d documents", len(kept), len(docs))
    return Vocabulary(
        terms=tuple(term for term, _ in kept),
        df=np.array([df for _, df in kept], dtype=np.int64),
        n_docs=len(docs),
        n_max=n_max,
        min_df=min_df,
    )


def _has_tokens(doc: Document) -> bool:
    return any(len(segment) for segment in segments(doc))


def _weights(vocabulary: Vocabulary, doc: Document):
    counts = Counter(
        vocabulary.index[gram]
        for gram in doc_ngrams(doc, vocabulary.n_max)
        if gram in vocabulary.index
    )
    if not counts:
        return np.zeros(0, np.int64), np.zeros(0)
    indices = np.fromiter(sorted(counts), dtype=np.int64, count=len(counts))
    weights = np.array([counts[i] for i in indices.tolist()], dtype=np.float64)
    weights *= vocabulary.idf[indices]
    weights /= np.sqrt(np.dot(weights, weights))
    return indices, weights


def transform_tfidf(vocabulary: Vocabulary, doc: Document) -> SparseVector:
    """Tf-idf vector of one document, L2-normalized.

    Out-of-vocabulary n-grams are ignored; a document without any known
    n-gram maps to the zero vector (see `SparseVector.is_zero`).
    """
    indices, weights = _weights(vocabulary, doc)
    vector = SparseVector(indices, weights, len(vocabulary))
    if vector.is_zero:
        logger.debug("document has no in-vocabulary n-gram")
    return vector


def transform_many(vocabulary: Vocabulary, docs: Sequence[Document]) -> sparse.csr_matrix:
    """Tf-idf matrix with one row per document"""
    indptr = [0]
    all_indices = []
    all_weights = []
    for doc in docs:
        indices, weights = _weights(vocabulary, doc)
        all_indices.append(indices)
        all_weights.append(weights)
        indptr.append(indptr[-1] + indices.size)
    indices = np.concatenate(all_indices) if all_indices else np.zeros(0, np.int64)
    weights = np.concatenate(all_weights) if all_weights else np.zeros(0)
    return sparse.csr_matrix(
        (weights, indices, np.asarray(indptr, dtype=np.int64)),
        shape=(len(docs), len(vocabulary)),
    )
