# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.features`
================================================================================

Tokenization, n-gram tf-idf vectors and category-dictionary features

**Software and Dependencies:**

* numpy, scipy

"""

from ._tokenize import tokenize, ngrams, segments, doc_ngrams, doc_tokens
from ._tfidf import (
    SparseVector,
    Vocabulary,
    fit_tfidf,
    transform_tfidf,
    transform_many,
    stack,
    row_vector,
)
from ._dictionary import (
    CategoryDictionary,
    DEMO_DICTIONARY,
    parse_dictionary,
    load_dictionary,
    dict_features,
)

__version__ = "0.0.0+auto.0"
