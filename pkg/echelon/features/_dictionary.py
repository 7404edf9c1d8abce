# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.features._dictionary`
================================================================================

Category-dictionary features in the style of LIWC.

Dictionary files use the ``.dic`` layout: a category header section enclosed
in ``%`` lines mapping ids to names, then one ``word<TAB>cat1,cat2`` line per
pattern. Categories may be given by id or by name. A trailing ``*`` turns a
pattern into a prefix match. No lexicon content is shipped apart from a tiny
demo file.

"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Mapping, Sequence, Tuple, Union

import numpy as np

from .._errors import InputError, ValidationError
from ._tokenize import Document, doc_tokens

__version__ = "0.0.0+auto.0"

DEMO_DICTIONARY = os.path.join(
    os.path.dirname(os.path.dirname(__file__)), "resources", "demo.dic"
)


@dataclass(frozen=True)
class CategoryDictionary:
    """Mapping of category name to word patterns"""

    categories: Mapping[str, FrozenSet[str]]
    _literals: Dict[str, Tuple[int, ...]] = field(init=False, repr=False, compare=False)
    _prefixes: Tuple[Tuple[str, int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.categories:
            raise ValidationError("a dictionary needs at least one category")
        categories = {}
        literals: Dict[str, list] = {}
        prefixes = []
        for position, (name, patterns) in enumerate(self.categories.items()):
            patterns = frozenset(patterns)
            if not patterns:
                raise ValidationError(f"category {name!r} has no patterns")
            for pattern in patterns:
                if pattern != pattern.lower():
                    raise ValidationError(f"pattern {pattern!r} must be lowercase")
                if pattern.endswith("*"):
                    prefixes.append((pattern[:-1], position))
                else:
                    literals.setdefault(pattern, []).append(position)
            categories[name] = patterns
        object.__setattr__(self, "categories", categories)
        object.__setattr__(self, "_literals", {k: tuple(v) for k, v in literals.items()})
        object.__setattr__(self, "_prefixes", tuple(sorted(prefixes)))

    @property
    def names(self) -> Tuple[str, ...]:
        """Category names in file order"""
        return tuple(self.categories)

    def matches(self, token: str) -> FrozenSet[int]:
        """Positions of the categories whose patterns match ``token``"""
        hits = set(self._literals.get(token, ()))
        for prefix, position in self._prefixes:
            if token.startswith(prefix):
                hits.add(position)
        return frozenset(hits)

    def to_dict(self) -> dict:
        """Serializable form"""
        return {name: sorted(patterns) for name, patterns in self.categories.items()}

    @classmethod
    def from_dict(cls, data: Mapping[str, Sequence[str]]) -> CategoryDictionary:
        """Inverse of `to_dict`"""
        return cls({name: frozenset(patterns) for name, patterns in data.items()})


def parse_dictionary(text: str) -> CategoryDictionary:
    """Parse ``.dic`` text into a `CategoryDictionary`"""
    lines = text.splitlines()
    ids: Dict[str, str] = {}
    position = 0
    while position < len(lines) and not lines[position].strip():
        position += 1
    if position < len(lines) and lines[position].strip() == "%":
        position += 1
        while position < len(lines) and lines[position].strip() != "%":
            entry = lines[position].split()
            if entry:
                if len(entry) < 2:
                    raise ValidationError(f"line {position + 1}: malformed category entry")
                ids[entry[0]] = " ".join(entry[1:])
            position += 1
        if position == len(lines):
            raise ValidationError("unterminated category header")
        position += 1

    categories: Dict[str, set] = {name: set() for name in ids.values()}
    for number, line in enumerate(lines[position:], start=position + 1):
        if not line.strip():
            continue
        word, _, rest = line.strip().partition("\t")
        if not rest:
            word, _, rest = line.strip().partition(" ")
        labels = [label for label in re.split(r"[,\s]+", rest.strip()) if label]
        if not word or not labels:
            raise ValidationError(f"line {number}: expected 'word<TAB>categories'")
        for label in labels:
            name = ids.get(label, label)
            categories.setdefault(name, set()).add(word.lower())
    return CategoryDictionary({k: frozenset(v) for k, v in categories.items() if v})


def load_dictionary(path: Union[str, os.PathLike]) -> CategoryDictionary:
    """Read a ``.dic`` file"""
    try:
        with open(path, encoding="utf-8") as file:
            return parse_dictionary(file.read())
    except OSError as error:
        raise InputError(f"cannot read dictionary {path}: {error}") from error


def dict_features(dictionary: CategoryDictionary, doc: Document) -> np.ndarray:
    """Category fractions plus the total token count.

    :return: Array of length ``len(dictionary.names) + 1``; entry ``k`` is the
        fraction of tokens matching any pattern of category ``k``, the last
        entry is the number of tokens
    """
    tokens = doc_tokens(doc)
    features = np.zeros(len(dictionary.names) + 1)
    for token in tokens:
        for position in dictionary.matches(token):
            features[position] += 1.0
    if tokens:
        features[:-1] /= len(tokens)
    features[-1] = len(tokens)
    return features
