# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.model._split`
================================================================================

Group-aware train/validation/test split: all instances of a group (a CEO)
land in the same part.

"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Sequence, Tuple

import numpy as np

from .._errors import ValidationError

__version__ = "0.0.0+auto.0"

logger = logging.getLogger(__name__)

PART_NAMES = ("train", "validation", "test")


@dataclass(frozen=True)
class Split:
    """Instance indices of the three parts plus the group of every instance"""

    train: Tuple[int, ...]
    validation: Tuple[int, ...]
    test: Tuple[int, ...]
    groups: Tuple[Hashable, ...]

    def __post_init__(self):
        seen = sorted(self.train + self.validation + self.test)
        if seen != list(range(len(self.groups))):
            raise ValidationError("split parts must partition the instance indices")
        owner = {}
        for name, part in zip(PART_NAMES, self.parts):
            for index in part:
                group = self.groups[index]
                if owner.setdefault(group, name) != name:
                    raise ValidationError(f"group {group!r} occurs in {owner[group]} and {name}")

    @property
    def parts(self) -> Tuple[Tuple[int, ...], ...]:
        """``(train, validation, test)``"""
        return (self.train, self.validation, self.test)

    def part_of(self, index: int) -> str:
        """Name of the part holding instance ``index``"""
        for name, part in zip(PART_NAMES, self.parts):
            if index in part:
                return name
        raise IndexError(index)

    @classmethod
    def from_assignment(cls, groups: Sequence[Hashable], parts: Sequence[str]) -> Split:
        """Build from one part name per instance"""
        if len(groups) != len(parts):
            raise ValidationError("one part name per instance is required")
        unknown = set(parts) - set(PART_NAMES)
        if unknown:
            raise ValidationError(f"unknown part names: {', '.join(sorted(unknown))}")
        indices = {name: tuple(i for i, p in enumerate(parts) if p == name) for name in PART_NAMES}
        return cls(indices["train"], indices["validation"], indices["test"], tuple(groups))


def group_shuffle_split(
    groups: Sequence[Hashable],
    fractions: Sequence[float] = (0.8, 0.1, 0.1),
    seed: int = 0,
) -> Split:
    """Split instances into train, validation and test parts by group.

    Groups are shuffled with a seeded generator, then each group goes to the
    part whose instance count falls furthest short of its target (lowest
    part index on ties). Every part ends within the size of the largest
    group of its target.

    :param groups: Group id of every instance
    :param fractions: Target shares of the three parts, summing to 1
    :param int seed: Shuffling seed
    """
    fractions = np.asarray(fractions, dtype=np.float64)
    if fractions.shape != (len(PART_NAMES),):
        raise ValidationError("three fractions are required")
    if np.any(fractions < 0) or abs(fractions.sum() - 1.0) > 1e-9:
        raise ValidationError("fractions must be non-negative and sum to 1")

    sizes = Counter(groups)
    unique = sorted(sizes, key=str)
    if len(unique) < len(PART_NAMES):
        raise ValidationError(
            f"{len(unique)} distinct groups cannot fill {len(PART_NAMES)} parts"
        )

    rng = np.random.default_rng(seed)
    targets = fractions * len(groups)
    assigned = np.zeros(len(PART_NAMES))
    part_of_group = {}
    for position in rng.permutation(len(unique)):
        group = unique[position]
        part = int(np.argmax(targets - assigned))
        part_of_group[group] = part
        assigned[part] += sizes[group]

    for name, count in zip(PART_NAMES, assigned):
        if count == 0:
            logger.warning("%s part of the split is empty", name)
    indices = [[] for _ in PART_NAMES]
    for index, group in enumerate(groups):
        indices[part_of_group[group]].append(index)
    return Split(*(tuple(part) for part in indices), tuple(groups))
