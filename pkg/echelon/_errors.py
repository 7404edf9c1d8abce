# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon._errors`
================================================================================

Exception hierarchy. Each category carries the process exit code the command
line uses for it.

"""

from typing import Iterable, Optional, Sequence

__version__ = "0.0.0+auto.0"


class EchelonError(Exception):
    """Base class for every error raised on purpose by this package"""

    exit_code = 1


class ConfigError(EchelonError):
    """Invalid or inconsistent run configuration"""

    exit_code = 2


class InputError(EchelonError, OSError):
    """A file could not be found, read or written"""

    exit_code = 3


class ValidationError(EchelonError, ValueError):
    """Input data violates a documented precondition"""

    exit_code = 4


class NumericalError(EchelonError, ArithmeticError):
    """A numerical routine failed"""

    exit_code = 5


class ParseError(ValidationError):
    """Malformed transcript text"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyTranscriptError(ValidationError):
    """A transcript without a single utterance"""


class NotFoundError(ValidationError):
    """A requested entity (speaker, call, model) does not exist"""


class InsufficientVotesError(ValidationError):
    """Too few votes on an MBTI scale"""

    def __init__(self, scale, total: int, required: int):
        self.scale = scale
        self.total = total
        self.required = required
        super().__init__(
            f"scale {getattr(scale, 'value', scale)}: {total} votes, need at least {required}"
        )


class InsufficientDataError(ValidationError):
    """Not enough observations, e.g. prices inside a volatility window"""

    def __init__(self, message: str, call_id: Optional[str] = None):
        self.call_id = call_id
        if call_id is not None:
            message = f"call {call_id}: {message}"
        super().__init__(message)


class RankDeficiencyError(NumericalError):
    """Design matrix without full column rank"""

    def __init__(self, columns: Sequence[str]):
        self.columns = tuple(columns)
        super().__init__("collinear columns: " + ", ".join(self.columns))


class DivergenceError(NumericalError):
    """Training produced a non-finite loss"""

    def __init__(self, epoch: int, loss: float):
        self.epoch = epoch
        self.loss = loss
        super().__init__(f"non-finite loss {loss!r} in epoch {epoch}")


class ModelSelectionError(NumericalError):
    """Every candidate of a model selection failed"""

    def __init__(self, failures: Iterable[str]):
        self.failures = tuple(failures)
        super().__init__(
            "all candidates failed:\n" + "\n".join("  " + f for f in self.failures)
        )
