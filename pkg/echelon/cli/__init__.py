# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.cli`
================================================================================

The ``echelon`` command: configuration, subcommands and reports.

**Software and Dependencies:**

* PyYAML, pandas

"""

from ._config import (
    MBTI_SOURCES,
    SECTIONS,
    EvalConfig,
    IngestConfig,
    LabelsConfig,
    PathsConfig,
    RiskConfig,
    RunConfig,
    SplitConfig,
    apply_overrides,
    build_config,
    load_config,
    parse_override,
    read_config_file,
)
from ._commands import COMMANDS, candidates, read_documents, write_documents
from ._main import build_parser, configure_logging, exit_code, main
from ._reports import provenance

__version__ = "0.0.0+auto.0"
