# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

# -- General configuration ------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
]

source_suffix = ".rst"
master_doc = "index"

project = "echelon"
copyright = "2026 The Echelon Authors"
author = "The Echelon Authors"
version = "0.0"
release = "0.0.0"

language = "en"
exclude_patterns = ["_build", ".env"]

# `Name` in docstrings links to whatever object it names
default_role = "any"
add_function_parentheses = True

# Class docstring and __post_init__ notes together
autoclass_content = "both"
autodoc_member_order = "bysource"

# Docstrings use reST fields (:param:, :raises:), not numpy sections
napoleon_numpy_docstring = False

pygments_style = "sphinx"

# -- Options for HTML output ----------------------------------------------

if os.environ.get("READTHEDOCS", None) != "True":
    try:
        import sphinx_rtd_theme

        html_theme = "sphinx_rtd_theme"
    except ImportError:
        html_theme = "default"

htmlhelp_basename = "echelondoc"
