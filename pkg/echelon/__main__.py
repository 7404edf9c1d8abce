# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""``python -m echelon``"""

import sys

from .cli import main

sys.exit(main())
