# SPDX-FileCopyrightText: 2026-present kecs developers
#
# SPDX-License-Identifier: MIT
__version__ = "0.1.0"
