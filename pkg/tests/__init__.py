# SPDX-FileCopyrightText: 2023-present Zvi Baratz <z.baratz@gmail.com>
#
# SPDX-License-Identifier: MIT
