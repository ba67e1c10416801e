# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.
"""Binary modulo-additive example channel."""

from .api import BinaryModuloParams, build_channel, capacity_closed_form, \
    capacity_terms, no_si_closed_form

__all__ = (
    "BinaryModuloParams",
    "build_channel",
    "capacity_closed_form",
    "capacity_terms",
    "no_si_closed_form",
)
