# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Rates and bounds for relay channels with strictly causal relay state."""

from .version import __version__

__all__ = ("__version__",)
