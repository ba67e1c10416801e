# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Version information for relaycap.

This file is imported by ``relaycap.__init__``,
and parsed by ``setup.py``.
"""

__version__ = "1.0.0"
