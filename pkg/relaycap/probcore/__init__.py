# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.
"""Exact discrete probability and information measures."""

from .api import assemble_joint, binary_convolve, binary_entropy, \
    check_stochastic, conditional_entropy, conditional_mutual_information, \
    entropy, marginal, mutual_information
from .models import JointPmf, VariableId

__all__ = (
    "JointPmf",
    "VariableId",
    "assemble_joint",
    "binary_convolve",
    "binary_entropy",
    "check_stochastic",
    "conditional_entropy",
    "conditional_mutual_information",
    "entropy",
    "marginal",
    "mutual_information",
)
