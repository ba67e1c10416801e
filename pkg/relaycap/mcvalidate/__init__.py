# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.
"""Monte Carlo oracle for the discrete information measures."""

from .api import SampleBatch, TermCheck, ValidationReport, empirical_cmi, \
    empirical_pmf, estimator_sigma, plug_in_bias, sample_joint, \
    validate_spec

__all__ = (
    "SampleBatch",
    "TermCheck",
    "ValidationReport",
    "empirical_cmi",
    "empirical_pmf",
    "estimator_sigma",
    "plug_in_bias",
    "sample_joint",
    "validate_spec",
)
