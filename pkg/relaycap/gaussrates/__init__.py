# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.
"""Gaussian relay channel rates, bounds and sweeps."""

from .api import build_covariance, cooperation_thresholds, full_coop_bound, \
    gaussian_cmi, gaussian_cutset_bound, gaussian_inner_bound, \
    gaussian_inner_terms_closed_form, maximize_gaussian_inner_bound, \
    no_coop_capacity, no_coop_reference, no_si_rate, shannon_c
from .models import CovarianceModel, GaussianParams, GaussianSpec, \
    GridConfig
from .sweep import AXES, CURVES, PRESETS, SweepTable, preset_sweep, sweep

__all__ = (
    "AXES",
    "CURVES",
    "CovarianceModel",
    "GaussianParams",
    "GaussianSpec",
    "GridConfig",
    "PRESETS",
    "SweepTable",
    "build_covariance",
    "cooperation_thresholds",
    "full_coop_bound",
    "gaussian_cmi",
    "gaussian_cutset_bound",
    "gaussian_inner_bound",
    "gaussian_inner_terms_closed_form",
    "maximize_gaussian_inner_bound",
    "no_coop_capacity",
    "no_coop_reference",
    "no_si_rate",
    "preset_sweep",
    "shannon_c",
    "sweep",
)
