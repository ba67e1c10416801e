# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.
"""Discrete memoryless relay channel rates and capacities."""

from .api import capacity_full_message_coop, capacity_no_coop, \
    capacity_state_coop, certificate_rate, certificate_terms, \
    check_prop3_conditions, cooperation_regime, cutset_bound, \
    cutset_terms, default_cardinalities, default_inner_distribution, \
    inner_bound_terms, max_relay_output, maximize_inner_bound, \
    no_si_baseline, rate_state_coop_only, relay_ignores_state_rate
from .blahut_arimoto import blahut_arimoto
from .models import CostConstraint, DmChannelSpec, InnerDistribution, \
    OptimizerTrace, RateResult, SearchConfig

__all__ = (
    "CostConstraint",
    "DmChannelSpec",
    "InnerDistribution",
    "OptimizerTrace",
    "RateResult",
    "SearchConfig",
    "blahut_arimoto",
    "capacity_full_message_coop",
    "capacity_no_coop",
    "capacity_state_coop",
    "certificate_rate",
    "certificate_terms",
    "check_prop3_conditions",
    "cooperation_regime",
    "cutset_bound",
    "cutset_terms",
    "default_cardinalities",
    "default_inner_distribution",
    "inner_bound_terms",
    "max_relay_output",
    "maximize_inner_bound",
    "no_si_baseline",
    "rate_state_coop_only",
    "relay_ignores_state_rate",
)
