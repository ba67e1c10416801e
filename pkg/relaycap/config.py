# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Default configuration for relaycap.

You overwrite the search and sampling defaults by setting environment
variables: ``RELAYCAP_<variable name>``. Tolerances are fixed.
"""

import os


def _parse_env_bool(var_name, default=None):
    if str(os.environ.get(var_name)).lower() == "true":
        return True
    elif str(os.environ.get(var_name)).lower() == "false":
        return False
    return default


def _env_int(var_name, default):
    return int(os.environ.get(var_name, default))


def _env_float(var_name, default):
    return float(os.environ.get(var_name, default))


###############################################################################
# Tolerances
###############################################################################
PMF_SUM_TOLERANCE = 1e-12
"""Allowed deviation of a joint pmf total from one."""

STOCHASTIC_TOLERANCE = 1e-9
"""Allowed deviation of a conditional pmf row total from one."""

MI_CLAMP_TOLERANCE = 1e-10
"""Negative information values above ``-MI_CLAMP_TOLERANCE`` become 0."""

COST_TOLERANCE = 1e-9
"""Slack allowed on expected input cost against its budget."""

TIE_TOLERANCE = 1e-9
"""Rates closer than this are ties; the earlier restart wins."""

DETERMINANT_FLOOR = 1e-300
"""Conditional covariance determinants below this are degenerate."""

###############################################################################
# Discrete search
###############################################################################
RELAYCAP_SEARCH_RESTARTS = _env_int("RELAYCAP_SEARCH_RESTARTS", 200)
"""Number of low-discrepancy starting points of the simplex search."""

RELAYCAP_SEARCH_INITIAL_STEP = _env_float(
    "RELAYCAP_SEARCH_INITIAL_STEP", 0.25
)
"""First coordinate ascent step on each simplex block."""

RELAYCAP_SEARCH_MIN_STEP = _env_float("RELAYCAP_SEARCH_MIN_STEP", 1e-4)
"""Coordinate ascent stops once the halved step falls below this."""

RELAYCAP_SEED = _env_int("RELAYCAP_SEED", 0)
"""Default seed for the starting points and the Monte Carlo sampler."""

RELAYCAP_THREADS = _env_int("RELAYCAP_THREADS", 1)
"""Worker threads used for restarts and sweep points."""

###############################################################################
# Gaussian search
###############################################################################
RELAYCAP_GRID_STEP = _env_float("RELAYCAP_GRID_STEP", 0.02)
"""Linear grid step of the power splits alpha and beta."""

RELAYCAP_PQ_GRID_POINTS = _env_int("RELAYCAP_PQ_GRID_POINTS", 17)
"""Number of logarithmic grid points of the compression noise variance."""

RELAYCAP_PQ_GRID_RANGE = (1e-4, 1e4)
"""Range of the compression noise variance grid."""

RELAYCAP_GRID_REFINE = _parse_env_bool("RELAYCAP_GRID_REFINE", True)
"""Refine the best grid point with a local simplex search."""

###############################################################################
# Monte Carlo
###############################################################################
RELAYCAP_MC_SAMPLES = _env_int("RELAYCAP_MC_SAMPLES", 1000000)
"""Default sample count of the plug-in validation."""

RELAYCAP_MC_CHUNK_SIZE = _env_int("RELAYCAP_MC_CHUNK_SIZE", 65536)
"""Rows drawn per chunk; each chunk has its own spawned seed."""

RELAYCAP_MC_TOLERANCE = _env_float("RELAYCAP_MC_TOLERANCE", 0.01)
"""Default pass tolerance of the validation report, in bits."""

###############################################################################
# Logging
###############################################################################
RELAYCAP_LOG_LEVEL = os.environ.get("RELAYCAP_LOG_LEVEL", "WARNING")
"""Level of the ``relaycap`` logger when run from the command line."""

RELAYCAP_LOG_FORMAT = "%(asctime)s, %(name)s, %(levelname)s, %(message)s"
"""Formatter used by the command line log handler."""
