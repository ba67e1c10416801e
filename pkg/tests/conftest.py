# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Common pytest fixtures and plugins."""

import logging

import numpy as np
import pytest
from click.testing import CliRunner

from relaycap.cli import HANDLER_NAME
from relaycap.dmrates import CostConstraint, DmChannelSpec, SearchConfig
from relaycap.gaussrates import GaussianSpec, GridConfig
from relaycap.serializers.schema import load_channel

from .helpers import load_json_from_datadir, xor_kernel


@pytest.fixture()
def example1():
    """Binary modulo channel with budgets p = p_r = 0.15, p_s = 0.1."""
    return load_channel(load_json_from_datadir("example1_dm.json"))


@pytest.fixture()
def example1_nocost():
    """Binary modulo channel without input costs."""
    return load_channel(load_json_from_datadir("example1_nocost.json"))


@pytest.fixture()
def noisy_channel():
    """Binary modulo channel followed by a BSC(0.1)."""
    return DmChannelSpec(np.array([0.9, 0.1]), xor_kernel(0.1))


@pytest.fixture()
def small_search():
    """Cheap multi-start search."""
    return SearchConfig(restarts=8, ascents=2, seed=0)


@pytest.fixture()
def search():
    """Multi-start search large enough for the reference values."""
    return SearchConfig(restarts=32, ascents=4, seed=0)


@pytest.fixture()
def noiseless():
    """Gaussian channel P = P_R = P_S = 1, N0 = 0."""
    return GaussianSpec(1.0, 1.0, 1.0, 0.0)


@pytest.fixture()
def coarse_grid():
    """Coarse Gaussian grid for quick sweeps."""
    return GridConfig(step=0.05, pq_points=9)


@pytest.fixture()
def costly_relay():
    """Channel whose relay budget is below every relay symbol cost."""
    return DmChannelSpec(
        np.array([0.9, 0.1]),
        xor_kernel(),
        cost_xr=CostConstraint(np.array([0.5, 1.0]), 0.1),
    )


@pytest.fixture()
def runner():
    """Click test runner."""
    return CliRunner()


@pytest.fixture(autouse=True)
def drop_cli_handler():
    """Remove the log handler a CLI invocation bound to its own stream."""
    yield
    logger = logging.getLogger("relaycap")
    for handler in [h for h in logger.handlers
                    if h.get_name() == HANDLER_NAME]:
        logger.removeHandler(handler)
