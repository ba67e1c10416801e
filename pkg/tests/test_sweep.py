# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Test the Gaussian sweeps."""

import numpy as np
import pytest

from relaycap.errors import InvalidArgumentError
from relaycap.gaussrates import GaussianSpec, PRESETS, \
    maximize_gaussian_inner_bound, preset_sweep, sweep
from relaycap.gaussrates.sweep import noise_from_gamma


def test_noise_from_gamma():
    """gamma in dB is 10 log10(1 / N0)."""
    assert noise_from_gamma(0.0) == 1.0
    assert noise_from_gamma(20.0) == pytest.approx(0.01)


def test_conferencing_sweep_properties(noiseless):
    """Monotone inner bound, below the cut-set bound, above no-SI."""
    table = sweep(noiseless, "c_sr", [0.0, 0.5, 1.0, 1.5, 2.0])
    assert table.header == ("c_sr", "inner_bound", "no_si", "cutset",
                            "full_coop", "no_coop")
    inner = table.column("inner_bound")
    assert np.all(np.diff(inner) >= -1e-8)
    assert np.all(inner <= table.column("cutset") + 1e-9)
    assert np.all(table.column("no_si") <= inner + 1e-6)
    assert inner[-1] == pytest.approx(1.1610, abs=0.01)


def test_threads_do_not_change_the_table(coarse_grid):
    """Independent points give the same values in parallel."""
    template = GaussianSpec(1.0, 1.0, 1.0, 1.0, c_sr=0.4)
    values = [-10.0, 0.0, 10.0]
    single = sweep(template, "gamma_db", values, ("inner_bound",),
                   coarse_grid, threads=1)
    parallel = sweep(template, "gamma_db", values, ("inner_bound",),
                     coarse_grid, threads=3)
    assert single == parallel


def test_single_point_matches_scalar(noiseless):
    """A one-value sweep reproduces the scalar maximizer."""
    table = sweep(noiseless, "c_rs", [1.0], ("inner_bound",))
    expected = maximize_gaussian_inner_bound(noiseless.with_links(c_rs=1.0))
    assert table.rows == ((1.0, expected.rate),)


def test_source_link_closes_the_gap_at_unit_noise():
    """At N0 = 1 with C_SR = 1.2 the inner bound meets the cut-set bound."""
    template = GaussianSpec(1.0, 1.0, 1.0, 1.0, c_sr=1.2)
    table = sweep(template, "gamma_db", [0.0], ("inner_bound", "cutset"))
    inner, cutset = table.rows[0][1:]
    assert inner <= cutset + 1e-9
    assert cutset - inner < 0.02


@pytest.mark.parametrize("name", ["message_coop_noisy", "state_coop_noisy"])
def test_noisy_presets_are_sandwiched(name, coarse_grid):
    """No-SI rate <= inner bound <= cut-set bound in every family."""
    table = preset_sweep(name, steps=16,
                         curves=("inner_bound", "no_si", "cutset"),
                         grid=coarse_grid)
    preset = PRESETS[name]
    for family in preset.family_values:
        suffix = "[{0}={1:g}]".format(preset.family_field, family)
        inner = table.column("inner_bound" + suffix)
        assert np.all(inner <= table.column("cutset" + suffix) + 1e-6)
        assert np.all(table.column("no_si" + suffix) <= inner + 1e-6)


def test_state_coop_preset(coarse_grid):
    """The no-cooperation reference does not depend on C_RS."""
    table = preset_sweep("state_coop_noiseless", steps=3,
                         curves=("no_coop", "inner_bound"),
                         grid=coarse_grid)
    assert table.axis == "c_rs"
    assert list(table.values) == [0.0, 1.0, 2.0]
    assert np.allclose(table.column("no_coop"), 0.7925, atol=1e-4)


def test_family_preset_columns(coarse_grid):
    """Family presets get one column per family value."""
    table = preset_sweep("state_coop_noisy", steps=2, curves=("no_coop",),
                         grid=coarse_grid)
    family = PRESETS["state_coop_noisy"].family_values
    assert len(table.columns) == len(family)
    assert table.columns[0] == "no_coop[c_rs=0]"
    assert len(table.rows) == 2


@pytest.mark.parametrize("kwargs", [
    {"axis": "P", "values": [1.0]},
    {"axis": "c_sr", "values": []},
    {"axis": "c_sr", "values": [float("nan")]},
    {"axis": "c_sr", "values": [1.0], "curves": ("capacity",)},
])
def test_sweep_rejects_bad_arguments(noiseless, kwargs):
    """Axis, values and curves are validated."""
    with pytest.raises(InvalidArgumentError):
        sweep(noiseless, **kwargs)


def test_unknown_preset_and_column(noiseless):
    """Unknown names are invalid arguments."""
    with pytest.raises(InvalidArgumentError):
        preset_sweep("no_such_preset")
    table = sweep(noiseless, "c_sr", [0.0], ("no_coop",))
    with pytest.raises(InvalidArgumentError):
        table.column("inner_bound")
