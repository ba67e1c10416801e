# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Rate curves of the Gaussian channel along one parameter axis."""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from relaycap.errors import InvalidArgumentError
from relaycap.gaussrates.api import full_coop_bound, gaussian_cutset_bound, \
    maximize_gaussian_inner_bound, no_coop_reference, no_si_rate
from relaycap.gaussrates.models import GaussianSpec

sweep_logger = logging.getLogger("relaycap.sweep")

CONFERENCING_AXES = ("c_sr", "c_rs")
AXES = CONFERENCING_AXES + ("gamma_db",)
CURVES = ("inner_bound", "no_si", "cutset", "full_coop", "no_coop")


@dataclass(frozen=True)
class SweepTable:
    """One row per axis value, one column per curve."""

    axis: str
    columns: Tuple[str, ...]
    rows: Tuple[Tuple[float, ...], ...]

    @property
    def header(self):
        """Axis name followed by the curve names."""
        return (self.axis,) + self.columns

    @property
    def values(self):
        """Axis values."""
        return np.array([row[0] for row in self.rows])

    def column(self, name):
        """Values of one curve."""
        if name not in self.columns:
            raise InvalidArgumentError(
                field="column", message="unknown curve {0!r}".format(name)
            )
        index = self.columns.index(name) + 1
        return np.array([row[index] for row in self.rows])


@dataclass(frozen=True)
class SweepPreset:
    """A named sweep, optionally repeated over a family of link values."""

    axis: str
    start: float
    stop: float
    steps: int
    template: GaussianSpec
    family_field: Optional[str] = None
    family_values: Tuple[float, ...] = ()

    def axis_values(self, steps=None):
        """Evenly spaced axis values."""
        return [float(v) for v in np.linspace(
            self.start, self.stop, steps or self.steps)]


PRESETS = {
    "message_coop_noiseless": SweepPreset(
        "c_sr", 0.0, 2.0, 21, GaussianSpec(1.0, 1.0, 1.0, 0.0)
    ),
    "state_coop_noiseless": SweepPreset(
        "c_rs", 0.0, 2.0, 21, GaussianSpec(1.0, 1.0, 1.0, 0.0)
    ),
    "message_coop_noisy": SweepPreset(
        "gamma_db", -10.0, 20.0, 31, GaussianSpec(1.0, 1.0, 1.0, 1.0),
        "c_sr", (0.2, 0.4, 0.6, 0.8, 1.2),
    ),
    "state_coop_noisy": SweepPreset(
        "gamma_db", -10.0, 20.0, 31, GaussianSpec(1.0, 1.0, 1.0, 1.0),
        "c_rs", (0.0, 0.2, 0.4, 0.8, 100.0),
    ),
}


def noise_from_gamma(gamma_db):
    """N0 = 10^(-gamma/10), gamma in dB."""
    return 10.0 ** (-gamma_db / 10.0)


def _at(template, axis, value):
    if axis == "c_sr":
        return template.with_links(c_sr=value)
    if axis == "c_rs":
        return template.with_links(c_rs=value)
    return template.with_noise(noise_from_gamma(value))


def _check(axis, values, curves):
    if axis not in AXES:
        raise InvalidArgumentError(
            field="axis", message="{0!r} not one of {1}".format(axis, AXES)
        )
    unknown = [c for c in curves if c not in CURVES]
    if unknown or not curves:
        raise InvalidArgumentError(
            field="curves",
            message="{0} not a non-empty subset of {1}".format(
                list(curves), CURVES),
        )
    if not values or not all(math.isfinite(v) for v in values):
        raise InvalidArgumentError(
            field="values", message="need at least one finite value"
        )


def _inner_bounds(specs, axis, grid, threads):
    if axis in CONFERENCING_AXES:
        # warm start from the previous certificate
        results, seeds = [], ()
        for spec in specs:
            result = maximize_gaussian_inner_bound(spec, grid, seeds)
            results.append(result.rate)
            seeds = (result.argmax,)
        return results
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return [r.rate for r in pool.map(
                lambda s: maximize_gaussian_inner_bound(s, grid), specs)]
    return [maximize_gaussian_inner_bound(s, grid).rate for s in specs]


REFERENCE_CURVES = {
    "no_si": no_si_rate,
    "cutset": gaussian_cutset_bound,
    "full_coop": full_coop_bound,
    "no_coop": no_coop_reference,
}


def sweep(template, axis, values, curves=CURVES, grid=None, threads=1):
    """Evaluate ``curves`` at each value of ``axis``.

    ``gamma_db`` sets N0 = 10^(-gamma/10); the conferencing axes set the
    link capacity of ``template``.
    """
    values = [float(v) for v in values]
    curves = tuple(curves)
    _check(axis, values, curves)
    specs = [_at(template, axis, v) for v in values]

    columns = {}
    if "inner_bound" in curves:
        columns["inner_bound"] = _inner_bounds(specs, axis, grid, threads)
    for name in curves:
        if name in REFERENCE_CURVES:
            columns[name] = [REFERENCE_CURVES[name](s) for s in specs]

    rows = tuple(
        (value,) + tuple(float(columns[c][i]) for c in curves)
        for i, value in enumerate(values)
    )
    sweep_logger.info("swept %s over %d values", axis, len(values))
    return SweepTable(axis, curves, rows)


def preset_sweep(name, steps=None, curves=CURVES, grid=None, threads=1):
    """Run a named preset; family presets get one column per family value,
    named ``curve[field=value]``.
    """
    try:
        preset = PRESETS[name]
    except KeyError:
        raise InvalidArgumentError(
            field="preset", message="{0!r} not one of {1}".format(
                name, sorted(PRESETS))
        )
    values = preset.axis_values(steps)
    if not preset.family_field:
        return sweep(preset.template, preset.axis, values, curves, grid,
                     threads)

    columns, blocks = [], []
    for family in preset.family_values:
        template = preset.template.with_links(
            **{preset.family_field: family}
        )
        table = sweep(template, preset.axis, values, curves, grid, threads)
        columns.extend(
            "{0}[{1}={2:g}]".format(c, preset.family_field, family)
            for c in table.columns
        )
        blocks.append(table.rows)
    rows = tuple(
        (values[i],) + tuple(v for block in blocks for v in block[i][1:])
        for i in range(len(values))
    )
    return SweepTable(preset.axis, tuple(columns), rows)
