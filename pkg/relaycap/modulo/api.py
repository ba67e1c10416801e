# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Binary modulo-additive relay channel Y = X xor X_R xor S."""

import math
from dataclasses import dataclass

import numpy as np

from relaycap.dmrates import CostConstraint, DmChannelSpec
from relaycap.errors import InvalidArgumentError
from relaycap.probcore import binary_convolve, binary_entropy


@dataclass(frozen=True)
class BinaryModuloParams:
    """Input cost budgets ``p``, ``p_r`` and state parameter ``p_s``.

    Budgets bound the expected number of ones sent by the source and the
    relay; they are capped at 1/2 since the entropy terms are maximal
    there.
    """

    p: float
    p_r: float
    p_s: float

    kind = "binary_modulo"

    def __post_init__(self):
        """Validate the ranges."""
        for name, upper in (("p", 0.5), ("p_r", 0.5), ("p_s", 1.0)):
            value = getattr(self, name)
            if math.isnan(value) or not 0.0 <= value <= upper:
                raise InvalidArgumentError(
                    field=name,
                    message="{0!r} is not in [0, {1}]".format(value, upper),
                )
            object.__setattr__(self, name, float(value))


def build_channel(params):
    """Deterministic XOR channel with cost(x) = x and Bernoulli state."""
    kernel = np.zeros((2, 2, 2, 2))
    for s in range(2):
        for x in range(2):
            for xr in range(2):
                kernel[s, x, xr, x ^ xr ^ s] = 1.0
    return DmChannelSpec(
        state_pmf=np.array([1.0 - params.p_s, params.p_s]),
        kernel=kernel,
        cost_x=CostConstraint(np.array([0.0, 1.0]), params.p),
        cost_xr=CostConstraint(np.array([0.0, 1.0]), params.p_r),
    )


def capacity_terms(params):
    """(H_b(p), H_b(p * p_r * p_s) - H_b(p_s)), inputs on the budgets."""
    combined = binary_convolve(binary_convolve(params.p, params.p_r),
                               params.p_s)
    return (
        binary_entropy(params.p),
        binary_entropy(combined) - binary_entropy(params.p_s),
    )


def capacity_closed_form(params):
    """Capacity without conferencing, in bits per channel use."""
    return max(0.0, min(capacity_terms(params)))


def no_si_closed_form(params):
    """Rate when the relay ignores the state: H_b(p * p_s) - H_b(p_s)."""
    return max(
        0.0,
        binary_entropy(binary_convolve(params.p, params.p_s))
        - binary_entropy(params.p_s),
    )
