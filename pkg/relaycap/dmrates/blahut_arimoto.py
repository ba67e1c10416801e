# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Capacity of a single-input discrete channel."""

import logging

import numpy as np

from relaycap import config
from relaycap.errors import InfeasibleError
from relaycap.probcore import check_stochastic

optimizer_logger = logging.getLogger("relaycap.optimizer")


def _divergences(channel, p):
    """D(W(.|x) || q) in nats for every input x, q the output pmf."""
    q = np.maximum(p @ channel, 1e-300)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(channel > 0, channel / q[np.newaxis, :], 1.0)
        return np.sum(np.where(channel > 0, channel * np.log(ratio), 0.0),
                      axis=1)


def _iterate(channel, costs, multiplier, thresh, max_iter):
    m = channel.shape[0]
    p = np.full(m, 1.0 / m)
    for _ in range(int(max_iter)):
        d = _divergences(channel, p) - multiplier * costs
        r = p * np.exp(d - d.max())
        r = r / r.sum()
        if np.max(np.abs(r - p)) < thresh:
            return r
        p = r
    return p


def mutual_information_bits(channel, p):
    """I(X; Y) in bits for input pmf ``p`` on ``channel[x][y]``."""
    return float(np.dot(p, _divergences(channel, p)) / np.log(2.0))


def blahut_arimoto(channel, costs=None, budget=None, thresh=1e-12,
                   max_iter=20000):
    """Maximize I(X; Y) over input pmfs, optionally with E[cost] <= budget.

    ``channel`` is a stochastic matrix indexed ``[x][y]``. With a budget,
    a Lagrange multiplier on the cost is bisected until the expected cost
    of the iterated input meets the budget from below.

    Returns ``(capacity in bits, input pmf)``.
    """
    channel = check_stochastic(channel, "channel")
    m = channel.shape[0]
    costs = np.zeros(m) if costs is None else np.asarray(costs, dtype=float)
    if budget is not None and costs.min() > budget + config.COST_TOLERANCE:
        raise InfeasibleError(
            field="budget",
            message="{0} is below the cheapest symbol".format(budget),
        )

    p = _iterate(channel, costs, 0.0, thresh, max_iter)
    if budget is not None and np.dot(p, costs) > budget:
        low, high = 0.0, 1.0
        while np.dot(_iterate(channel, costs, high, thresh, max_iter),
                     costs) > budget:
            high *= 2.0
            if high > 1e12:
                break
        for _ in range(60):
            mid = 0.5 * (low + high)
            if np.dot(_iterate(channel, costs, mid, thresh, max_iter),
                      costs) > budget:
                low = mid
            else:
                high = mid
            if high - low < 1e-10 * max(1.0, high):
                break
        p = _iterate(channel, costs, high, thresh, max_iter)
        if np.dot(p, costs) > budget + config.COST_TOLERANCE:
            # flat cost directions: fall back to the cheapest symbol mix
            cheapest = np.zeros(m)
            cheapest[int(np.argmin(costs))] = 1.0
            excess = np.dot(p, costs) - budget
            t = excess / (excess - (np.dot(cheapest, costs) - budget))
            p = (1.0 - t) * p + t * cheapest
    capacity = max(0.0, mutual_information_bits(channel, p))
    optimizer_logger.debug("Blahut-Arimoto capacity %.6f", capacity)
    return capacity, p
