# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Discrete memoryless relay channel models."""

from dataclasses import dataclass, field
from typing import Any, Optional, Tuple

import numpy as np

from relaycap import config
from relaycap.errors import InvalidArgumentError
from relaycap.probcore import check_stochastic


def _frozen(array):
    array = np.array(array, dtype=float)
    array.setflags(write=False)
    return array


def _check_capacity(value, name):
    if not np.isfinite(value) or value < 0:
        raise InvalidArgumentError(
            field=name, message="{0!r} is not a finite value >= 0".format(
                value)
        )


@dataclass(frozen=True)
class CostConstraint:
    """Per-symbol input cost and its budget on the expected cost."""

    costs: np.ndarray
    budget: float

    def __post_init__(self):
        """Validate the cost vector and the budget."""
        costs = _frozen(self.costs)
        if costs.ndim != 1 or not np.all(np.isfinite(costs)):
            raise InvalidArgumentError(
                field="costs", message="must be a finite 1-d array"
            )
        if not np.isfinite(self.budget) or self.budget < 0:
            raise InvalidArgumentError(
                field="budget", message="{0!r} must be >= 0".format(
                    self.budget)
            )
        object.__setattr__(self, "costs", costs)
        object.__setattr__(self, "budget", float(self.budget))

    def expected(self, pmf):
        """Expected cost under a pmf over the input alphabet."""
        return float(np.dot(pmf, self.costs))

    def is_feasible(self, pmf):
        """Return True if the expected cost is within budget."""
        return self.expected(pmf) <= self.budget + config.COST_TOLERANCE

    @property
    def cheapest(self):
        """Index of the least costly symbol."""
        return int(np.argmin(self.costs))

    @property
    def satisfiable(self):
        """Return True if some input pmf meets the budget."""
        return self.costs.min() <= self.budget + config.COST_TOLERANCE


@dataclass(frozen=True)
class DmChannelSpec:
    """State-dependent relay channel with conferencing links.

    ``kernel`` is indexed ``[s][x][x_r][y]``.
    """

    state_pmf: np.ndarray
    kernel: np.ndarray
    c_sr: float = 0.0
    c_rs: float = 0.0
    cost_x: Optional[CostConstraint] = None
    cost_xr: Optional[CostConstraint] = None

    kind = "dm"

    def __post_init__(self):
        """Validate alphabets, kernel rows and link capacities."""
        state_pmf = _frozen(self.state_pmf)
        kernel = _frozen(self.kernel)
        if state_pmf.ndim != 1:
            raise InvalidArgumentError(
                field="state_pmf", message="must be a 1-d array"
            )
        if kernel.ndim != 4 or kernel.shape[0] != state_pmf.shape[0]:
            raise InvalidArgumentError(
                field="kernel",
                message="shape {0} is not [|S|={1}][|X|][|X_R|][|Y|]".format(
                    kernel.shape, state_pmf.shape[0]
                ),
            )
        check_stochastic(state_pmf, "state_pmf")
        check_stochastic(kernel, "kernel")
        _check_capacity(self.c_sr, "c_sr")
        _check_capacity(self.c_rs, "c_rs")
        for name, size in (("cost_x", kernel.shape[1]),
                           ("cost_xr", kernel.shape[2])):
            cost = getattr(self, name)
            if cost is not None and cost.costs.shape != (size,):
                raise InvalidArgumentError(
                    field=name,
                    message="{0} costs for an alphabet of {1}".format(
                        cost.costs.shape[0], size
                    ),
                )
        object.__setattr__(self, "state_pmf", state_pmf)
        object.__setattr__(self, "kernel", kernel)
        object.__setattr__(self, "c_sr", float(self.c_sr))
        object.__setattr__(self, "c_rs", float(self.c_rs))

    @property
    def card_s(self):
        """State alphabet size."""
        return self.kernel.shape[0]

    @property
    def card_x(self):
        """Source input alphabet size."""
        return self.kernel.shape[1]

    @property
    def card_xr(self):
        """Relay input alphabet size."""
        return self.kernel.shape[2]

    @property
    def card_y(self):
        """Output alphabet size."""
        return self.kernel.shape[3]

    @property
    def averaged_kernel(self):
        """State-averaged channel p(y|x,x_r), indexed ``[x][x_r][y]``."""
        return np.einsum("s,sxry->xry", self.state_pmf, self.kernel)

    def with_links(self, c_sr=None, c_rs=None):
        """Return a copy with other conferencing capacities."""
        return DmChannelSpec(
            self.state_pmf,
            self.kernel,
            self.c_sr if c_sr is None else c_sr,
            self.c_rs if c_rs is None else c_rs,
            self.cost_x,
            self.cost_xr,
        )

    def without_costs(self):
        """Return a copy without input cost constraints."""
        return DmChannelSpec(
            self.state_pmf, self.kernel, self.c_sr, self.c_rs
        )


@dataclass(frozen=True)
class InnerDistribution:
    """Free factors p(u), p(x|u), p(x_r|u), p(v|s,x_r,u) of the scheme.

    ``p_v_given_sxru`` is indexed ``[s][x_r][u][v]``.
    """

    p_u: np.ndarray
    p_x_given_u: np.ndarray
    p_xr_given_u: np.ndarray
    p_v_given_sxru: np.ndarray

    def __post_init__(self):
        """Validate shapes and stochastic rows."""
        for name in ("p_u", "p_x_given_u", "p_xr_given_u", "p_v_given_sxru"):
            value = check_stochastic(getattr(self, name), name)
            object.__setattr__(self, name, _frozen(value))
        card_u = self.p_u.shape[0]
        if (
            self.p_u.ndim != 1
            or self.p_x_given_u.ndim != 2
            or self.p_xr_given_u.ndim != 2
            or self.p_v_given_sxru.ndim != 4
            or self.p_x_given_u.shape[0] != card_u
            or self.p_xr_given_u.shape[0] != card_u
            or self.p_v_given_sxru.shape[2] != card_u
        ):
            raise InvalidArgumentError(
                field="inner",
                message="factor shapes disagree on |U| = {0}".format(card_u),
            )

    @property
    def card_u(self):
        """Cardinality of the cooperative codeword U."""
        return self.p_u.shape[0]

    @property
    def card_v(self):
        """Cardinality of the state description V."""
        return self.p_v_given_sxru.shape[3]

    @classmethod
    def degenerate(cls, p_x, p_xr, card_s):
        """Return the distribution with |U| = |V| = 1."""
        p_x = np.asarray(p_x, dtype=float)
        p_xr = np.asarray(p_xr, dtype=float)
        return cls(
            np.ones(1),
            p_x[np.newaxis, :],
            p_xr[np.newaxis, :],
            np.ones((card_s, p_xr.shape[0], 1, 1)),
        )

    @classmethod
    def state_copy(cls, p_x, p_xr, card_s):
        """Return |U| = 1 with V = S."""
        p_x = np.asarray(p_x, dtype=float)
        p_xr = np.asarray(p_xr, dtype=float)
        p_v = np.zeros((card_s, p_xr.shape[0], 1, card_s))
        for s in range(card_s):
            p_v[s, :, 0, s] = 1.0
        return cls(np.ones(1), p_x[np.newaxis, :], p_xr[np.newaxis, :], p_v)


@dataclass(frozen=True)
class OptimizerTrace:
    """Evaluation count and best-so-far history of a search."""

    evaluations: int = 0
    history: Tuple[Tuple[int, float], ...] = ()


@dataclass(frozen=True)
class RateResult:
    """An optimized rate, its certificate and the binding min-term.

    ``binding_term`` is 1-based: 1 is the first expression of the min.
    ``kind`` names the objective, so the certificate can be re-evaluated.
    """

    rate: float
    argmax: Any
    binding_term: int
    kind: str
    terms: Tuple[float, ...] = ()
    optimizer_trace: OptimizerTrace = field(default_factory=OptimizerTrace)

    def __post_init__(self):
        """Validate the rate and the binding index."""
        if self.rate < 0:
            raise InvalidArgumentError(
                field="rate", message="{0!r} < 0".format(self.rate)
            )
        if self.terms and not 1 <= self.binding_term <= len(self.terms):
            raise InvalidArgumentError(
                field="binding_term",
                message="{0} not in 1..{1}".format(
                    self.binding_term, len(self.terms)
                ),
            )


@dataclass(frozen=True)
class SearchConfig:
    """Multi-start coordinate ascent settings."""

    restarts: int = config.RELAYCAP_SEARCH_RESTARTS
    ascents: int = 16
    initial_step: float = config.RELAYCAP_SEARCH_INITIAL_STEP
    min_step: float = config.RELAYCAP_SEARCH_MIN_STEP
    seed: int = config.RELAYCAP_SEED
    threads: int = config.RELAYCAP_THREADS

    def __post_init__(self):
        """Validate the settings."""
        if self.restarts < 1 or self.ascents < 1 or self.threads < 1:
            raise InvalidArgumentError(
                field="search",
                message="restarts, ascents and threads must be >= 1",
            )
        if not 0 < self.min_step <= self.initial_step:
            raise InvalidArgumentError(
                field="search", message="need 0 < min_step <= initial_step"
            )
