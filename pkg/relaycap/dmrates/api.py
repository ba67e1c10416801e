# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Achievable rates, cut-set bound and capacities of DM relay channels.

All rates are in bits per channel use. Every maximization returns a
:class:`~relaycap.dmrates.models.RateResult` whose ``argmax`` reproduces
``rate`` through :func:`certificate_rate`.
"""

import logging
import warnings

import numpy as np

from relaycap import config
from relaycap.dmrates.blahut_arimoto import blahut_arimoto
from relaycap.dmrates.models import InnerDistribution, RateResult, \
    SearchConfig
from relaycap.dmrates.optimizer import Block, LinearCost, SimplexSearch
from relaycap.errors import InfeasibleError, InvalidArgumentError, \
    PreconditionError, PreconditionWarning
from relaycap.probcore import JointPmf, VariableId, assemble_joint, \
    conditional_entropy, conditional_mutual_information

rates_logger = logging.getLogger("relaycap.dmrates")

INNER = "inner"
CUTSET = "cutset"
NO_COOP = "no_coop"
MESSAGE = "message"
STATE_COOP_ONLY = "state_coop_only"
STATE_COOP = "state_coop"
NO_SI = "no_si"


def _onehot(index, size):
    row = np.zeros(size)
    row[index] = 1.0
    return row


def _result(kind, terms, argmax, trace=None):
    terms = tuple(float(t) for t in terms)
    binding = int(np.argmin(terms))
    kwargs = {} if trace is None else {"optimizer_trace": trace}
    return RateResult(
        rate=max(0.0, terms[binding]),
        argmax=argmax,
        binding_term=binding + 1,
        kind=kind,
        terms=terms,
        **kwargs
    )


###############################################################################
# Joint distributions
###############################################################################
def _input_joint(spec, p_joint):
    """Joint pmf over (S, X, XR, Y) for an input pmf p(x, x_r)."""
    probs = np.einsum(
        "s,xr,sxry->sxry", spec.state_pmf, p_joint, spec.kernel
    )
    variables = (
        VariableId("S", spec.card_s),
        VariableId("X", spec.card_x),
        VariableId("XR", spec.card_xr),
        VariableId("Y", spec.card_y),
    )
    return JointPmf(
        variables, probs, tolerance=3 * config.STOCHASTIC_TOLERANCE
    )


def _state_coop_joint(spec, p_joint, p_v):
    """Joint pmf over (V, S, X, XR, Y) for p(x, x_r) and p(v|s, x_r)."""
    probs = np.einsum(
        "s,srv,xr,sxry->vsxry", spec.state_pmf, p_v, p_joint, spec.kernel
    )
    variables = (
        VariableId("V", p_v.shape[2]),
        VariableId("S", spec.card_s),
        VariableId("X", spec.card_x),
        VariableId("XR", spec.card_xr),
        VariableId("Y", spec.card_y),
    )
    return JointPmf(
        variables, probs, tolerance=4 * config.STOCHASTIC_TOLERANCE
    )


###############################################################################
# Search set-up
###############################################################################
def _joint_block(spec):
    return Block("p_x_xr", 1, spec.card_x * spec.card_xr)


def _joint_from_row(spec, row):
    return np.asarray(row, dtype=float).reshape(spec.card_x, spec.card_xr)


def _joint_costs(spec, block=0):
    """Cost constraints on a flattened p(x, x_r) block."""
    constraints = []
    anchor_x = spec.cost_x.cheapest if spec.cost_x else 0
    anchor_xr = spec.cost_xr.cheapest if spec.cost_xr else 0
    anchor = _onehot(anchor_x * spec.card_xr + anchor_xr,
                     spec.card_x * spec.card_xr)
    if spec.cost_x is not None:
        constraints.append(LinearCost(
            "cost_x", block,
            lambda point, c=np.repeat(spec.cost_x.costs, spec.card_xr):
                float(point[block][0] @ c),
            spec.cost_x.budget, anchor,
        ))
    if spec.cost_xr is not None:
        constraints.append(LinearCost(
            "cost_xr", block,
            lambda point, c=np.tile(spec.cost_xr.costs, spec.card_x):
                float(point[block][0] @ c),
            spec.cost_xr.budget, anchor,
        ))
    return constraints


def _inner_blocks(spec, card_u, card_v):
    return [
        Block("p_u", 1, card_u),
        Block("p_x_given_u", card_u, spec.card_x),
        Block("p_xr_given_u", card_u, spec.card_xr),
        Block("p_v_given_sxru", spec.card_s * spec.card_xr * card_u, card_v),
    ]


def _inner_from_point(spec, point):
    card_u, card_v = point[0].shape[1], point[3].shape[1]
    return InnerDistribution(
        point[0][0],
        point[1],
        point[2],
        point[3].reshape(spec.card_s, spec.card_xr, card_u, card_v),
    )


def _inner_to_point(inner):
    return [
        inner.p_u[np.newaxis, :],
        np.array(inner.p_x_given_u),
        np.array(inner.p_xr_given_u),
        inner.p_v_given_sxru.reshape(-1, inner.card_v),
    ]


def _inner_costs(spec):
    constraints = []
    for name, block, cost in (("cost_x", 1, spec.cost_x),
                              ("cost_xr", 2, spec.cost_xr)):
        if cost is None:
            continue
        constraints.append(LinearCost(
            name, block,
            lambda point, b=block, c=cost.costs: float(
                point[0][0] @ point[b] @ c),
            cost.budget,
            _onehot(cost.cheapest, cost.costs.shape[0]),
        ))
    return constraints


def _check_cardinality(value, name):
    if int(value) != value or value < 1:
        raise InvalidArgumentError(
            field=name, message="{0!r} must be a positive integer".format(
                value)
        )


###############################################################################
# Inner bound
###############################################################################
def inner_bound_terms(spec, inner):
    """The three expressions whose minimum is the achievable rate.

    t1 = I(X; Y | X_R, V, U) + C_SR
    t2 = I(X, X_R, V; Y) - I(V; S | X_R, U)
    t3 = I(X, X_R, V; Y | U) + C_SR + C_RS - I(V; S | X_R, U)
    """
    pmf = assemble_joint(spec, inner)
    cmi = conditional_mutual_information
    state_cost = cmi(pmf, {"V"}, {"S"}, {"XR", "U"})
    t1 = cmi(pmf, {"X"}, {"Y"}, {"XR", "V", "U"}) + spec.c_sr
    t2 = cmi(pmf, {"X", "XR", "V"}, {"Y"}) - state_cost
    t3 = (
        cmi(pmf, {"X", "XR", "V"}, {"Y"}, {"U"})
        + spec.c_sr + spec.c_rs - state_cost
    )
    return t1, t2, t3


def default_inner_distribution(spec, card_u=1, card_v=1):
    """Uniform factors, pulled towards the cheapest inputs to meet costs."""
    _check_cardinality(card_u, "card_u")
    _check_cardinality(card_v, "card_v")
    search = SimplexSearch(
        _inner_blocks(spec, card_u, card_v),
        lambda point: 0.0,
        _inner_costs(spec),
        SearchConfig(restarts=1, ascents=1),
    )
    return _inner_from_point(spec, search.starting_points()[0])


def _inner_seeds(spec, card_u, card_v):
    """Constant V and, when it fits, V = S with uniform inputs."""
    seeds = []
    uniform = [
        np.full((1, card_u), 1.0 / card_u),
        np.full((card_u, spec.card_x), 1.0 / spec.card_x),
        np.full((card_u, spec.card_xr), 1.0 / spec.card_xr),
    ]
    if card_v >= spec.card_s:
        p_v = np.zeros((spec.card_s, spec.card_xr, card_u, card_v))
        for s in range(spec.card_s):
            p_v[s, :, :, s] = 1.0
        seeds.append(uniform + [p_v.reshape(-1, card_v)])
    constant = np.zeros((spec.card_s * spec.card_xr * card_u, card_v))
    constant[:, 0] = 1.0
    seeds.append(uniform + [constant])
    return seeds


def default_cardinalities(spec, card_u=None, card_v=None):
    """(|U|, |V|) with unset values filled in.

    |V| defaults to |S| + 1. |U| defaults to 2 when a conferencing link is
    used and to 1 otherwise; without links U only time-shares the inputs.
    """
    if card_u is None:
        card_u = 2 if spec.c_sr > 0 or spec.c_rs > 0 else 1
    if card_v is None:
        card_v = spec.card_s + 1
    _check_cardinality(card_u, "card_u")
    _check_cardinality(card_v, "card_v")
    return card_u, card_v


def maximize_inner_bound(spec, card_u=None, card_v=None, search=None,
                         seeds=()):
    """Maximize min(t1, t2, t3) over the distributions of the scheme.

    Unset cardinalities follow :func:`default_cardinalities`. ``seeds`` are
    extra :class:`InnerDistribution` starting points. The result is clamped
    at 0.
    """
    card_u, card_v = default_cardinalities(spec, card_u, card_v)

    def objective(point):
        return min(inner_bound_terms(spec, _inner_from_point(spec, point)))

    starts = [_inner_to_point(s) for s in seeds]
    starts.extend(_inner_seeds(spec, card_u, card_v))
    point, _, trace = SimplexSearch(
        _inner_blocks(spec, card_u, card_v),
        objective,
        _inner_costs(spec),
        search,
        seeds=starts,
    ).run()
    inner = _inner_from_point(spec, point)
    result = _result(INNER, inner_bound_terms(spec, inner), inner, trace)
    rates_logger.info(
        "inner bound %.6f (|U|=%d, |V|=%d, binding t%d)",
        result.rate, card_u, card_v, result.binding_term,
    )
    return result


def relay_ignores_state_rate(spec, card_u=None, search=None):
    """Achievable rate when V is constant: message cooperation only."""
    return maximize_inner_bound(spec, card_u=card_u, card_v=1, search=search)


###############################################################################
# Cut-set bound
###############################################################################
def cutset_terms(spec, p_joint):
    """(I(X, X_R; Y), I(X; Y | X_R, S) + C_SR) for input p(x, x_r)."""
    pmf = _input_joint(spec, p_joint)
    return (
        conditional_mutual_information(pmf, {"X", "XR"}, {"Y"}),
        conditional_mutual_information(pmf, {"X"}, {"Y"}, {"XR", "S"})
        + spec.c_sr,
    )


def cutset_bound(spec, search=None):
    """Maximize the cut-set expression over joint inputs p(x, x_r)."""
    def objective(point):
        return min(cutset_terms(spec, _joint_from_row(spec, point[0][0])))

    point, _, trace = SimplexSearch(
        [_joint_block(spec)], objective, _joint_costs(spec), search
    ).run()
    p_joint = _joint_from_row(spec, point[0][0])
    return _result(CUTSET, cutset_terms(spec, p_joint), p_joint, trace)


###############################################################################
# Special cases
###############################################################################
def check_prop3_conditions(spec):
    """Structural tests of the two determinism conditions.

    ``cond15``: every kernel row p(.|s, x, x_r) is a point mass, i.e.
    H(Y | X, X_R, S) = 0. ``cond16``: for every (x, x_r) the output
    supports of distinct states with p(s) > 0 are disjoint, i.e.
    H(S | X, X_R, Y) = 0. Both hold for every input distribution.
    """
    tol = config.STOCHASTIC_TOLERANCE
    kernel = spec.kernel
    cond15 = bool(np.all(np.isclose(kernel.max(axis=-1), 1.0, rtol=0.0,
                                    atol=tol)))
    support = kernel > tol
    states = np.flatnonzero(spec.state_pmf > 0)
    cond16 = True
    for x in range(spec.card_x):
        for xr in range(spec.card_xr):
            hits = support[states, x, xr, :].sum(axis=0)
            if np.any(hits > 1):
                cond16 = False
    return cond15, cond16


def _require_determinism(spec):
    cond15, cond16 = check_prop3_conditions(spec)
    if not cond15:
        raise PreconditionError(
            condition="Eq. 15",
            message="Eq. 15 violated: the output is not a deterministic "
            "function of (s, x, x_r)",
        )
    if not cond16:
        raise PreconditionError(
            condition="Eq. 16",
            message="Eq. 16 violated: the state is not determined by "
            "(x, x_r, y)",
        )


def _require_no_source_link(spec):
    if spec.c_sr != 0:
        raise PreconditionError(
            condition="C_SR = 0",
            message="state cooperation only needs c_sr = 0, got "
            "{0}".format(spec.c_sr),
        )


def no_coop_terms(spec, p_x, p_xr):
    """(H(Y | X_R, S), I(X, X_R; Y)) for product inputs."""
    pmf = _input_joint(spec, np.outer(p_x, p_xr))
    return (
        conditional_entropy(pmf, {"Y"}, {"XR", "S"}),
        conditional_mutual_information(pmf, {"X", "XR"}, {"Y"}),
    )


def capacity_no_coop(spec, search=None):
    """Capacity without conferencing for deterministic, state-revealing
    channels: max over p(x)p(x_r) of min(H(Y|X_R,S), I(X,X_R;Y)).
    """
    _require_determinism(spec)
    if spec.c_sr != 0 or spec.c_rs != 0:
        message = ("conferencing links are not used; the value is a "
                   "capacity only when c_sr = c_rs = 0")
        warnings.warn(message, PreconditionWarning)
        rates_logger.warning(message)

    blocks = [Block("p_x", 1, spec.card_x), Block("p_xr", 1, spec.card_xr)]
    constraints = []
    for name, block, cost in (("cost_x", 0, spec.cost_x),
                              ("cost_xr", 1, spec.cost_xr)):
        if cost is not None:
            constraints.append(LinearCost(
                name, block,
                lambda point, b=block, c=cost.costs: float(point[b][0] @ c),
                cost.budget,
                _onehot(cost.cheapest, cost.costs.shape[0]),
            ))

    def objective(point):
        return min(no_coop_terms(spec, point[0][0], point[1][0]))

    point, _, trace = SimplexSearch(
        blocks, objective, constraints, search
    ).run()
    argmax = (np.array(point[0][0]), np.array(point[1][0]))
    return _result(NO_COOP, no_coop_terms(spec, *argmax), argmax, trace)


def message_term(spec, p_joint):
    """I(X, X_R; Y) for input p(x, x_r)."""
    pmf = _input_joint(spec, p_joint)
    return conditional_mutual_information(pmf, {"X", "XR"}, {"Y"})


def capacity_full_message_coop(spec, search=None):
    """max I(X, X_R; Y) over joint inputs, and the C_SR it requires.

    The value is the capacity whenever ``spec.c_sr`` reaches the returned
    threshold, whatever ``c_rs``.
    """
    if spec.cost_x is None and spec.cost_xr is None:
        channel = spec.averaged_kernel.reshape(-1, spec.card_y)
        _, p = blahut_arimoto(channel)
        p_joint = _joint_from_row(spec, p)
        trace = None
    else:
        def objective(point):
            return message_term(spec, _joint_from_row(spec, point[0][0]))

        point, _, trace = SimplexSearch(
            [_joint_block(spec)], objective, _joint_costs(spec), search
        ).run()
        p_joint = _joint_from_row(spec, point[0][0])
    result = _result(MESSAGE, (message_term(spec, p_joint),), p_joint, trace)
    if spec.c_sr < result.rate:
        rates_logger.info(
            "c_sr = %.4f is below the %.4f needed for capacity",
            spec.c_sr, result.rate,
        )
    return result, result.rate


def state_coop_terms(spec, p_joint, p_v):
    """(I(X; Y | X_R, V), I(X, X_R, V; Y) - I(V; S | X_R)).

    ``p_v`` is p(v|s, x_r) indexed ``[s][x_r][v]``.
    """
    pmf = _state_coop_joint(spec, p_joint, p_v)
    cmi = conditional_mutual_information
    return (
        cmi(pmf, {"X"}, {"Y"}, {"XR", "V"}),
        cmi(pmf, {"X", "XR", "V"}, {"Y"}) - cmi(pmf, {"V"}, {"S"}, {"XR"}),
    )


def relay_output_term(spec, p_joint):
    """I(X_R; Y) for input p(x, x_r)."""
    pmf = _input_joint(spec, p_joint)
    return conditional_mutual_information(pmf, {"XR"}, {"Y"})


def max_relay_output(spec, search=None):
    """max over joint inputs of I(X_R; Y), the relay link C_RS needed for
    state cooperation to reach capacity.
    """
    def objective(point):
        return relay_output_term(spec, _joint_from_row(spec, point[0][0]))

    point, _, _ = SimplexSearch(
        [_joint_block(spec)], objective, _joint_costs(spec), search
    ).run()
    return max(0.0, relay_output_term(
        spec, _joint_from_row(spec, point[0][0])))


def rate_state_coop_only(spec, card_v=None, search=None):
    """Rate with state cooperation only, and the C_RS it requires."""
    _require_no_source_link(spec)
    card_v = spec.card_s + 1 if card_v is None else card_v
    _check_cardinality(card_v, "card_v")
    blocks = [
        _joint_block(spec),
        Block("p_v_given_sxr", spec.card_s * spec.card_xr, card_v),
    ]

    def split(point):
        return (
            _joint_from_row(spec, point[0][0]),
            point[1].reshape(spec.card_s, spec.card_xr, card_v),
        )

    def objective(point):
        return min(state_coop_terms(spec, *split(point)))

    uniform = np.full((1, spec.card_x * spec.card_xr),
                      1.0 / (spec.card_x * spec.card_xr))
    seeds = []
    if card_v >= spec.card_s:
        p_v = np.zeros((spec.card_s, spec.card_xr, card_v))
        for s in range(spec.card_s):
            p_v[s, :, s] = 1.0
        seeds.append([uniform, p_v.reshape(-1, card_v)])

    point, _, trace = SimplexSearch(
        blocks, objective, _joint_costs(spec), search, seeds=seeds
    ).run()
    argmax = split(point)
    result = _result(
        STATE_COOP_ONLY, state_coop_terms(spec, *argmax), argmax, trace
    )

    return result, max_relay_output(spec, search)


def capacity_state_coop(spec, search=None):
    """max over joint p(x, x_r) of min(H(Y|X_R,S), I(X,X_R;Y))."""
    _require_determinism(spec)
    _require_no_source_link(spec)

    def objective(point):
        return min(state_capacity_terms(
            spec, _joint_from_row(spec, point[0][0])))

    point, _, trace = SimplexSearch(
        [_joint_block(spec)], objective, _joint_costs(spec), search
    ).run()
    p_joint = _joint_from_row(spec, point[0][0])
    return _result(
        STATE_COOP, state_capacity_terms(spec, p_joint), p_joint, trace
    )


def state_capacity_terms(spec, p_joint):
    """(H(Y | X_R, S), I(X, X_R; Y)) for joint inputs."""
    pmf = _input_joint(spec, p_joint)
    return (
        conditional_entropy(pmf, {"Y"}, {"XR", "S"}),
        conditional_mutual_information(pmf, {"X", "XR"}, {"Y"}),
    )


def no_si_term(spec, p_x, x_r):
    """I(X; Y | X_R = x_r) for source input p(x)."""
    channel = spec.averaged_kernel[:, x_r, :]
    probs = np.asarray(p_x, dtype=float)[:, np.newaxis] * channel
    pmf = JointPmf(
        (VariableId("X", spec.card_x), VariableId("Y", spec.card_y)),
        probs,
        tolerance=2 * config.STOCHASTIC_TOLERANCE,
    )
    return conditional_mutual_information(pmf, {"X"}, {"Y"})


def no_si_baseline(spec, search=None):
    """Best rate when the relay ignores its state and sends a fixed symbol.

    max over cost-feasible p(x) and relay symbols x_r of I(X; Y | X_R = x_r).
    """
    relay_symbols = range(spec.card_xr)
    if spec.cost_xr is not None:
        relay_symbols = [
            xr for xr in relay_symbols
            if spec.cost_xr.costs[xr]
            <= spec.cost_xr.budget + config.COST_TOLERANCE
        ]
        if not relay_symbols:
            raise InfeasibleError(
                field="cost_xr", message="no relay symbol meets the budget"
            )
    costs = spec.cost_x.costs if spec.cost_x else None
    budget = spec.cost_x.budget if spec.cost_x else None

    best = None
    for x_r in relay_symbols:
        _, p_x = blahut_arimoto(
            spec.averaged_kernel[:, x_r, :], costs=costs, budget=budget
        )
        value = no_si_term(spec, p_x, x_r)
        if best is None or value > best[0] + config.TIE_TOLERANCE:
            best = (value, p_x, x_r)
    value, p_x, x_r = best
    return _result(NO_SI, (value,), {"p_x": p_x, "x_r": int(x_r)})


def cooperation_regime(spec):
    """Name the conferencing special case: none, message, state or both."""
    if spec.c_sr == 0 and spec.c_rs == 0:
        return "none"
    if spec.c_rs == 0:
        return "message"
    if spec.c_sr == 0:
        return "state"
    return "both"


def certificate_terms(spec, result):
    """Re-evaluate the min-terms of a result at its certificate."""
    argmax = result.argmax
    if result.kind == INNER:
        return inner_bound_terms(spec, argmax)
    if result.kind == CUTSET:
        return cutset_terms(spec, argmax)
    if result.kind == NO_COOP:
        return no_coop_terms(spec, *argmax)
    if result.kind == MESSAGE:
        return (message_term(spec, argmax),)
    if result.kind == STATE_COOP_ONLY:
        return state_coop_terms(spec, *argmax)
    if result.kind == STATE_COOP:
        return state_capacity_terms(spec, argmax)
    if result.kind == NO_SI:
        return (no_si_term(spec, argmax["p_x"], argmax["x_r"]),)
    raise InvalidArgumentError(
        field="kind", message="unknown result kind {0!r}".format(result.kind)
    )


def certificate_rate(spec, result):
    """Rate reproduced from a result's certificate."""
    return max(0.0, min(certificate_terms(spec, result)))
