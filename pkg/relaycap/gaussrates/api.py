# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Rates and bounds of the Gaussian relay channel Y = X + X_R + S + Z.

The inner bound is evaluated for jointly Gaussian inputs
X = sqrt(alpha P) U + X', X_R = sqrt(beta P_R) U + X_R' and a state
description V = S + Q. Conditional mutual informations are log-det ratios
of Schur complements of the covariance of (U, X, X_R, S, V, Y).
"""

import logging
import math
import warnings

import numpy as np
from scipy import optimize

from relaycap import config
from relaycap.dmrates import OptimizerTrace, RateResult
from relaycap.errors import InvalidArgumentError, NumericDegeneracyError, \
    PreconditionWarning
from relaycap.gaussrates.models import CovarianceModel, GaussianParams, \
    GridConfig

gaussian_logger = logging.getLogger("relaycap.gaussrates")

GAUSSIAN_INNER = "gaussian_inner"

LOG10_PQ_BOUNDS = (-6.0, 6.0)


def shannon_c(x):
    """C(x) = 1/2 log2(1 + x); ``math.inf`` maps to ``math.inf``."""
    if math.isnan(x) or x < 0:
        raise InvalidArgumentError(
            field="x", message="{0!r} must be >= 0".format(x)
        )
    if math.isinf(x):
        return math.inf
    return 0.5 * math.log2(1.0 + x)


def build_covariance(spec, params):
    """Covariance of (U, X, X_R, S, V, Y) for the given power splits."""
    a = math.sqrt(params.alpha * spec.P)
    b = math.sqrt(params.beta * spec.P_R)
    # p_q = inf: V is a unit noise independent of everything
    constant_v = math.isinf(params.p_q)
    s_to_v = 0.0 if constant_v else 1.0
    # rows: U, X, X_R, S, V, Y over the sources U, X', X_R', S, Q, Z
    mixing = np.array([
        [1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [a, 1.0, 0.0, 0.0, 0.0, 0.0],
        [b, 0.0, 1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, s_to_v, 1.0, 0.0],
        [a + b, 1.0, 1.0, 1.0, 0.0, 1.0],
    ])
    sources = np.diag([
        1.0,
        (1.0 - params.alpha) * spec.P,
        (1.0 - params.beta) * spec.P_R,
        spec.P_S,
        1.0 if constant_v else params.p_q,
        spec.N0,
    ])
    matrix = mixing @ sources @ mixing.T
    return CovarianceModel(0.5 * (matrix + matrix.T))


def _normalized(matrix):
    """Rescale to unit variances; conditional log-det ratios are unchanged."""
    diag = np.diag(matrix)
    scale = np.where(diag > 0, 1.0 / np.sqrt(np.where(diag > 0, diag, 1.0)),
                     1.0)
    return matrix * scale[:, np.newaxis] * scale[np.newaxis, :]


def _conditional_determinant(matrix, targets, given):
    block = matrix[np.ix_(targets, targets)]
    if given:
        cross = matrix[np.ix_(targets, given)]
        inverse = np.linalg.pinv(matrix[np.ix_(given, given)], rcond=1e-12,
                                 hermitian=True)
        block = block - cross @ inverse @ cross.T
    return float(np.linalg.det(block))


def gaussian_cmi(model, a, b, c=(), term=None):
    """I(A; B | C) in bits for jointly Gaussian variables.

    Computed as 1/2 log2(det Cov(B | C) / det Cov(B | A, C)); ``B`` must
    keep a nonsingular conditional covariance given (A, C).
    """
    a, b, c = set(a), set(b), set(c)
    if a & b or a & c or b & c:
        raise InvalidArgumentError(
            field="targets", message="sets must be pairwise disjoint"
        )
    matrix = _normalized(model.matrix)
    targets = model.index(b)
    given = model.index(c)
    outer = _conditional_determinant(matrix, targets, given)
    inner = _conditional_determinant(matrix, targets, model.index(a | c))
    if inner < config.DETERMINANT_FLOOR or outer < config.DETERMINANT_FLOOR:
        raise NumericDegeneracyError(
            term=term or "I({0};{1}|{2})".format(
                ",".join(sorted(a)), ",".join(sorted(b)),
                ",".join(sorted(c))),
            message="conditional covariance is singular",
        )
    value = 0.5 * math.log2(outer / inner)
    if -config.MI_CLAMP_TOLERANCE <= value < 0:
        return 0.0
    return value


def gaussian_inner_bound(spec, params):
    """(t1, t2, t3, rate) of the inner bound at one parameter point."""
    model = build_covariance(spec, params)
    state_cost = gaussian_cmi(model, {"S"}, {"V"}, {"XR", "U"}, term="t2")
    t1 = gaussian_cmi(
        model, {"X"}, {"Y"}, {"XR", "V", "U"}, term="t1"
    ) + spec.c_sr
    t2 = gaussian_cmi(model, {"X", "XR", "V"}, {"Y"}, term="t2") - state_cost
    t3 = (
        gaussian_cmi(model, {"X", "XR", "V"}, {"Y"}, {"U"}, term="t3")
        + spec.c_sr + spec.c_rs - state_cost
    )
    return t1, t2, t3, max(0.0, min(t1, t2, t3))


def _closed_form_terms(spec, alpha, beta, p_q):
    """Vectorized analytic terms, broadcasting over the parameters."""
    alpha, beta, p_q = np.broadcast_arrays(
        np.asarray(alpha, dtype=float),
        np.asarray(beta, dtype=float),
        np.asarray(p_q, dtype=float),
    )
    residual = spec.N0 + spec.P_S / (1.0 + spec.P_S / p_q)
    state_cost = 0.5 * np.log2(1.0 + spec.P_S / p_q)
    t1 = 0.5 * np.log2(1.0 + (1.0 - alpha) * spec.P / residual) + spec.c_sr
    total = (spec.P + spec.P_R
             + 2.0 * np.sqrt(alpha * beta * spec.P * spec.P_R)
             + spec.P_S + spec.N0)
    t2 = 0.5 * np.log2(total / residual) - state_cost
    private = ((1.0 - alpha) * spec.P + (1.0 - beta) * spec.P_R
               + spec.P_S + spec.N0)
    t3 = (0.5 * np.log2(private / residual) + spec.c_sr + spec.c_rs
          - state_cost)
    return t1, t2, t3


def gaussian_inner_terms_closed_form(spec, params):
    """Analytic (t1, t2, t3), the reference of the log-det path."""
    return tuple(
        float(t) for t in _closed_form_terms(
            spec, params.alpha, params.beta, params.p_q)
    )


def _clip(x):
    alpha = min(1.0, max(0.0, float(x[0])))
    beta = min(1.0, max(0.0, float(x[1])))
    log_pq = min(LOG10_PQ_BOUNDS[1], max(LOG10_PQ_BOUNDS[0], float(x[2])))
    return alpha, beta, log_pq


def _closed_form_rate(spec, alpha, beta, p_q):
    t1, t2, t3 = _closed_form_terms(spec, alpha, beta, p_q)
    return np.minimum(np.minimum(t1, t2), t3)


def maximize_gaussian_inner_bound(spec, grid=None, seeds=()):
    """Maximize the inner bound over (alpha, beta, p_q).

    A full grid is evaluated with the closed forms, the best point (or a
    better ``seeds`` entry) is refined with Nelder-Mead in
    (alpha, beta, log10 p_q), and the final point is re-evaluated with
    :func:`gaussian_inner_bound`.
    """
    grid = grid or GridConfig()
    splits = grid.splits()
    alpha, beta, p_q = np.meshgrid(
        splits, splits, grid.compression_noises(), indexing="ij"
    )
    rates = _closed_form_rate(spec, alpha, beta, p_q)
    best = int(np.argmax(rates))
    point = (float(alpha.flat[best]), float(beta.flat[best]),
             math.log10(float(p_q.flat[best])))
    value = float(rates.flat[best])
    for seed in seeds:
        if math.isinf(seed.p_q):
            # covered by the constant-V branch below
            continue
        seed_value = float(_closed_form_rate(
            spec, seed.alpha, seed.beta, seed.p_q))
        if seed_value > value + config.TIE_TOLERANCE:
            point = (seed.alpha, seed.beta, math.log10(seed.p_q))
            value = seed_value

    evaluations = rates.size + len(seeds)
    if grid.refine:
        def negative_rate(x):
            a, b, log_pq = _clip(x)
            return -float(_closed_form_rate(spec, a, b, 10.0 ** log_pq))

        refined = optimize.minimize(
            negative_rate, np.array(point), method="Nelder-Mead",
            options={"xatol": 1e-7, "fatol": 1e-10, "maxiter": 2000},
        )
        evaluations += int(refined.nfev)
        if -refined.fun > value:
            point = _clip(refined.x)
            value = -float(refined.fun)
    params = GaussianParams(point[0], point[1], 10.0 ** point[2])

    alpha_no_si, value_no_si = _no_si_split(spec)
    evaluations += 1
    if value_no_si > value + config.TIE_TOLERANCE:
        params = GaussianParams(alpha_no_si, 1.0, math.inf)
        value = value_no_si

    t1, t2, t3, rate = gaussian_inner_bound(spec, params)
    terms = (t1, t2, t3)
    gaussian_logger.debug(
        "gaussian inner bound %.6f at alpha=%.4f beta=%.4f p_q=%.3g "
        "(%d evaluations)",
        rate, params.alpha, params.beta, params.p_q, evaluations,
    )
    return RateResult(
        rate=rate,
        argmax=params,
        binding_term=int(np.argmin(terms)) + 1,
        kind=GAUSSIAN_INNER,
        terms=terms,
        optimizer_trace=OptimizerTrace(evaluations, ((0, float(value)),)),
    )


def _max_of_crossing(increasing, decreasing, low=0.0, high=1.0):
    """(t, value) maximizing min(increasing(t), decreasing(t)) on
    [low, high].
    """
    def objective(t):
        return min(increasing(t), decreasing(t))

    candidates = [(objective(low), -low), (objective(high), -high)]
    if increasing(low) < decreasing(low) and increasing(high) > \
            decreasing(high):
        found = optimize.minimize_scalar(
            lambda t: -objective(t), bounds=(low, high), method="bounded",
            options={"xatol": 1e-12},
        )
        candidates.append((objective(float(found.x)), -float(found.x)))
    value, t = max(candidates)
    return -t, value


def _no_si_split(spec):
    """(alpha, rate) of the inner bound with a constant V and beta = 1."""
    noise = spec.N0 + spec.P_S

    def private(alpha):
        return shannon_c((1.0 - alpha) * spec.P / noise) + spec.c_sr

    def coherent(alpha):
        return shannon_c(
            (spec.P + spec.P_R + 2.0 * math.sqrt(alpha * spec.P * spec.P_R))
            / noise
        )

    return _max_of_crossing(coherent, private)


def no_si_rate(spec):
    """Rate when the relay ignores the state and helps by coherent
    combining only, maximized over the source power split.
    """
    return _no_si_split(spec)[1]


def full_coop_bound(spec):
    """C((P + P_R + 2 sqrt(P P_R)) / (P_S + N0)), full cooperation."""
    return shannon_c(
        (spec.P + spec.P_R + 2.0 * math.sqrt(spec.P * spec.P_R))
        / (spec.P_S + spec.N0)
    )


def no_coop_reference(spec):
    """C((P + P_R) / P_S) as a reference line, whatever N0 and the links."""
    if spec.P_S == 0:
        return math.inf if spec.P + spec.P_R > 0 else 0.0
    return shannon_c((spec.P + spec.P_R) / spec.P_S)


def no_coop_capacity(spec):
    """C((P + P_R) / P_S), the capacity when N0 = 0 and no link is used."""
    if spec.N0 != 0 or spec.c_sr != 0 or spec.c_rs != 0:
        message = ("C((P + P_R) / P_S) is a capacity only for N0 = 0 and "
                   "c_sr = c_rs = 0")
        warnings.warn(message, PreconditionWarning)
        gaussian_logger.warning(message)
    return no_coop_reference(spec)


def gaussian_cutset_bound(spec):
    """Cut-set bound maximized over the input correlation rho in [0, 1]."""
    if spec.N0 == 0:
        return full_coop_bound(spec)

    def broadcast(rho):
        return shannon_c(
            (spec.P + spec.P_R + 2.0 * rho * math.sqrt(spec.P * spec.P_R))
            / (spec.N0 + spec.P_S)
        )

    def multiple_access(rho):
        return shannon_c((1.0 - rho ** 2) * spec.P / spec.N0) + spec.c_sr

    return _max_of_crossing(broadcast, multiple_access)[1]


def cooperation_thresholds(spec):
    """(c_sr, c_rs) needed for the full-cooperation capacity.

    Both equal :func:`full_coop_bound` when N0 = 0; with noise no
    threshold is known and ``math.inf`` is returned for the relay link.
    """
    value = full_coop_bound(spec)
    return value, value if spec.N0 == 0 else math.inf
