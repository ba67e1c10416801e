# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Information measures over labeled joint pmfs."""

import math

import numpy as np

from relaycap.config import MI_CLAMP_TOLERANCE, STOCHASTIC_TOLERANCE
from relaycap.errors import InvalidArgumentError
from relaycap.probcore.models import JointPmf, VariableId


def _as_set(targets):
    if targets is None:
        return set()
    if isinstance(targets, (str, VariableId)):
        return {targets}
    return set(targets)


def _names(pmf, targets):
    """Resolve names or ids to a set of variable names of ``pmf``."""
    return {pmf.variables[pmf.axis(t)].name for t in _as_set(targets)}


def _entropy_of_axes(probs, keep):
    drop = tuple(i for i in range(probs.ndim) if i not in keep)
    marg = probs.sum(axis=drop) if drop else probs
    p = marg[marg > 0]
    return float(-np.sum(p * np.log2(p)))


def marginal(pmf, targets):
    """Return the marginal pmf of ``targets``, in the axis order of pmf."""
    keep = pmf.axes(_as_set(targets))
    drop = tuple(i for i in range(len(pmf.variables)) if i not in keep)
    probs = pmf.probs.sum(axis=drop) if drop else pmf.probs
    return JointPmf(
        tuple(pmf.variables[i] for i in keep),
        probs,
        tolerance=pmf.tolerance,
    )


def entropy(pmf, targets):
    """Entropy H(targets) in bits, with the 0 log 0 = 0 convention."""
    return _entropy_of_axes(pmf.probs, pmf.axes(_as_set(targets)))


def conditional_entropy(pmf, targets, given=None):
    """Conditional entropy H(targets | given) in bits."""
    a = _names(pmf, targets)
    c = _names(pmf, given)
    return entropy(pmf, a | c) - entropy(pmf, c)


def conditional_mutual_information(pmf, a, b, c=None):
    """Conditional mutual information I(A; B | C) in bits.

    Values in ``[-MI_CLAMP_TOLERANCE, 0)`` are rounding noise and are
    returned as 0.
    """
    a, b, c = _names(pmf, a), _names(pmf, b), _names(pmf, c)
    if a & b or a & c or b & c:
        raise InvalidArgumentError(
            field="targets",
            message="sets must be pairwise disjoint, got {0}, {1}, "
            "{2}".format(sorted(a), sorted(b), sorted(c)),
        )
    if not a or not b:
        return 0.0
    probs = pmf.probs
    value = (
        _entropy_of_axes(probs, pmf.axes(a | c))
        + _entropy_of_axes(probs, pmf.axes(b | c))
        - _entropy_of_axes(probs, pmf.axes(a | b | c))
        - _entropy_of_axes(probs, pmf.axes(c))
    )
    if -MI_CLAMP_TOLERANCE <= value < 0:
        return 0.0
    return value


def mutual_information(pmf, a, b):
    """Mutual information I(A; B) in bits."""
    return conditional_mutual_information(pmf, a, b)


def _check_probability(p, name="p"):
    if not 0.0 <= p <= 1.0 or math.isnan(p):
        raise InvalidArgumentError(
            field=name, message="{0!r} is not in [0, 1]".format(p)
        )


def binary_entropy(p):
    """Binary entropy function H_b(p) in bits."""
    _check_probability(p)
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


def binary_convolve(p1, p2):
    """Probability that the XOR of independent Bern(p1), Bern(p2) is 1."""
    _check_probability(p1, "p1")
    _check_probability(p2, "p2")
    return p1 * (1.0 - p2) + p2 * (1.0 - p1)


def check_stochastic(matrix, field, tolerance=STOCHASTIC_TOLERANCE):
    """Raise unless every last-axis row of ``matrix`` is a pmf."""
    matrix = np.asarray(matrix, dtype=float)
    if not np.all(np.isfinite(matrix)) or np.any(matrix < 0):
        bad = np.argwhere(~np.isfinite(matrix) | (matrix < 0))[0]
        raise InvalidArgumentError(
            field="{0}{1}".format(field, _index(bad[:-1])),
            message="entries must be finite and >= 0",
        )
    sums = matrix.sum(axis=-1)
    off = np.abs(sums - 1.0) > tolerance
    if np.any(off):
        row = tuple(np.argwhere(off)[0]) if sums.ndim else ()
        raise InvalidArgumentError(
            field="{0}{1}".format(field, _index(row)),
            message="row sums to {0!r}, not 1".format(float(sums[row])),
        )
    return matrix


def _index(row):
    return "".join("[{0}]".format(int(i)) for i in row)


def assemble_joint(spec, inner):
    """Build the joint pmf over (U, V, S, X, XR, Y).

    The factors are p(u) p(v|s,x_r,u) p(s) p(x|u) p(x_r|u) p(y|s,x,x_r),
    taken from ``inner`` (an ``InnerDistribution``) and ``spec`` (a
    ``DmChannelSpec``).
    """
    card_u, card_v = inner.card_u, inner.card_v
    expected = {
        "p_x_given_u": (card_u, spec.card_x),
        "p_xr_given_u": (card_u, spec.card_xr),
        "p_v_given_sxru": (spec.card_s, spec.card_xr, card_u, card_v),
    }
    for name, shape in expected.items():
        actual = np.shape(getattr(inner, name))
        if actual != shape:
            raise InvalidArgumentError(
                field=name,
                message="shape {0} does not match channel, expected "
                "{1}".format(actual, shape),
            )
    probs = np.einsum(
        "u,sruv,s,ux,ur,sxry->uvsxry",
        inner.p_u,
        inner.p_v_given_sxru,
        spec.state_pmf,
        inner.p_x_given_u,
        inner.p_xr_given_u,
        spec.kernel,
    )
    variables = (
        VariableId("U", card_u),
        VariableId("V", card_v),
        VariableId("S", spec.card_s),
        VariableId("X", spec.card_x),
        VariableId("XR", spec.card_xr),
        VariableId("Y", spec.card_y),
    )
    # each of the six factors may be off by the row tolerance
    return JointPmf(variables, probs, tolerance=6 * STOCHASTIC_TOLERANCE)
