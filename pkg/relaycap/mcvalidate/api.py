# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Monte Carlo plug-in estimation of information measures.

Samples are drawn with numpy's PCG64 generator. The stream is split into
fixed-size chunks, each seeded by ``SeedSequence(seed).spawn``, so a batch
depends only on the seed, the pmf and the chunk size.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from relaycap import config
from relaycap.errors import InvalidArgumentError
from relaycap.probcore import JointPmf, assemble_joint, \
    conditional_mutual_information

validation_logger = logging.getLogger("relaycap.mcvalidate")


@dataclass(frozen=True)
class SampleBatch:
    """``n`` i.i.d. rows, one integer column per variable."""

    variables: Tuple
    columns: np.ndarray
    seed: int

    @property
    def n(self):
        """Number of rows."""
        return self.columns.shape[0]

    def column(self, name):
        """Samples of one variable."""
        names = [v.name for v in self.variables]
        if name not in names:
            raise InvalidArgumentError(
                field="name", message="unknown variable {0!r}".format(name)
            )
        return self.columns[:, names.index(name)]


def _draw(cdf, seed_sequence, size):
    rng = np.random.Generator(np.random.PCG64(seed_sequence))
    flat = np.searchsorted(cdf, rng.random(size), side="right")
    return np.minimum(flat, cdf.shape[0] - 1)


def sample_joint(pmf, n, seed=config.RELAYCAP_SEED,
                 chunk_size=config.RELAYCAP_MC_CHUNK_SIZE, threads=1):
    """Draw ``n`` rows from ``pmf`` by inverse CDF on the flattened tensor."""
    if int(n) != n or n < 1:
        raise InvalidArgumentError(
            field="n", message="{0!r} must be a positive integer".format(n)
        )
    if int(seed) != seed or seed < 0:
        raise InvalidArgumentError(
            field="seed", message="{0!r} must be an integer >= 0".format(seed)
        )
    n, seed = int(n), int(seed)
    cdf = np.cumsum(pmf.probs.ravel())
    cdf = cdf / cdf[-1]
    chunks = math.ceil(n / chunk_size)
    sizes = [min(chunk_size, n - i * chunk_size) for i in range(chunks)]
    children = np.random.SeedSequence(seed).spawn(chunks)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_draw, [cdf] * chunks, children, sizes))
    else:
        parts = [_draw(cdf, c, s) for c, s in zip(children, sizes)]
    flat = np.concatenate(parts)
    columns = np.stack(np.unravel_index(flat, pmf.probs.shape), axis=1)
    return SampleBatch(tuple(pmf.variables), columns, seed)


def empirical_pmf(batch):
    """Joint type of the batch as a :class:`JointPmf`."""
    shape = tuple(v.cardinality for v in batch.variables)
    flat = np.ravel_multi_index(tuple(batch.columns.T), shape)
    counts = np.bincount(flat, minlength=int(np.prod(shape)))
    return JointPmf(batch.variables, (counts / batch.n).reshape(shape))


def empirical_cmi(batch, a, b, c=None):
    """Plug-in estimate of I(A; B | C) in bits."""
    return conditional_mutual_information(empirical_pmf(batch), a, b, c)


def _size(pmf, targets):
    return int(np.prod([pmf.variable(t).cardinality for t in targets]))


def plug_in_bias(pmf, a, b, c, n):
    """First-order bias (|A|-1)(|B|-1)|C| / (2 n ln 2) of the estimate."""
    c = c or ()
    return ((_size(pmf, a) - 1) * (_size(pmf, b) - 1) * _size(pmf, c)
            / (2.0 * n * math.log(2.0)))


def _keepdims_marginal(pmf, targets):
    keep = pmf.axes(set(targets))
    drop = tuple(i for i in range(pmf.probs.ndim) if i not in keep)
    return pmf.probs.sum(axis=drop, keepdims=True) if drop else pmf.probs


def estimator_sigma(pmf, a, b, c, n):
    """Standard deviation proxy of the plug-in estimate at ``n`` samples.

    Variance of the information density over n, plus the variance of the
    chi-square fluctuation of the bias term.
    """
    c = set(c or ())
    a, b = set(a), set(b)
    probs = pmf.probs
    with np.errstate(divide="ignore", invalid="ignore"):
        density = np.log2(
            probs * _keepdims_marginal(pmf, c)
            / (_keepdims_marginal(pmf, a | c) * _keepdims_marginal(pmf, b | c))
        )
    support = probs > 0
    mean = float(np.sum(probs[support] * density[support]))
    variance = float(np.sum(probs[support]
                            * (density[support] - mean) ** 2))
    dof = (_size(pmf, a) - 1) * (_size(pmf, b) - 1) * _size(pmf, c)
    return math.sqrt(
        variance / n + 2.0 * dof / (2.0 * n * math.log(2.0)) ** 2
    )


@dataclass(frozen=True)
class TermCheck:
    """Analytic value of one min-term against its plug-in estimate."""

    name: str
    analytic: float
    empirical: float
    bias_bound: float
    sigma: float
    passed: bool

    @property
    def delta(self):
        """Empirical minus analytic value."""
        return self.empirical - self.analytic


@dataclass(frozen=True)
class ValidationReport:
    """Per-term comparison of a plug-in validation run."""

    n: int
    seed: int
    tol: float
    terms: Tuple[TermCheck, ...]
    insufficient_samples: bool

    @property
    def passed(self):
        """Return True if every term is within tolerance."""
        return all(t.passed for t in self.terms)


STATE_COST = (-1, {"V"}, {"S"}, {"XR", "U"})
INNER_TERMS = (
    ("t1", ((1, {"X"}, {"Y"}, {"XR", "V", "U"}),), ("c_sr",)),
    ("t2", ((1, {"X", "XR", "V"}, {"Y"}, set()), STATE_COST), ()),
    ("t3", ((1, {"X", "XR", "V"}, {"Y"}, {"U"}), STATE_COST),
     ("c_sr", "c_rs")),
)


def validate_spec(spec, inner, n=config.RELAYCAP_MC_SAMPLES,
                  seed=config.RELAYCAP_SEED, tol=config.RELAYCAP_MC_TOLERANCE,
                  threads=1):
    """Compare every inner-bound term with its plug-in estimate."""
    if tol < 0:
        raise InvalidArgumentError(
            field="tol", message="{0!r} must be >= 0".format(tol)
        )
    pmf = assemble_joint(spec, inner)
    estimate = empirical_pmf(sample_joint(pmf, n, seed, threads=threads))
    checks, insufficient = [], False
    for name, components, links in INNER_TERMS:
        offset = sum(getattr(spec, link) for link in links)
        analytic = empirical = offset
        bias = sigma = 0.0
        for sign, a, b, c in components:
            analytic += sign * conditional_mutual_information(pmf, a, b, c)
            empirical += sign * conditional_mutual_information(
                estimate, a, b, c)
            bias += plug_in_bias(pmf, a, b, c, n)
            sigma += estimator_sigma(pmf, a, b, c, n)
        if bias > tol:
            insufficient = True
        checks.append(TermCheck(
            name, analytic, empirical, bias, sigma,
            abs(empirical - analytic) < tol,
        ))
    if insufficient:
        validation_logger.warning(
            "insufficient samples: bias bound exceeds tolerance %g at n=%d",
            tol, n,
        )
    return ValidationReport(int(n), int(seed), float(tol), tuple(checks),
                            insufficient)
