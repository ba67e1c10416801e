# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Gaussian relay channel models."""

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from relaycap import config
from relaycap.errors import InvalidArgumentError

COVARIANCE_ORDER = ("U", "X", "XR", "S", "V", "Y")


def _check_nonnegative(value, name):
    if math.isnan(value) or value < 0 or math.isinf(value):
        raise InvalidArgumentError(
            field=name, message="{0!r} is not a finite value >= 0".format(
                value)
        )


@dataclass(frozen=True)
class GaussianSpec:
    """Y = X + X_R + S + Z with powers P, P_R, state variance P_S and noise
    variance N0; ``c_sr`` and ``c_rs`` are the conferencing capacities.
    """

    P: float
    P_R: float
    P_S: float
    N0: float
    c_sr: float = 0.0
    c_rs: float = 0.0

    kind = "gaussian"

    def __post_init__(self):
        """Validate powers and capacities."""
        for name in ("P", "P_R", "P_S", "N0", "c_sr", "c_rs"):
            value = getattr(self, name)
            _check_nonnegative(value, name)
            object.__setattr__(self, name, float(value))
        if self.P_S + self.N0 <= 0:
            raise InvalidArgumentError(
                field="P_S", message="P_S + N0 must be > 0"
            )

    def with_links(self, c_sr=None, c_rs=None):
        """Return a copy with other conferencing capacities."""
        return GaussianSpec(
            self.P, self.P_R, self.P_S, self.N0,
            self.c_sr if c_sr is None else c_sr,
            self.c_rs if c_rs is None else c_rs,
        )

    def with_noise(self, n0):
        """Return a copy with another noise variance."""
        return GaussianSpec(
            self.P, self.P_R, self.P_S, n0, self.c_sr, self.c_rs
        )


@dataclass(frozen=True)
class GaussianParams:
    """Power splits on the cooperative codeword and compression noise.

    X = sqrt(alpha P) U + X', X_R = sqrt(beta P_R) U + X_R' and
    V = S + Q with Q of variance ``p_q``; ``p_q = math.inf`` stands for a
    constant V, the relay ignoring its state.
    """

    alpha: float
    beta: float
    p_q: float

    def __post_init__(self):
        """Validate the ranges."""
        for name in ("alpha", "beta"):
            value = getattr(self, name)
            if math.isnan(value) or not 0.0 <= value <= 1.0:
                raise InvalidArgumentError(
                    field=name, message="{0!r} is not in [0, 1]".format(value)
                )
            object.__setattr__(self, name, float(value))
        if not self.p_q > 0:
            raise InvalidArgumentError(
                field="p_q", message="{0!r} must be > 0".format(
                    self.p_q)
            )
        object.__setattr__(self, "p_q", float(self.p_q))


@dataclass(frozen=True)
class CovarianceModel:
    """Covariance matrix of jointly Gaussian variables in ``names`` order."""

    matrix: np.ndarray
    names: Tuple[str, ...] = COVARIANCE_ORDER

    def __post_init__(self):
        """Check shape, symmetry and positive semidefiniteness."""
        matrix = np.array(self.matrix, dtype=float)
        size = len(self.names)
        if matrix.shape != (size, size):
            raise InvalidArgumentError(
                field="matrix",
                message="shape {0} for {1} variables".format(
                    matrix.shape, size),
            )
        if not np.allclose(matrix, matrix.T, rtol=0.0, atol=1e-12):
            raise InvalidArgumentError(
                field="matrix", message="covariance is not symmetric"
            )
        scale = max(1.0, float(np.max(np.diag(matrix))))
        if np.linalg.eigvalsh(matrix).min() < -1e-10 * scale:
            raise InvalidArgumentError(
                field="matrix", message="covariance is not PSD"
            )
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "names", tuple(self.names))

    def index(self, names):
        """Positions of ``names``, in model order."""
        unknown = set(names) - set(self.names)
        if unknown:
            raise InvalidArgumentError(
                field="names", message="unknown {0}".format(sorted(unknown))
            )
        return [i for i, name in enumerate(self.names) if name in names]

    def covariance(self, first, second):
        """Covariance entry of two variables."""
        return float(self.matrix[self.names.index(first),
                                 self.names.index(second)])

    def variance(self, name):
        """Variance of one variable."""
        return self.covariance(name, name)


@dataclass(frozen=True)
class GridConfig:
    """Grid over (alpha, beta, p_q) and its local refinement."""

    step: float = config.RELAYCAP_GRID_STEP
    pq_points: int = config.RELAYCAP_PQ_GRID_POINTS
    pq_range: Tuple[float, float] = config.RELAYCAP_PQ_GRID_RANGE
    refine: bool = config.RELAYCAP_GRID_REFINE

    def __post_init__(self):
        """Validate the grid."""
        if not 0 < self.step <= 1:
            raise InvalidArgumentError(
                field="step", message="{0!r} not in (0, 1]".format(self.step)
            )
        low, high = self.pq_range
        if self.pq_points < 1 or not 0 < low <= high:
            raise InvalidArgumentError(
                field="pq_range", message="need pq_points >= 1 and "
                "0 < low <= high"
            )

    def splits(self):
        """Linear grid of a power split over [0, 1]."""
        return np.linspace(0.0, 1.0, int(round(1.0 / self.step)) + 1)

    def compression_noises(self):
        """Logarithmic grid of the compression noise variance."""
        low, high = self.pq_range
        return np.logspace(math.log10(low), math.log10(high), self.pq_points)
