# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Multi-start projected coordinate ascent over products of simplices.

A point is a list of 2-d arrays ("blocks"), each row a pmf. Starting
points come from a scrambled Sobol sequence mapped onto the simplices;
the most promising ones are refined by coordinate ascent with step
halving. Every evaluated point is feasible, so the best value found is a
certified lower bound of the true maximum.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.stats import qmc

from relaycap import config
from relaycap.dmrates.models import OptimizerTrace, SearchConfig
from relaycap.errors import InfeasibleError

optimizer_logger = logging.getLogger("relaycap.optimizer")

IMPROVEMENT = 1e-12


@dataclass(frozen=True)
class Block:
    """A stochastic matrix parameter: ``rows`` pmfs of length ``size``."""

    name: str
    rows: int
    size: int

    @property
    def free(self):
        """Degrees of freedom of the block."""
        return self.rows * (self.size - 1)

    def uniform(self):
        """Every row uniform."""
        return np.full((self.rows, self.size), 1.0 / self.size)


@dataclass(frozen=True)
class LinearCost:
    """Expected-cost constraint, linear in each block taken separately.

    ``anchor`` is a pmf row of ``block`` meeting the budget on its own;
    infeasible starting points are pulled towards it.
    """

    name: str
    block: int
    expected: Callable
    budget: float
    anchor: np.ndarray

    def excess(self, point):
        """Expected cost minus budget."""
        return self.expected(point) - self.budget

    def is_feasible(self, point):
        """Return True if the point meets the budget."""
        return self.excess(point) <= config.COST_TOLERANCE


def project_to_simplex(row):
    """Euclidean projection of a vector onto the probability simplex."""
    k = row.shape[0]
    u = np.sort(row)[::-1]
    css = np.cumsum(u) - 1.0
    ind = np.arange(1, k + 1)
    rho = np.nonzero(u - css / ind > 0)[0][-1]
    theta = css[rho] / (rho + 1.0)
    projected = np.maximum(row - theta, 0.0)
    return projected / projected.sum()


def _spacings(values):
    edges = np.concatenate(([0.0], np.sort(values), [1.0]))
    return np.diff(edges)


class SimplexSearch(object):
    """Maximize an objective over a product of simplices.

    ``objective`` maps a point to a float. ``seeds`` are extra starting
    points tried before the low-discrepancy ones (warm starts).
    """

    def __init__(self, blocks, objective, constraints=(), search=None,
                 seeds=()):
        """Constructor."""
        self.blocks = list(blocks)
        self.objective = objective
        self.constraints = list(constraints)
        self.search = search or SearchConfig()
        self.seeds = [self._copy(s) for s in seeds]
        for constraint in self.constraints:
            anchored = self._with_block(
                self._uniform(), constraint.block,
                np.tile(constraint.anchor, (self.blocks[
                    constraint.block].rows, 1)),
            )
            if not constraint.is_feasible(anchored):
                raise InfeasibleError(
                    field=constraint.name,
                    message="budget {0} is below the cheapest "
                    "symbol".format(constraint.budget),
                )

    @staticmethod
    def _copy(point):
        return [np.array(b, dtype=float) for b in point]

    @staticmethod
    def _with_block(point, index, block):
        point = list(point)
        point[index] = block
        return point

    def _uniform(self):
        return [b.uniform() for b in self.blocks]

    def _from_unit_cube(self, sample):
        point, offset = [], 0
        for block in self.blocks:
            rows = []
            for _ in range(block.rows):
                k = block.size - 1
                rows.append(_spacings(sample[offset:offset + k]))
                offset += k
            point.append(np.array(rows))
        return point

    def starting_points(self):
        """Warm starts, then the uniform point, then Sobol points."""
        points = [self._copy(s) for s in self.seeds]
        points.append(self._uniform())
        free = sum(b.free for b in self.blocks)
        remaining = self.search.restarts - 1
        if free and remaining > 0:
            sampler = qmc.Sobol(d=free, scramble=True, seed=self.search.seed)
            samples = sampler.random_base2(
                max(0, math.ceil(math.log2(remaining)))
            )[:remaining]
            points.extend(self._from_unit_cube(s) for s in samples)
        return [self._repair(p) for p in points]

    def _repair(self, point):
        """Pull each violated constraint's block towards its anchor."""
        for constraint in self.constraints:
            excess = constraint.excess(point)
            if excess <= config.COST_TOLERANCE:
                continue
            block = point[constraint.block]
            anchor = np.tile(constraint.anchor, (block.shape[0], 1))
            anchored = self._with_block(point, constraint.block, anchor)
            anchor_excess = constraint.excess(anchored)
            t = excess / (excess - anchor_excess)
            mixed = self._with_block(
                point, constraint.block, (1.0 - t) * block + t * anchor
            )
            point = mixed if constraint.is_feasible(mixed) else anchored
        return point

    def _clip(self, point, candidate, index):
        """Shorten a one-block move so that every budget still holds."""
        t = 1.0
        for constraint in self.constraints:
            new = constraint.excess(candidate)
            if new <= config.COST_TOLERANCE:
                continue
            old = min(constraint.excess(point), 0.0)
            t = min(t, -old / (new - old))
        if t <= 0.0:
            return None
        if t < 1.0:
            block = (1.0 - t) * point[index] + t * candidate[index]
            candidate = self._with_block(point, index, block)
        if all(c.is_feasible(candidate) for c in self.constraints):
            return candidate
        return None

    def ascend(self, point):
        """Coordinate ascent from ``point``; returns (point, value, evals)."""
        value = self.objective(point)
        evaluations = 1
        step = self.search.initial_step
        while step >= self.search.min_step:
            improved = False
            for index, block in enumerate(self.blocks):
                if block.size < 2:
                    continue
                for r in range(block.rows):
                    for i in range(block.size):
                        for direction in (1.0, -1.0):
                            row = point[index][r].copy()
                            row[i] += direction * step
                            row = project_to_simplex(row)
                            if np.allclose(row, point[index][r],
                                           rtol=0.0, atol=1e-15):
                                continue
                            moved = point[index].copy()
                            moved[r] = row
                            candidate = self._clip(
                                point,
                                self._with_block(point, index, moved),
                                index,
                            )
                            if candidate is None:
                                continue
                            evaluations += 1
                            candidate_value = self.objective(candidate)
                            if candidate_value > value + IMPROVEMENT:
                                point, value = candidate, candidate_value
                                improved = True
            if not improved:
                step /= 2.0
        return point, value, evaluations

    def run(self):
        """Return (best point, best value, trace)."""
        starts = self.starting_points()
        values = [self.objective(p) for p in starts]
        evaluations = len(starts)
        order = sorted(range(len(starts)), key=lambda i: (-values[i], i))
        chosen = sorted(order[:self.search.ascents])

        if self.search.threads > 1:
            with ThreadPoolExecutor(max_workers=self.search.threads) as pool:
                ascended = list(pool.map(
                    self.ascend, [starts[i] for i in chosen]))
        else:
            ascended = [self.ascend(starts[i]) for i in chosen]

        results = {i: (starts[i], values[i]) for i in range(len(starts))}
        for i, (point, value, evals) in zip(chosen, ascended):
            results[i] = (point, value)
            evaluations += evals

        best_point, best_value, history = None, -math.inf, []
        for i in range(len(starts)):
            point, value = results[i]
            if value > best_value + config.TIE_TOLERANCE:
                best_point, best_value = point, value
                history.append((i, float(value)))
        optimizer_logger.debug(
            "%d starts, %d ascents, %d evaluations, best %.6f",
            len(starts), len(chosen), evaluations, best_value,
        )
        trace = OptimizerTrace(evaluations, tuple(history))
        return best_point, best_value, trace
