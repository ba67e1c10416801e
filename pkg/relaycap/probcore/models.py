# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Labeled discrete probability tensors."""

from dataclasses import dataclass, field

import numpy as np

from relaycap.config import PMF_SUM_TOLERANCE
from relaycap.errors import InvalidArgumentError

STANDARD_NAMES = ("U", "V", "S", "X", "XR", "Y")


@dataclass(frozen=True)
class VariableId:
    """A finite random variable: symbolic name and alphabet size."""

    name: str
    cardinality: int

    def __post_init__(self):
        """Validate the alphabet size."""
        if not self.name:
            raise InvalidArgumentError(field="name", message="empty name")
        if int(self.cardinality) != self.cardinality or self.cardinality < 1:
            raise InvalidArgumentError(
                field=self.name,
                message="cardinality must be a positive integer, "
                "got {0}".format(self.cardinality),
            )


@dataclass(frozen=True)
class JointPmf:
    """Dense joint pmf with one axis per variable.

    The tensor is copied and frozen on construction, so instances can be
    shared freely. ``tolerance`` bounds the deviation of the total mass
    from one; it is not part of the value.
    """

    variables: tuple
    probs: np.ndarray
    tolerance: float = field(default=PMF_SUM_TOLERANCE, compare=False)

    def __post_init__(self):
        """Validate shape, sign and normalization."""
        variables = tuple(self.variables)
        names = [v.name for v in variables]
        if len(set(names)) != len(names):
            raise InvalidArgumentError(
                field="variables",
                message="duplicate names {0}".format(names),
            )
        probs = np.array(self.probs, dtype=float)
        expected = tuple(v.cardinality for v in variables)
        if probs.shape != expected:
            raise InvalidArgumentError(
                field="probs",
                message="shape {0} does not match cardinalities {1}".format(
                    probs.shape, expected
                ),
            )
        if not np.all(np.isfinite(probs)) or np.any(probs < 0):
            raise InvalidArgumentError(
                field="probs", message="entries must be finite and >= 0"
            )
        total = probs.sum()
        if abs(total - 1.0) > self.tolerance:
            raise InvalidArgumentError(
                field="probs",
                message="entries sum to {0!r}, not 1".format(total),
            )
        probs.setflags(write=False)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "probs", probs)

    @property
    def names(self):
        """Variable names in axis order."""
        return tuple(v.name for v in self.variables)

    def axis(self, target):
        """Return the axis index of a variable given by name or id."""
        name = target.name if isinstance(target, VariableId) else target
        try:
            return self.names.index(name)
        except ValueError:
            raise InvalidArgumentError(
                field=str(name),
                message="unknown variable, pmf has {0}".format(self.names),
            )

    def axes(self, targets):
        """Return the sorted axis indices of several variables."""
        return tuple(sorted({self.axis(t) for t in targets}))

    def variable(self, target):
        """Return the :class:`VariableId` of a variable."""
        return self.variables[self.axis(target)]
