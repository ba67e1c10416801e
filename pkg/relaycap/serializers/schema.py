# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Channel file loaders and report serializers."""

import dataclasses
import json

import numpy as np
from marshmallow import EXCLUDE, Schema, ValidationError, fields, \
    post_load, pre_dump, validates_schema
from marshmallow.validate import Equal, Length, Range

from relaycap.dmrates import CostConstraint, DmChannelSpec
from relaycap.errors import InvalidArgumentError, OutputError
from relaycap.gaussrates import GaussianSpec
from relaycap.modulo import BinaryModuloParams

NonNegative = Range(min=0)


def _rectangular(value, path, depth):
    """Return the shape of a nested list, or raise naming the ragged row."""
    if depth == 0:
        return ()
    if not isinstance(value, list) or not value:
        raise ValidationError(
            "{0} must be a non-empty array".format(path or "value")
        )
    shapes = [
        _rectangular(item, "{0}[{1}]".format(path, i), depth - 1)
        for i, item in enumerate(value)
    ]
    for i, shape in enumerate(shapes):
        if shape != shapes[0]:
            raise ValidationError(
                "{0}[{1}] has shape {2}, expected {3}".format(
                    path, i, list(shape), list(shapes[0]))
            )
    return (len(value),) + shapes[0]


class CostSchema(Schema):
    """Per-symbol input costs and the expected-cost budget."""

    costs = fields.List(
        fields.Float(allow_nan=False), required=True, validate=Length(min=1)
    )
    budget = fields.Float(required=True, allow_nan=False,
                          validate=NonNegative)

    class Meta:
        """Meta attributes for the schema."""

        unknown = EXCLUDE

    @pre_dump
    def from_constraint(self, cost, **kwargs):
        """Dump a :class:`CostConstraint`."""
        return {"costs": cost.costs.tolist(), "budget": cost.budget}

    @post_load
    def make_constraint(self, data, **kwargs):
        """Build the constraint."""
        return CostConstraint(np.array(data["costs"]), data["budget"])


class DmChannelSchema(Schema):
    """Discrete memoryless channel; ``kernel`` is ``[s][x][x_r][y]``."""

    kind = fields.String(required=True, validate=Equal("dm"))
    state_pmf = fields.List(fields.Float(allow_nan=False), required=True)
    kernel = fields.List(
        fields.List(fields.List(fields.List(fields.Float(allow_nan=False)))),
        required=True,
    )
    c_sr = fields.Float(load_default=0.0, validate=NonNegative)
    c_rs = fields.Float(load_default=0.0, validate=NonNegative)
    cost_x = fields.Nested(CostSchema, load_default=None, allow_none=True)
    cost_xr = fields.Nested(CostSchema, load_default=None, allow_none=True)

    class Meta:
        """Meta attributes for the schema."""

        unknown = EXCLUDE

    @validates_schema
    def check_dimensions(self, data, **kwargs):
        """Reject ragged arrays with the path of the offending row."""
        if "kernel" not in data or "state_pmf" not in data:
            return
        try:
            shape = _rectangular(data["kernel"], "kernel", 4)
        except ValidationError as error:
            raise ValidationError(error.messages, field_name="kernel")
        if shape[0] != len(data["state_pmf"]):
            raise ValidationError(
                "kernel has {0} state slices, state_pmf has {1} "
                "entries".format(shape[0], len(data["state_pmf"])),
                field_name="kernel",
            )

    @pre_dump
    def from_spec(self, spec, **kwargs):
        """Dump a :class:`DmChannelSpec`."""
        return {
            "kind": spec.kind,
            "state_pmf": spec.state_pmf.tolist(),
            "kernel": spec.kernel.tolist(),
            "c_sr": spec.c_sr,
            "c_rs": spec.c_rs,
            "cost_x": spec.cost_x,
            "cost_xr": spec.cost_xr,
        }

    @post_load
    def make_spec(self, data, **kwargs):
        """Build the channel."""
        return DmChannelSpec(
            np.array(data["state_pmf"]),
            np.array(data["kernel"]),
            data["c_sr"],
            data["c_rs"],
            data["cost_x"],
            data["cost_xr"],
        )


class GaussianChannelSchema(Schema):
    """Gaussian channel powers, noise and link capacities."""

    kind = fields.String(required=True, validate=Equal("gaussian"))
    P = fields.Float(required=True, validate=NonNegative)
    P_R = fields.Float(required=True, validate=NonNegative)
    P_S = fields.Float(required=True, validate=NonNegative)
    N0 = fields.Float(required=True, validate=NonNegative)
    c_sr = fields.Float(load_default=0.0, validate=NonNegative)
    c_rs = fields.Float(load_default=0.0, validate=NonNegative)

    class Meta:
        """Meta attributes for the schema."""

        unknown = EXCLUDE

    @pre_dump
    def from_spec(self, spec, **kwargs):
        """Dump a :class:`GaussianSpec`."""
        return dict(dataclasses.asdict(spec), kind=spec.kind)

    @post_load
    def make_spec(self, data, **kwargs):
        """Build the channel."""
        data.pop("kind")
        return GaussianSpec(**data)


class BinaryModuloChannelSchema(Schema):
    """Binary modulo-additive channel budgets and state parameter."""

    kind = fields.String(required=True, validate=Equal("binary_modulo"))
    p = fields.Float(required=True, validate=Range(min=0, max=0.5))
    p_r = fields.Float(required=True, validate=Range(min=0, max=0.5))
    p_s = fields.Float(required=True, validate=Range(min=0, max=1))

    class Meta:
        """Meta attributes for the schema."""

        unknown = EXCLUDE

    @pre_dump
    def from_params(self, params, **kwargs):
        """Dump :class:`BinaryModuloParams`."""
        return dict(dataclasses.asdict(params), kind=params.kind)

    @post_load
    def make_params(self, data, **kwargs):
        """Build the parameters."""
        data.pop("kind")
        return BinaryModuloParams(**data)


CHANNEL_SCHEMAS = {
    "dm": DmChannelSchema,
    "gaussian": GaussianChannelSchema,
    "binary_modulo": BinaryModuloChannelSchema,
}


def load_channel(data):
    """Build a channel from a decoded ChannelFile document."""
    if not isinstance(data, dict):
        raise ValidationError({"_schema": ["document must be an object"]})
    kind = data.get("kind")
    if kind not in CHANNEL_SCHEMAS:
        raise ValidationError({
            "kind": ["must be one of {0}, got {1!r}".format(
                sorted(CHANNEL_SCHEMAS), kind)]
        })
    return CHANNEL_SCHEMAS[kind]().load(data)


def load_channel_file(path):
    """Read and build a channel from a JSON ChannelFile."""
    try:
        with open(path) as stream:
            data = json.load(stream)
    except json.JSONDecodeError as error:
        raise InvalidArgumentError(
            field="line {0}, column {1}".format(error.lineno, error.colno),
            message=error.msg,
        )
    except OSError as error:
        raise InvalidArgumentError(field=str(path), message=error.strerror)
    return load_channel(data)


def dump_channel(spec):
    """Serialize a channel to a ChannelFile document."""
    return CHANNEL_SCHEMAS[spec.kind]().dump(spec)


def save_channel_file(spec, path):
    """Write a channel as a JSON ChannelFile."""
    try:
        with open(path, "w") as stream:
            json.dump(dump_channel(spec), stream, indent=2)
    except OSError as error:
        raise OutputError(field=str(path), message=error.strerror)


def plain(value):
    """Convert certificates (arrays, dataclasses) to JSON-ready values."""
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if dataclasses.is_dataclass(value):
        return {
            f.name: plain(getattr(value, f.name))
            for f in dataclasses.fields(value)
        }
    if isinstance(value, dict):
        return {k: plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    return value


class RateResultSchema(Schema):
    """Optimized rate and its certificate."""

    kind = fields.String(dump_only=True)
    rate = fields.Float(dump_only=True)
    binding_term = fields.Integer(dump_only=True)
    terms = fields.List(fields.Float(), dump_only=True)
    evaluations = fields.Function(
        lambda result: result.optimizer_trace.evaluations, dump_only=True
    )
    certificate = fields.Function(
        lambda result: plain(result.argmax), dump_only=True
    )


class TermCheckSchema(Schema):
    """One term of a validation report."""

    name = fields.String(dump_only=True)
    analytic = fields.Float(dump_only=True)
    empirical = fields.Float(dump_only=True)
    delta = fields.Float(dump_only=True)
    bias_bound = fields.Float(dump_only=True)
    sigma = fields.Float(dump_only=True)
    passed = fields.Boolean(dump_only=True)


class ValidationReportSchema(Schema):
    """Plug-in validation report."""

    n = fields.Integer(dump_only=True)
    seed = fields.Integer(dump_only=True)
    tol = fields.Float(dump_only=True)
    passed = fields.Boolean(dump_only=True)
    insufficient_samples = fields.Boolean(dump_only=True)
    terms = fields.List(fields.Nested(TermCheckSchema), dump_only=True)
