# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Test the channel loaders and the report serializers."""

import glob
import io
import json
import os

import jsonschema
import numpy as np
import pytest
from marshmallow import ValidationError

import relaycap
from relaycap.dmrates import DmChannelSpec, InnerDistribution, \
    inner_bound_terms, no_si_baseline
from relaycap.errors import InvalidArgumentError, OutputError
from relaycap.gaussrates import GaussianSpec, SweepTable
from relaycap.mcvalidate import validate_spec
from relaycap.modulo import BinaryModuloParams
from relaycap.serializers.schema import RateResultSchema, \
    ValidationReportSchema, dump_channel, load_channel, load_channel_file, \
    plain, save_channel_file
from relaycap.serializers.table import save_plot_script, save_sweep_csv, \
    write_sweep_csv

from .helpers import datadir_path, load_json_from_datadir


@pytest.mark.parametrize("filename, cls", [
    ("example1_dm.json", DmChannelSpec),
    ("example1_nocost.json", DmChannelSpec),
    ("example1_modulo.json", BinaryModuloParams),
    ("gaussian_noiseless.json", GaussianSpec),
])
def test_load_channel_kinds(filename, cls):
    """Each kind builds its own model."""
    assert isinstance(load_channel_file(datadir_path(filename)), cls)


def test_load_dm_channel_fields():
    """Costs and link defaults are read."""
    spec = load_channel(load_json_from_datadir("example1_nocost.json"))
    assert spec.c_sr == 0.0 and spec.c_rs == 0.0
    assert spec.cost_x is None
    costly = load_channel(load_json_from_datadir("example1_dm.json"))
    assert costly.cost_xr.budget == 0.15
    assert np.array_equal(costly.cost_x.costs, [0.0, 1.0])


def test_dm_round_trip_keeps_rates(example1, tmp_path):
    """Writing and re-reading a channel changes no rate."""
    path = tmp_path / "channel.json"
    save_channel_file(example1, str(path))
    again = load_channel_file(str(path))
    inner = InnerDistribution.state_copy([0.85, 0.15], [0.85, 0.15], 2)
    assert inner_bound_terms(again, inner) == \
        inner_bound_terms(example1, inner)
    assert np.array_equal(again.kernel, example1.kernel)
    assert again.cost_x.budget == example1.cost_x.budget


def test_gaussian_dump():
    """Gaussian channels dump their kind and powers."""
    data = dump_channel(GaussianSpec(1.0, 2.0, 3.0, 0.5, c_sr=0.1))
    assert data == {"kind": "gaussian", "P": 1.0, "P_R": 2.0, "P_S": 3.0,
                    "N0": 0.5, "c_sr": 0.1, "c_rs": 0.0}


def test_malformed_kernel_row():
    """A row off the simplex is named by its indices."""
    with pytest.raises(InvalidArgumentError) as error:
        load_channel_file(datadir_path("malformed_kernel.json"))
    assert error.value.field == "kernel[1][0][1]"


def test_ragged_kernel():
    """Ragged arrays are schema errors on the kernel."""
    with pytest.raises(ValidationError) as error:
        load_channel_file(datadir_path("ragged_kernel.json"))
    assert "kernel" in error.value.messages
    assert "kernel[1]" in str(error.value.messages["kernel"])


@pytest.mark.parametrize("data, field", [
    ({"kind": "analog"}, "kind"),
    ({"kind": "gaussian", "P": 1.0, "P_R": 1.0, "P_S": 1.0}, "N0"),
    ({"kind": "gaussian", "P": -1.0, "P_R": 1.0, "P_S": 1.0, "N0": 1.0},
     "P"),
    ({"kind": "binary_modulo", "p": 0.7, "p_r": 0.1, "p_s": 0.1}, "p"),
    ({"kind": "dm", "state_pmf": [1.0]}, "kernel"),
])
def test_schema_errors(data, field):
    """Missing and out-of-range fields are reported by name."""
    with pytest.raises(ValidationError) as error:
        load_channel(data)
    assert field in error.value.messages


def test_invalid_json(tmp_path):
    """Syntax errors carry their position."""
    path = tmp_path / "broken.json"
    path.write_text('{"kind": "dm",\n  "state_pmf": [0.5, 0.5,]\n}')
    with pytest.raises(InvalidArgumentError) as error:
        load_channel_file(str(path))
    assert error.value.field.startswith("line 2")


def test_missing_file(tmp_path):
    """Unreadable files are invalid arguments."""
    with pytest.raises(InvalidArgumentError):
        load_channel_file(str(tmp_path / "absent.json"))


def test_unwritable_channel_file(example1, tmp_path):
    """Output errors name the path."""
    with pytest.raises(OutputError):
        save_channel_file(example1, str(tmp_path / "missing" / "c.json"))


def test_plain_values():
    """Arrays, numpy scalars and dataclasses become JSON values."""
    value = plain({"a": np.array([1.0, 2.0]), "b": np.int64(3),
                   "c": (np.float64(0.5),)})
    assert value == {"a": [1.0, 2.0], "b": 3, "c": [0.5]}
    assert json.dumps(plain(BinaryModuloParams(0.1, 0.1, 0.1)))


def test_rate_result_schema(example1):
    """Reports carry the certificate."""
    data = RateResultSchema().dump(no_si_baseline(example1))
    assert data["kind"] == "no_si"
    assert data["binding_term"] == 1
    assert data["certificate"]["x_r"] == 0
    assert len(data["certificate"]["p_x"]) == 2
    json.dumps(data)


def test_validation_report_schema(example1):
    """Validation reports list their terms."""
    inner = InnerDistribution.degenerate([0.85, 0.15], [0.85, 0.15], 2)
    report = validate_spec(example1, inner, n=1000, seed=0, tol=0.5)
    data = ValidationReportSchema().dump(report)
    assert data["n"] == 1000
    assert [t["name"] for t in data["terms"]] == ["t1", "t2", "t3"]
    assert "delta" in data["terms"][0]


def _table():
    return SweepTable("c_sr", ("inner_bound", "cutset"),
                      ((0.0, 0.5, 1.0), (1.0, 0.75, 1.0)))


def test_write_sweep_csv():
    """Header row, then six decimals per value."""
    stream = io.StringIO()
    write_sweep_csv(_table(), stream)
    assert stream.getvalue() == (
        "c_sr,inner_bound,cutset\n"
        "0.000000,0.500000,1.000000\n"
        "1.000000,0.750000,1.000000\n"
    )


def test_plot_script_uses_relative_path(tmp_path):
    """The script finds the CSV next to itself."""
    csv_path = tmp_path / "curves.csv"
    script = tmp_path / "plot_curves.py"
    save_sweep_csv(_table(), str(csv_path))
    save_plot_script(_table(), str(csv_path), str(script))
    content = script.read_text()
    assert "'curves.csv'" in content
    assert "matplotlib" in content
    assert str(tmp_path) not in content
    assert csv_path.read_text().startswith("c_sr,")


def test_unwritable_csv(tmp_path):
    """CSV output errors are output errors."""
    with pytest.raises(OutputError):
        save_sweep_csv(_table(), str(tmp_path / "missing" / "t.csv"))


def _channel_jsonschema():
    path = os.path.join(os.path.dirname(relaycap.__file__), "jsonschemas",
                        "channel-v1.0.0.json")
    with open(path) as stream:
        return json.load(stream)


@pytest.mark.parametrize("filename", sorted(
    os.path.basename(p) for p in glob.glob(datadir_path("*.json"))
))
def test_data_files_follow_jsonschema(filename):
    """Every channel file in the test data is a ChannelFile document."""
    jsonschema.validate(load_json_from_datadir(filename),
                        _channel_jsonschema())


@pytest.mark.parametrize("spec", [
    DmChannelSpec(np.array([0.9, 0.1]), np.full((2, 2, 2, 2), 0.5)),
    GaussianSpec(1.0, 1.0, 1.0, 0.5, c_sr=0.2),
    BinaryModuloParams(0.15, 0.15, 0.1),
])
def test_dumped_channels_follow_jsonschema(spec):
    """Saved channels validate against the published schema."""
    jsonschema.validate(dump_channel(spec), _channel_jsonschema())


@pytest.mark.parametrize("document", [
    {"kind": "gaussian", "P": 1.0},
    {"kind": "binary_modulo", "p": 0.7, "p_r": 0.1, "p_s": 0.1},
    {"kind": "dm", "state_pmf": [1.0], "kernel": "xor"},
    {"kind": "erasure"},
])
def test_jsonschema_rejects_bad_documents(document):
    """Missing fields, ranges and unknown kinds are refused."""
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(document, _channel_jsonschema())
