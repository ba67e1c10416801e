# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""relaycap test helpers module."""

import json
import os
import re

import numpy as np


def load_json_from_datadir(filename, relpath=None):
    """Load JSON from dir."""
    if relpath:
        _data_dir = os.path.join(os.path.dirname(__file__), relpath, "data")
    else:
        _data_dir = os.path.join(os.path.dirname(__file__), "data")
    with open(os.path.join(_data_dir, filename), "r") as fp:
        return json.load(fp)


def datadir_path(filename):
    """Absolute path of a file in the data directory."""
    return os.path.join(os.path.dirname(__file__), "data", filename)


def reported_value(output, label):
    """Parse the number printed after ``label:`` in a text report."""
    match = re.search(r"^{0}: (-?[0-9.]+|inf)".format(re.escape(label)),
                      output, re.MULTILINE)
    assert match, "no {0!r} line in:\n{1}".format(label, output)
    return float(match.group(1))


def xor_kernel(flip=0.0):
    """Kernel of Y = X xor X_R xor S through a BSC(flip)."""
    kernel = np.zeros((2, 2, 2, 2))
    for s in range(2):
        for x in range(2):
            for xr in range(2):
                y = x ^ xr ^ s
                kernel[s, x, xr, y] = 1.0 - flip
                kernel[s, x, xr, 1 - y] += flip
    return kernel
