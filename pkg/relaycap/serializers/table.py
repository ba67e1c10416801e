# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Sweep table CSV writer and companion plot script."""

import csv
import os

from relaycap.errors import OutputError

PLOT_SCRIPT = '''\
"""Plot {csv_name}; generated by relaycap."""

import csv
import os

import matplotlib.pyplot as plt

HERE = os.path.dirname(os.path.abspath(__file__))

with open(os.path.join(HERE, {csv_path!r}), newline="") as stream:
    rows = list(csv.reader(stream))

header, data = rows[0], rows[1:]
axis = [float(row[0]) for row in data]
for index, name in enumerate(header[1:], start=1):
    plt.plot(axis, [float(row[index]) for row in data], label=name)
plt.xlabel({axis_label!r})
plt.ylabel("rate (bits/channel use)")
plt.legend()
plt.grid(True)
plt.savefig(os.path.join(HERE, {image_name!r}))
'''


def _format(value):
    return "{0:.6f}".format(value)


def write_sweep_csv(table, stream):
    """Write the header row and one row per axis value, 6 decimals."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(table.header)
    for row in table.rows:
        writer.writerow([_format(v) for v in row])


def save_sweep_csv(table, path):
    """Write a sweep table to ``path``."""
    try:
        with open(path, "w", newline="") as stream:
            write_sweep_csv(table, stream)
    except OSError as error:
        raise OutputError(field=str(path), message=error.strerror)


def save_plot_script(table, csv_path, script_path):
    """Write a matplotlib script reading ``csv_path`` by relative path."""
    folder = os.path.dirname(os.path.abspath(script_path))
    relative = os.path.relpath(os.path.abspath(csv_path), folder)
    stem = os.path.splitext(os.path.basename(csv_path))[0]
    content = PLOT_SCRIPT.format(
        csv_name=os.path.basename(csv_path),
        csv_path=relative,
        axis_label=table.axis,
        image_name=stem + ".png",
    )
    try:
        with open(script_path, "w") as stream:
            stream.write(content)
    except OSError as error:
        raise OutputError(field=str(script_path), message=error.strerror)
