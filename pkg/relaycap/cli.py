# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""CLI for relaycap.

Exit codes: 0 on success, 2 on an invalid channel file or argument, 3 on a
violated precondition or an infeasible cost budget, 4 on a singular
covariance or when an output file cannot be written.
"""

import functools
import io
import json
import logging
import sys
from dataclasses import dataclass
from typing import Optional

import click
from marshmallow import ValidationError

from relaycap import config
from relaycap.dmrates import SearchConfig, capacity_full_message_coop, \
    capacity_no_coop, capacity_state_coop, check_prop3_conditions, \
    cooperation_regime, cutset_bound, default_inner_distribution, \
    max_relay_output, maximize_inner_bound, rate_state_coop_only, \
    relay_ignores_state_rate
from relaycap.errors import InfeasibleError, InvalidArgumentError, \
    NumericDegeneracyError, OutputError, PreconditionError
from relaycap.gaussrates import CURVES, PRESETS, \
    cooperation_thresholds, full_coop_bound, gaussian_cutset_bound, \
    maximize_gaussian_inner_bound, no_coop_capacity, no_si_rate, \
    preset_sweep, sweep
from relaycap.mcvalidate import validate_spec
from relaycap.modulo import BinaryModuloParams, build_channel, \
    capacity_closed_form, capacity_terms, no_si_closed_form
from relaycap.serializers.schema import RateResultSchema, \
    ValidationReportSchema, load_channel_file, plain
from relaycap.serializers.table import save_plot_script, save_sweep_csv, \
    write_sweep_csv

HANDLER_NAME = "relaycap-cli"

EXIT_CODES = (
    ((InvalidArgumentError, ValidationError), 2),
    ((PreconditionError, InfeasibleError), 3),
    ((NumericDegeneracyError, OutputError), 4),
)


@dataclass
class CliOptions:
    """Options shared by every command."""

    seed: int
    threads: int
    out: Optional[str]


def _messages(error):
    if isinstance(error, ValidationError):
        flat = []

        def walk(messages, path):
            if isinstance(messages, dict):
                for key, value in messages.items():
                    walk(value, path + [str(key)])
            elif isinstance(messages, list):
                for value in messages:
                    walk(value, path)
            else:
                flat.append("{0}: {1}".format(".".join(path), messages))

        walk(error.messages, [])
        return "[INVALID CHANNEL FILE] " + "; ".join(flat)
    return str(error)


def handle_errors(f):
    """Map library errors to the documented exit codes."""
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except tuple(e for errors, _ in EXIT_CODES for e in errors) as error:
            code = next(c for errors, c in EXIT_CODES
                        if isinstance(error, errors))
            click.secho(_messages(error), fg="red", err=True)
            sys.exit(code)

    return wrapper


def _emit(options, text):
    """Print ``text`` or write it to the ``--out`` file."""
    if not options.out:
        click.echo(text)
        return
    try:
        with open(options.out, "w") as stream:
            stream.write(text + "\n")
    except OSError as error:
        raise OutputError(field=options.out, message=error.strerror)


def _search(options, restarts, seed):
    return SearchConfig(
        restarts=restarts,
        seed=options.seed if seed is None else seed,
        threads=options.threads,
    )


def _rounded(value):
    if isinstance(value, float):
        return round(value, 6)
    if isinstance(value, dict):
        return {k: _rounded(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_rounded(v) for v in value]
    return value


def _rate_report(title, result, extra=()):
    lines = [
        "{0}: {1:.4f} bits/channel use".format(title, result.rate),
        "binding term: t{0}".format(result.binding_term),
        "terms: " + " ".join(
            "t{0}={1:.4f}".format(i, t)
            for i, t in enumerate(result.terms, start=1)
        ),
    ]
    lines.extend(extra)
    lines.append("evaluations: {0}".format(
        result.optimizer_trace.evaluations))
    certificate = _rounded(plain(result.argmax))
    lines.append("certificate:")
    if isinstance(certificate, dict):
        for key, value in certificate.items():
            lines.append("  {0}: {1}".format(key, json.dumps(value)))
    else:
        lines.append("  {0}".format(json.dumps(certificate)))
    return "\n".join(lines)


def _json_report(result, **extra):
    data = RateResultSchema().dump(result)
    data.update(extra)
    return json.dumps(data, indent=2, sort_keys=True)


def _discrete(channel):
    """DM channel of a loaded file, building the binary example if needed."""
    if isinstance(channel, BinaryModuloParams):
        return build_channel(channel)
    return channel


format_option = click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
    help="Report format.",
)
restarts_option = click.option(
    "--restarts",
    type=click.IntRange(min=1),
    default=config.RELAYCAP_SEARCH_RESTARTS,
    show_default=True,
    help="Starting points of the multi-start search.",
)


@click.group()
@click.option(
    "--seed",
    type=click.IntRange(min=0, max=2 ** 64 - 1),
    default=config.RELAYCAP_SEED,
    show_default=True,
    help="Seed of the starting points and of the sampler.",
)
@click.option(
    "--threads",
    type=click.IntRange(min=1),
    default=config.RELAYCAP_THREADS,
    show_default=True,
    help="Worker threads; results do not depend on it.",
)
@click.option(
    "--out",
    type=click.Path(dir_okay=False),
    default=None,
    help="Write the report to this file instead of stdout.",
)
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"],
                      case_sensitive=False),
    default=config.RELAYCAP_LOG_LEVEL,
    show_default=True,
)
@click.pass_context
def relaycap(ctx, seed, threads, out, log_level):
    """Rates, bounds and capacities of relay channels with conferencing."""
    handler = logging.StreamHandler()
    handler.set_name(HANDLER_NAME)
    handler.setFormatter(logging.Formatter(config.RELAYCAP_LOG_FORMAT))
    logger = logging.getLogger("relaycap")
    for old in [h for h in logger.handlers if h.get_name() == HANDLER_NAME]:
        logger.removeHandler(old)
    logger.addHandler(handler)
    logger.setLevel(log_level.upper())
    ctx.obj = CliOptions(seed, threads, out)


@relaycap.command()
@click.argument("channel_file", type=click.Path(dir_okay=False))
@click.option("--card-u", type=click.IntRange(min=1), default=None,
              help="Cardinality of U  [default: 2 with a link, else 1]")
@click.option("--card-v", type=click.IntRange(min=1), default=None,
              help="Cardinality of V  [default: |S| + 1]")
@restarts_option
@click.option("--seed", type=click.IntRange(min=0), default=None,
              help="Overrides the group seed.")
@click.option("--no-state", is_flag=True,
              help="Relay ignores its state (constant V).")
@format_option
@click.pass_obj
@handle_errors
def rate(options, channel_file, card_u, card_v, restarts, seed, no_state,
         output_format):
    """Maximize the achievable rate of a channel file."""
    channel = load_channel_file(channel_file)
    if channel.kind == "gaussian":
        if no_state:
            value = no_si_rate(channel)
            if output_format == "json":
                text = json.dumps({"kind": "gaussian_no_si", "rate": value},
                                  indent=2, sort_keys=True)
            else:
                text = "no-state rate: {0:.4f} bits/channel use".format(
                    value)
            _emit(options, text)
            return
        result = maximize_gaussian_inner_bound(channel)
    else:
        spec = _discrete(channel)
        search = _search(options, restarts, seed)
        if no_state:
            result = relay_ignores_state_rate(spec, card_u, search)
        else:
            result = maximize_inner_bound(spec, card_u, card_v, search)
    if output_format == "json":
        _emit(options, _json_report(result))
    else:
        _emit(options, _rate_report("rate", result))


@relaycap.command()
@click.argument("channel_file", type=click.Path(dir_okay=False))
@restarts_option
@format_option
@click.pass_obj
@handle_errors
def bound(options, channel_file, restarts, output_format):
    """Evaluate the cut-set upper bound of a channel file."""
    channel = load_channel_file(channel_file)
    if channel.kind == "gaussian":
        value = gaussian_cutset_bound(channel)
        if output_format == "json":
            text = json.dumps({"kind": "gaussian_cutset", "rate": value},
                              indent=2, sort_keys=True)
        else:
            text = "cut-set bound: {0:.4f} bits/channel use".format(value)
            if channel.N0 == 0:
                text += "\nN0 = 0: equals the full-cooperation capacity " \
                    "{0:.4f}".format(full_coop_bound(channel))
        _emit(options, text)
        return
    result = cutset_bound(_discrete(channel),
                          _search(options, restarts, None))
    if output_format == "json":
        _emit(options, _json_report(result))
    else:
        _emit(options, _rate_report("cut-set bound", result))


def _gaussian_capacity(channel, case):
    """(capacity, required link name, required value) of a Gaussian case."""
    c_sr_needed, c_rs_needed = cooperation_thresholds(channel)
    if case == "no_coop":
        if channel.N0 != 0 or channel.c_sr != 0 or channel.c_rs != 0:
            raise PreconditionError(
                condition="N0 = 0, C_SR = C_RS = 0",
                message="no-cooperation capacity needs a noiseless "
                "destination and unused links",
            )
        return no_coop_capacity(channel), None, None
    if case == "message":
        return full_coop_bound(channel), "c_sr", c_sr_needed
    if channel.N0 != 0:
        raise PreconditionError(
            condition="N0 = 0",
            message="state cooperation capacity needs N0 = 0",
        )
    return full_coop_bound(channel), "c_rs", c_rs_needed


@relaycap.command()
@click.argument("channel_file", type=click.Path(dir_okay=False))
@click.option("--case", "case",
              type=click.Choice(["no_coop", "message", "state"]),
              required=True, help="Special case whose capacity is computed.")
@restarts_option
@format_option
@click.pass_obj
@handle_errors
def capacity(options, channel_file, case, restarts, output_format):
    """Capacity of a special case, after checking its hypotheses."""
    channel = load_channel_file(channel_file)
    if channel.kind == "gaussian":
        value, link, needed = _gaussian_capacity(channel, case)
        data = {"kind": "gaussian_" + case, "rate": value}
        lines = ["capacity: {0:.4f} bits/channel use".format(value)]
        if link:
            holds = getattr(channel, link) >= needed
            data.update({"required_" + link: needed, "holds": holds})
            lines.append("required {0}: {1:.4f} ({2})".format(
                link, needed, "met" if holds else "not met"))
        if output_format == "json":
            _emit(options, json.dumps(data, indent=2, sort_keys=True))
        else:
            _emit(options, "\n".join(lines))
        return

    spec = _discrete(channel)
    search = _search(options, restarts, None)
    extra, lines = {"regime": cooperation_regime(spec)}, []
    title = "capacity"
    if case == "no_coop":
        result = capacity_no_coop(spec, search)
    elif case == "message":
        result, needed = capacity_full_message_coop(spec, search)
        extra.update(required_c_sr=needed, holds=spec.c_sr >= needed)
        lines.append("required c_sr: {0:.4f} ({1})".format(
            needed, "met" if extra["holds"] else "not met"))
    else:
        if check_prop3_conditions(spec)[0]:
            result = capacity_state_coop(spec, search)
            needed = max_relay_output(spec, search)
        else:
            # no capacity result for noisy kernels
            result, needed = rate_state_coop_only(spec, search=search)
            title = "rate"
        extra.update(required_c_rs=needed, holds=spec.c_rs >= needed)
        lines.append("required c_rs: {0:.4f} ({1})".format(
            needed, "met" if extra["holds"] else "not met"))
    lines.append("regime: {0}".format(extra["regime"]))
    if output_format == "json":
        _emit(options, _json_report(result, **extra))
    else:
        _emit(options, _rate_report(title, result, lines))


@relaycap.command("sweep")
@click.argument("channel_file", type=click.Path(dir_okay=False),
                required=False)
@click.option("--preset", type=click.Choice(sorted(PRESETS)), default=None,
              help="Named Gaussian sweep; replaces CHANNEL_FILE.")
@click.option("--axis", type=click.Choice(["c_sr", "c_rs", "gamma_db"]),
              default=None)
@click.option("--from", "start", type=float, default=None)
@click.option("--to", "stop", type=float, default=None)
@click.option("--steps", type=click.IntRange(min=1), default=None)
@click.option("--curves", default=",".join(CURVES), show_default=True,
              help="Comma-separated curves.")
@click.option("--out", "csv_out", type=click.Path(dir_okay=False),
              default=None, help="CSV file; overrides the group --out.")
@click.option("--plot-script", type=click.Path(dir_okay=False),
              default=None, help="Also write a matplotlib script.")
@click.pass_obj
@handle_errors
def sweep_command(options, channel_file, preset, axis, start, stop, steps,
                  curves, csv_out, plot_script):
    """Tabulate Gaussian rate curves along one axis as CSV."""
    curves = tuple(c.strip() for c in curves.split(",") if c.strip())
    if preset:
        table = preset_sweep(preset, steps, curves, threads=options.threads)
    else:
        if not channel_file or axis is None or start is None \
                or stop is None:
            raise InvalidArgumentError(
                field="sweep",
                message="give CHANNEL_FILE, --axis, --from and --to, or "
                "--preset",
            )
        channel = load_channel_file(channel_file)
        if channel.kind != "gaussian":
            raise InvalidArgumentError(
                field="kind", message="sweeps need a gaussian channel file"
            )
        steps = steps or 11
        values = [start] if steps == 1 else [
            start + (stop - start) * i / (steps - 1) for i in range(steps)
        ]
        table = sweep(channel, axis, values, curves, threads=options.threads)

    path = csv_out or options.out
    if path:
        save_sweep_csv(table, path)
        if plot_script:
            save_plot_script(table, path, plot_script)
    else:
        if plot_script:
            raise InvalidArgumentError(
                field="plot_script", message="needs a CSV file (--out)"
            )
        buffer = io.StringIO()
        write_sweep_csv(table, buffer)
        click.echo(buffer.getvalue(), nl=False)


@relaycap.command()
@click.argument("channel_file", type=click.Path(dir_okay=False),
                required=False)
@click.option("--p", type=float, default=None, help="Source budget.")
@click.option("--p-r", type=float, default=None, help="Relay budget.")
@click.option("--p-s", type=float, default=None, help="State parameter.")
@format_option
@click.pass_obj
@handle_errors
def modulo(options, channel_file, p, p_r, p_s, output_format):
    """Closed forms of the binary modulo-additive channel."""
    if channel_file:
        params = load_channel_file(channel_file)
        if not isinstance(params, BinaryModuloParams):
            raise InvalidArgumentError(
                field="kind", message="needs a binary_modulo channel file"
            )
    elif None in (p, p_r, p_s):
        raise InvalidArgumentError(
            field="modulo", message="give CHANNEL_FILE or --p, --p-r, --p-s"
        )
    else:
        params = BinaryModuloParams(p, p_r, p_s)
    value = capacity_closed_form(params)
    no_si = no_si_closed_form(params)
    terms = capacity_terms(params)
    if output_format == "json":
        _emit(options, json.dumps({
            "capacity": value,
            "no_si": no_si,
            "gain": value - no_si,
            "terms": list(terms),
        }, indent=2, sort_keys=True))
        return
    _emit(options, "\n".join([
        "capacity: {0:.4f} bits/channel use".format(value),
        "terms: t1={0:.4f} t2={1:.4f}".format(*terms),
        "no-state rate: {0:.4f} bits/channel use".format(no_si),
        "gain: {0:.4f}".format(value - no_si),
    ]))


@relaycap.command()
@click.argument("channel_file", type=click.Path(dir_okay=False))
@click.option("--n", type=click.IntRange(min=1),
              default=config.RELAYCAP_MC_SAMPLES, show_default=True,
              help="Number of samples.")
@click.option("--tol", type=click.FloatRange(min=0),
              default=config.RELAYCAP_MC_TOLERANCE, show_default=True,
              help="Pass tolerance in bits.")
@click.option("--card-u", type=click.IntRange(min=1), default=1,
              show_default=True)
@click.option("--card-v", type=click.IntRange(min=1), default=1,
              show_default=True)
@format_option
@click.pass_obj
@handle_errors
def validate(options, channel_file, n, tol, card_u, card_v, output_format):
    """Check the inner-bound terms against plug-in estimates."""
    channel = load_channel_file(channel_file)
    if channel.kind == "gaussian":
        raise InvalidArgumentError(
            field="kind", message="plug-in validation needs a discrete channel"
        )
    spec = _discrete(channel)
    inner = default_inner_distribution(spec, card_u, card_v)
    report = validate_spec(spec, inner, n, options.seed, tol,
                           threads=options.threads)
    if output_format == "json":
        _emit(options, json.dumps(ValidationReportSchema().dump(report),
                                  indent=2, sort_keys=True))
    else:
        lines = ["n: {0}, seed: {1}, tol: {2:g}".format(
            report.n, report.seed, report.tol)]
        for term in report.terms:
            lines.append(
                "{0}: analytic={1:.6f} empirical={2:.6f} delta={3:+.6f} "
                "bias<={4:.6f} sigma={5:.6f} {6}".format(
                    term.name, term.analytic, term.empirical, term.delta,
                    term.bias_bound, term.sigma,
                    "PASS" if term.passed else "FAIL",
                )
            )
        if report.insufficient_samples:
            lines.append("warning: insufficient samples, bias bound "
                         "exceeds tolerance")
        lines.append("result: {0}".format(
            "PASS" if report.passed else "FAIL"))
        _emit(options, "\n".join(lines))
