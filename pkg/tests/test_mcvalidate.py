# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Test the Monte Carlo plug-in oracle."""

import json
import logging

import numpy as np
import pytest

from relaycap.dmrates import DmChannelSpec, InnerDistribution, \
    default_inner_distribution
from relaycap.errors import InvalidArgumentError
from relaycap.mcvalidate import empirical_cmi, empirical_pmf, \
    estimator_sigma, plug_in_bias, sample_joint, validate_spec
from relaycap.probcore import JointPmf, VariableId, assemble_joint, \
    conditional_mutual_information
from relaycap.serializers.schema import ValidationReportSchema


def _small_pmf():
    probs = np.array([[0.1, 0.2, 0.0], [0.3, 0.15, 0.25]])
    return JointPmf((VariableId("A", 2), VariableId("B", 3)), probs)


def _random_instance(seed):
    """A random 2-state channel and random inner factors."""
    rng = np.random.default_rng(seed)

    def rows(*shape):
        values = rng.random(shape) + 0.05
        return values / values.sum(axis=-1, keepdims=True)

    spec = DmChannelSpec(rows(2), rows(2, 2, 2, 2), c_sr=0.1, c_rs=0.2)
    inner = InnerDistribution(rows(2), rows(2, 2), rows(2, 2),
                              rows(2, 2, 2, 2))
    return spec, inner


def test_sample_joint_is_reproducible():
    """Same seed, same rows; columns stay inside the alphabets."""
    pmf = _small_pmf()
    first = sample_joint(pmf, 5000, seed=3, chunk_size=1000)
    second = sample_joint(pmf, 5000, seed=3, chunk_size=1000)
    assert np.array_equal(first.columns, second.columns)
    assert first.n == 5000
    assert first.column("A").max() <= 1
    assert first.column("B").max() <= 2
    # B = 2 never occurs with A = 0
    mask = first.column("A") == 0
    assert not np.any(first.column("B")[mask] == 2)


def test_sample_joint_ignores_thread_count():
    """Chunks carry their own seeds, so threads do not matter."""
    pmf = _small_pmf()
    single = sample_joint(pmf, 4000, seed=11, chunk_size=500, threads=1)
    parallel = sample_joint(pmf, 4000, seed=11, chunk_size=500, threads=4)
    assert np.array_equal(single.columns, parallel.columns)


@pytest.mark.parametrize("n, seed", [(0, 1), (1.5, 1), (10, -1)])
def test_sample_joint_validation(n, seed):
    """Sample counts and seeds are checked."""
    with pytest.raises(InvalidArgumentError):
        sample_joint(_small_pmf(), n, seed=seed)


def test_unknown_column():
    """Batches only know their own variables."""
    batch = sample_joint(_small_pmf(), 10, seed=0)
    with pytest.raises(InvalidArgumentError):
        batch.column("C")


def test_empirical_pmf_converges():
    """The joint type approaches the pmf."""
    pmf = _small_pmf()
    estimate = empirical_pmf(sample_joint(pmf, 200000, seed=1))
    assert estimate.probs.sum() == pytest.approx(1.0)
    assert np.allclose(estimate.probs, pmf.probs, atol=0.01)


def test_bias_and_sigma_shrink_with_n():
    """Both error scales decrease in the sample count."""
    pmf = _small_pmf()
    assert plug_in_bias(pmf, {"A"}, {"B"}, None, 1000) == pytest.approx(
        2.0 / (2000 * np.log(2.0)))
    assert plug_in_bias(pmf, {"A"}, {"B"}, None, 10 ** 6) < \
        plug_in_bias(pmf, {"A"}, {"B"}, None, 1000)
    assert estimator_sigma(pmf, {"A"}, {"B"}, None, 10 ** 6) < \
        estimator_sigma(pmf, {"A"}, {"B"}, None, 1000)


@pytest.mark.parametrize("seed", range(10))
def test_plug_in_matches_analytic_terms(seed):
    """Each component is within its bias bound plus 4 sigma."""
    spec, inner = _random_instance(seed)
    pmf = assemble_joint(spec, inner)
    n = 10 ** 6
    batch = sample_joint(pmf, n, seed=seed)
    for a, b, c in (
        ({"X"}, {"Y"}, {"XR", "V", "U"}),
        ({"X", "XR", "V"}, {"Y"}, None),
        ({"X", "XR", "V"}, {"Y"}, {"U"}),
        ({"V"}, {"S"}, {"XR", "U"}),
    ):
        analytic = conditional_mutual_information(pmf, a, b, c)
        estimate = empirical_cmi(batch, a, b, c)
        margin = (plug_in_bias(pmf, a, b, c, n)
                  + 4.0 * estimator_sigma(pmf, a, b, c, n))
        assert abs(estimate - analytic) <= margin


def test_validate_spec_report(example1):
    """The default distribution passes with enough samples."""
    inner = default_inner_distribution(example1)
    report = validate_spec(example1, inner, n=200000, seed=7, tol=0.05)
    assert [t.name for t in report.terms] == ["t1", "t2", "t3"]
    assert report.n == 200000 and report.seed == 7
    assert report.passed
    assert not report.insufficient_samples
    for term in report.terms:
        assert term.delta == term.empirical - term.analytic
        assert abs(term.delta) <= term.bias_bound + 4.0 * term.sigma


def test_validate_spec_flags_small_samples(example1, caplog):
    """A bias bound above the tolerance is reported and logged."""
    inner = default_inner_distribution(example1)
    with caplog.at_level(logging.WARNING, logger="relaycap.mcvalidate"):
        report = validate_spec(example1, inner, n=10, seed=0, tol=1e-6)
    assert report.insufficient_samples
    assert "insufficient samples" in caplog.text


def test_validate_spec_rejects_negative_tolerance(example1):
    """Tolerances are nonnegative."""
    with pytest.raises(InvalidArgumentError):
        validate_spec(example1, default_inner_distribution(example1),
                      n=10, tol=-1.0)


def test_validate_spec_zero_tolerance_fails(example1):
    """Nothing is strictly within a zero tolerance."""
    inner = default_inner_distribution(example1)
    report = validate_spec(example1, inner, n=20000, seed=7, tol=0.0)
    assert not report.passed
    assert not any(term.passed for term in report.terms)


def test_validate_spec_is_reproducible():
    """Identical inputs give byte-identical reports, whatever the threads."""
    spec, inner = _random_instance(4)
    first = validate_spec(spec, inner, n=50000, seed=5, tol=0.05)
    second = validate_spec(spec, inner, n=50000, seed=5, tol=0.05,
                           threads=3)
    assert first == second
    schema = ValidationReportSchema()
    assert json.dumps(schema.dump(first), sort_keys=True) == \
        json.dumps(schema.dump(second), sort_keys=True)
